#include "sperner/bigcomb.hpp"

#include <algorithm>
#include <cctype>

#include "sperner/errors.hpp"

namespace sperner {

BigNat binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigNat acc = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    acc *= static_cast<unsigned long>(n - i);
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(i + 1));
  }
  return acc;
}

BigNat fsb(std::int64_t n) {
  if (n < 0) return 0;
  return binom(n, n / 2);
}

std::uint64_t left_adjoint(const MonotoneFn& f, const BigNat& k, std::size_t max_doublings) {
  if (k <= f.eval(0)) return 0;
  std::uint64_t lo = 0;  // f(lo) < k
  std::uint64_t hi = 1;
  std::size_t doublings = 0;
  while (f.eval(hi) < k) {
    if (++doublings > max_doublings)
      throw ResourceLimit("left adjoint of " + f.name + ": no n <= " + std::to_string(hi) +
                          " reaches the target (is the function bounded?)");
    lo = hi;
    hi *= 2;
  }
  // invariant: f(lo) < k <= f(hi)
  while (hi - lo > 1) {
    const auto mid = lo + (hi - lo) / 2;
    if (f.eval(mid) < k)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

MonotoneFn fsb_fn() {
  return {"fsb", [](std::uint64_t n) { return fsb(static_cast<std::int64_t>(n)); }};
}

std::uint64_t afsb(const BigNat& k) {
  if (k <= 0) throw BadInput("afsb is defined for k >= 1");
  return left_adjoint(fsb_fn(), k);
}

BigNat parse_bignat(std::string_view text) {
  auto all_digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  const auto e = text.find_first_of("eE");
  const auto mantissa = text.substr(0, e);
  if (!all_digits(mantissa)) throw BadInput("not a non-negative integer: '" + std::string(text) + "'");
  BigNat value(std::string(mantissa), 10);
  if (e != std::string_view::npos) {
    const auto exponent = text.substr(e + 1);
    if (!all_digits(exponent) || exponent.size() > 6)
      throw BadInput("bad exponent in '" + std::string(text) + "'");
    BigNat scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, std::stoul(std::string(exponent)));
    value *= scale;
  }
  return value;
}

std::size_t decimal_digits(const BigNat& v) { return v.get_str(10).size(); }

std::string group_thousands(const BigNat& v) {
  const auto digits = v.get_str(10);
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0 && (digits.size() - i) % 3 == 0) out += ' ';
    out += digits[i];
  }
  return out;
}

namespace {

// floor(num / den) rounded half-to-even using the remainder.
BigNat round_half_even(const BigNat& num, const BigNat& den) {
  BigNat q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const int cmp = ::cmp(BigNat(2 * r), den);
  if (cmp > 0 || (cmp == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;
  return q;
}

BigNat pow10(unsigned long e) {
  BigNat p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, e);
  return p;
}

}  // namespace

std::string to_scientific(const BigNat& v, int significant) {
  if (significant < 1) throw BadInput("need at least one significant digit");
  if (v == 0) return "0";
  auto exponent = static_cast<long>(decimal_digits(v)) - 1;
  BigNat mant;
  if (exponent + 1 <= significant) {
    mant = v * pow10(static_cast<unsigned long>(significant - 1 - exponent));
  } else {
    mant = round_half_even(v, pow10(static_cast<unsigned long>(exponent + 1 - significant)));
    if (decimal_digits(mant) > static_cast<std::size_t>(significant)) {  // 9.99.. rounded up
      mant /= 10;
      ++exponent;
    }
  }
  const auto digits = mant.get_str(10);
  std::string out(1, digits[0]);
  if (digits.size() > 1) out += "." + digits.substr(1);
  out += "e" + std::to_string(exponent);
  return out;
}

std::string rounded_ratio(const BigNat& num, const BigNat& den, int digits) {
  if (den == 0) return "undefined";
  if (digits < 0) throw BadInput("digits must be non-negative");
  const auto scaled = round_half_even(num * pow10(static_cast<unsigned long>(digits)), den);
  auto text = scaled.get_str(10);
  if (digits == 0) return text;
  if (text.size() <= static_cast<std::size_t>(digits))
    text.insert(0, static_cast<std::size_t>(digits) + 1 - text.size(), '0');
  text.insert(text.size() - static_cast<std::size_t>(digits), ".");
  return text;
}

}  // namespace sperner
