#include "sperner/estimates.hpp"

#include "sperner/errors.hpp"

namespace sperner {

namespace {

using i64 = std::int64_t;

// Sum over j of 3^j C(i,j) C(N, K0 + j) for fixed i, walking the terms by
// their ratio 3(i-j)(N-K) / ((j+1)(K+1)); each step divides exactly because
// both neighbours are integers.
BigNat w_inner_sum(i64 i, i64 big_n, i64 k0) {
  BigNat sum = 0;
  i64 j = k0 < 0 ? -k0 : 0;
  if (j > i || k0 + j > big_n) return sum;
  BigNat three_pow;
  mpz_ui_pow_ui(three_pow.get_mpz_t(), 3, static_cast<unsigned long>(j));
  BigNat term = three_pow * binom(i, j) * binom(big_n, k0 + j);
  for (;;) {
    sum += term;
    const i64 k = k0 + j;
    if (j == i || k == big_n) break;
    term *= static_cast<unsigned long>(3 * (i - j) * (big_n - k));
    mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>((j + 1) * (k + 1)));
    ++j;
  }
  return sum;
}

}  // namespace

std::string pattern_name(Pattern p) { return p == Pattern::W ? "W" : "V"; }

std::uint64_t w_base_size(std::uint64_t n) {
  if (n == 3 || n == 5 || n == 7) return (n - 3) / 2;
  return n == 0 ? 0 : (n - 1) / 2;
}

BigNat w_upper_estimate(std::uint64_t n) {
  if (n == 0) return 0;
  const auto nn = static_cast<i64>(n);
  const i64 den = 3 * nn - 2 - 2 * (nn / 2);
  BigNat num = fsb(nn - 1) * static_cast<unsigned long>(n);
  BigNat q;
  mpz_fdiv_q_ui(q.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(den));
  return q;
}

BigNat w_lower_estimate(std::uint64_t n) {
  const auto nn = static_cast<i64>(n);
  const i64 h = static_cast<i64>(w_base_size(n));
  BigNat sum = 0;
  for (i64 i = 0; i < nn / 3; ++i) sum += w_inner_sum(i, nn - 3 * i - 3, h - 3 * i);
  return sum;
}

BigNat v_lower_estimate(std::uint64_t n) {
  if (n < 2) return 0;
  const auto nn = static_cast<i64>(n);
  const i64 c = (nn - 1) / 2;  // ceil((n-2)/2)
  BigNat sum = 0;
  for (i64 i = 0; i <= c / 2; ++i) sum += binom(nn - 2 - 2 * i, c - 2 * i);
  return sum;
}

BigNat v_upper_estimate(std::uint64_t n) {
  if (n < 2) return 0;
  const auto nn = static_cast<i64>(n);
  const i64 f = nn / 2;
  const i64 den = 2 * nn - f - 1;
  const i64 factor = den + (2 * nn - 3 * f - 1);
  BigNat num = binom(nn - 2, (nn - 2) / 2) * static_cast<unsigned long>(factor);
  BigNat q;
  mpz_fdiv_q_ui(q.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(den));
  return q;
}

BigNat lower_estimate(Pattern p, std::uint64_t n) {
  return p == Pattern::W ? w_lower_estimate(n) : v_lower_estimate(n);
}

BigNat upper_estimate(Pattern p, std::uint64_t n) {
  return p == Pattern::W ? w_upper_estimate(n) : v_upper_estimate(n);
}

std::uint64_t pattern_dimension(Pattern p) { return p == Pattern::W ? 3 : 2; }

MonotoneFn lower_estimate_fn(Pattern p) {
  return {"loS(" + pattern_name(p) + ",-)", [p](std::uint64_t n) {
            return n < pattern_dimension(p) ? BigNat(0) : lower_estimate(p, n);
          }};
}

MonotoneFn upper_estimate_fn(Pattern p) {
  return {"upS(" + pattern_name(p) + ",-)", [p](std::uint64_t n) {
            return n < pattern_dimension(p) ? BigNat(0) : upper_estimate(p, n);
          }};
}

EstimatePair sp_bracket(Pattern p, std::uint64_t n) {
  if (n < pattern_dimension(p))
    throw BadInput("estimates for " + pattern_name(p) + " need n >= " + std::to_string(pattern_dimension(p)));
  return {n, lower_estimate(p, n), upper_estimate(p, n)};
}

std::pair<std::uint64_t, std::uint64_t> asp_bracket(Pattern p, const BigNat& k) {
  if (k <= 0) throw BadInput("k must be at least 1");
  return {left_adjoint(upper_estimate_fn(p), k), left_adjoint(lower_estimate_fn(p), k)};
}

std::string ratio_report(Pattern p, std::uint64_t n, int digits) {
  return rounded_ratio(upper_estimate(p, n), lower_estimate(p, n), digits);
}

}  // namespace sperner
