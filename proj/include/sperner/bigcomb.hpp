#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sperner {

/// Arbitrary-precision non-negative integer.
using BigNat = mpz_class;

/// Exact binomial coefficient; 0 unless 0 <= k <= n.
///
/// Running product C(n, i+1) = C(n, i) * (n - i) / (i + 1), each division
/// exact, over i < min(k, n - k).
BigNat binom(std::int64_t n, std::int64_t k);

/// Central binomial C(n, floor(n/2)): the largest antichain in Pow([n]).
/// Zero for negative n.
BigNat fsb(std::int64_t n);

/// An increasing, non-bounded function N0 -> BigNat.
struct MonotoneFn {
  std::string name;
  std::function<BigNat(std::uint64_t)> eval;
};

/// Least n with k <= f(n).
///
/// Brackets the answer by galloping n = 0, 1, 2, 4, 8, ... and then bisects,
/// so f is evaluated O(log answer) times. More than `max_doublings` gallop
/// steps throws ResourceLimit (guards against a secretly bounded f).
std::uint64_t left_adjoint(const MonotoneFn& f, const BigNat& k, std::size_t max_doublings = 48);

/// Least n in N0 with k <= fsb(n). Throws BadInput for k = 0.
std::uint64_t afsb(const BigNat& k);

MonotoneFn fsb_fn();

/// Parses "12345" or scientific shorthand "3e606" (= 3 * 10^606), exactly.
BigNat parse_bignat(std::string_view text);

/// Decimal digits grouped by threes, e.g. "1 337 896".
std::string group_thousands(const BigNat& v);

/// Round-half-to-even rendering of v with `significant` digits as
/// "d.ddd...e<exp>", e.g. 2.137e606.
std::string to_scientific(const BigNat& v, int significant);

/// Decimal expansion of num / den rounded half-to-even to `digits` places.
std::string rounded_ratio(const BigNat& num, const BigNat& den, int digits);

/// Number of decimal digits of v (1 for zero).
std::size_t decimal_digits(const BigNat& v);

}  // namespace sperner
