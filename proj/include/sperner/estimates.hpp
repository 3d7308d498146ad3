#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "sperner/bigcomb.hpp"

namespace sperner {

enum class Pattern { W, V };

/// "W" / "V".
std::string pattern_name(Pattern p);

// Raw estimator formulas, defined for every n >= 1 (V: n >= 2; smaller n
// gives 0). Out-of-range binomials contribute nothing.

/// floor(n * fsb(n-1) / (3n - 2 - 2*floor(n/2))).
BigNat w_upper_estimate(std::uint64_t n);
/// Sum over i < floor(n/3), j <= i of 3^j C(i,j) C(n-3i-3, h+j-3i), with
/// h = w_base_size(n).
BigNat w_lower_estimate(std::uint64_t n);
/// Sum over i <= floor(c/2) of C(n-2-2i, c-2i), c = ceil((n-2)/2).
BigNat v_lower_estimate(std::uint64_t n);
/// floor(((2n-f-1) + (2n-3f-1)) * C(n-2, floor((n-2)/2)) / (2n-f-1)),
/// f = floor(n/2).
BigNat v_upper_estimate(std::uint64_t n);

/// |Z| shared by every eligible set vector of size n: floor((n-1)/2), or
/// (n-3)/2 for n in {3, 5, 7}.
std::uint64_t w_base_size(std::uint64_t n);

BigNat lower_estimate(Pattern p, std::uint64_t n);
BigNat upper_estimate(Pattern p, std::uint64_t n);

/// Least n with Sp(pattern, n) > 0 (3 for W, 2 for V).
std::uint64_t pattern_dimension(Pattern p);

/// The estimates as functions on all of N0: below the embedding dimension Sp
/// is 0, so both are extended by 0 there (the raw upper formula is 1 at
/// n = 1, 2 for W). These are the functions handed to left_adjoint.
MonotoneFn lower_estimate_fn(Pattern p);
MonotoneFn upper_estimate_fn(Pattern p);

struct EstimatePair {
  std::uint64_t n = 0;
  BigNat lo, hi;
  [[nodiscard]] bool collapsed() const { return lo == hi; }
};

/// lo <= Sp(pattern, n) <= hi. Requires n >= 3 (W) or n >= 2 (V).
EstimatePair sp_bracket(Pattern p, std::uint64_t n);

/// (left adjoint of the upper estimate, left adjoint of the lower estimate):
/// lo <= Asp(pattern, k) <= hi. Requires k >= 1.
std::pair<std::uint64_t, std::uint64_t> asp_bracket(Pattern p, const BigNat& k);

/// upper/lower rounded half-to-even to `digits` places; "undefined" when the
/// lower estimate is 0.
std::string ratio_report(Pattern p, std::uint64_t n, int digits);

}  // namespace sperner
