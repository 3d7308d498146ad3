#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sperner/bigcomb.hpp"
#include "sperner/witness.hpp"

namespace sperner {

/// All order-embedded copies of a pattern in Pow([n]) (n <= 6). A copy is a
/// set of subsets, so assignments with the same image set are one vertex;
/// vertices are sorted by their canonical (sorted) image tuple. Subsets are
/// indexed by bit mask, so each copy is also a 64-bit mask over Pow([n]).
struct CopyGraph {
  std::size_t n = 0;
  std::vector<std::vector<Subset>> copies;  // indexed by pattern element
  std::vector<std::uint64_t> members;       // bit S set iff S is in the copy
  std::vector<std::uint64_t> related;       // subsets comparable with some member

  [[nodiscard]] std::size_t size() const { return copies.size(); }
  [[nodiscard]] bool unrelated(std::size_t a, std::size_t b) const {
    return a != b && (members[b] & related[a]) == 0;
  }
};

CopyGraph build_copy_graph(const Poset& u, std::size_t n);

struct OracleLimits {
  std::size_t max_n = 5;           // n = 6 is opt-in
  std::size_t max_pattern = 6;
  double time_budget_seconds = 0;  // 0: unlimited
};

struct ExhaustiveResult {
  std::uint64_t value = 0;  // maximum clique size, or best found when !exact
  bool exact = true;        // false when the time budget ran out
  UnrelatedFamily witness;
  std::uint64_t vertices = 0;
  std::uint64_t nodes = 0;  // branch-and-bound nodes expanded
};

/// Sp(U, n) as a maximum clique of the copy graph (branch and bound, greedy
/// colouring bound, degeneracy order). ResourceLimit past the limits.
ExhaustiveResult sp_exhaustive(const Poset& u, std::size_t n, const OracleLimits& limits = {});

// Permutation classes: pi is associated with X when the initial segment of
// pi up to the last position of an element of X lies inside X (subset
// reading) or equals X (equal reading). The empty set's last position is 0.

enum class GammaReading { subset, equal };

/// |X|! (n - |X|)!.
BigNat gamma_size(std::size_t x_size, std::size_t n);
/// By running through all of S_n; n <= 8.
std::uint64_t gamma_enumerate(const Subset& x, std::size_t n, GammaReading reading = GammaReading::subset);
/// Classes of incomparable X, Y in Pow([n]) never meet (enumerated); n <= 6.
bool gamma_disjointness_check(std::size_t n, GammaReading reading = GammaReading::subset);

/// (n + 2x) x! (n-1-x)!, the class size of a normalized W copy with |Z| = x.
BigNat g0(std::size_t n, std::size_t x);

struct G0Check {
  bool ok = false;
  std::size_t argmin = 0;  // floor((n-1)/2)
  BigNat minimum;          // M
};
/// Whether g0 over x = 1..n-1 attains its minimum at floor((n-1)/2); n >= 3.
G0Check g0_argmin_check(std::size_t n);

struct CountingReplay {
  bool disjoint = true;         // the copies' class unions are pairwise disjoint
  BigNat union_total;           // sum of the union sizes, at most n!
  BigNat k_times_m;             // copies * M
  BigNat n_factorial;
  [[nodiscard]] bool ok() const { return disjoint && union_total <= n_factorial && k_times_m <= n_factorial; }
};
/// Enumerated class unions of each copy of a family; ground size <= 7.
CountingReplay counting_bound_replay(const UnrelatedFamily& fam);

}  // namespace sperner
