#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sperner/bigcomb.hpp"
#include "sperner/exact.hpp"
#include "sperner/lattice.hpp"

namespace sperner {

enum class GminRoute { bounded_formula, length_matching, w_bracket, v_bracket, general_bracket, brute_force };

std::string route_name(GminRoute r);

struct GminResult {
  ResultKind kind = ResultKind::exact;
  std::uint64_t value = 0;  // meaningful when exact
  std::uint64_t lo = 0, hi = 0;
  GminRoute route = GminRoute::bounded_formula;
  bool collapsed = false;  // a bracket route whose ends met

  /// "18 (route: bounded-formula)", "4..5 (route: W-bracket)",
  /// "15 (route: V-bracket, collapsed)".
  [[nodiscard]] std::string to_string() const;
};

/// gmin(D^k) = Asp(Jir D, k) for k >= 2, with U = Jir D:
///   U bounded              -> p + afsb(k)
///   length(U) = p          -> p + afsb(k)
///   U = W or U = V         -> estimator bracket, exact when it collapses
///   otherwise              -> [max(p, length(U) + afsb(k)), p + afsb(k)]
/// k = 1 throws HypothesisNotMet (use gmin_bruteforce); k = 0 is BadInput.
GminResult gmin_power(const DistLattice& d, const BigNat& k, std::size_t embedding_cap = kDefaultEmbeddingCap);
/// The same dispatch with U given directly: Asp(U, k) for any k >= 1.
GminResult asp_dispatch(const Poset& u, const BigNat& k, std::size_t embedding_cap = kDefaultEmbeddingCap);

/// Sp(U, n) along the same routes; the last one is the bracket
/// [fsb(n - p), fsb(n - length(U))]. `method` carries the route name, with
/// ", collapsed" appended when an estimator bracket closes.
SpernerResult sp_dispatch(const Poset& u, std::uint64_t n, std::size_t embedding_cap = kDefaultEmbeddingCap);

struct BruteForceResult {
  std::size_t size = 0;
  std::vector<std::size_t> generators;  // one minimum generating set
  std::uint64_t sets_tested = 0;
};

inline constexpr std::size_t kDefaultBruteForceCap = 100;

/// Smallest generating set by exhaustive search over subsets of increasing
/// size. Elements covering at most one element and covered by at most one
/// cannot be produced from others, so they are forced into every candidate;
/// candidates whose join is not the top or whose meet is not the bottom are
/// skipped before the closure is computed.
BruteForceResult gmin_bruteforce(const Lattice& l, std::size_t max_size = kDefaultBruteForceCap);

/// Sublattice generated by s (worklist closure under meet and join), as a
/// sorted element list.
std::vector<std::size_t> sublattice_closure(const Lattice& l, std::span<const std::size_t> s);
bool generating_set_check(const Lattice& l, std::span<const std::size_t> s);

/// L^k with componentwise operations; element index sum a_i |L|^i.
/// Throws ResourceLimit when |L|^k > max_elements.
DistLattice direct_power(const DistLattice& l, std::size_t k, std::size_t max_elements = 1000);

/// Lattice names: dnv, dnw, lchain:<m>, bool:<p>, dn:<poset spec>, or a path
/// to a poset file (its down-set lattice).
DistLattice lattice_from_spec(std::string_view spec);

}  // namespace sperner
