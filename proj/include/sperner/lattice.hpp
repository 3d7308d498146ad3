#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sperner/poset.hpp"

namespace sperner {

/// A finite lattice given by its meet and join tables (row-major,
/// size() x size()). Construction through from_tables() validates the
/// lattice laws; the least and greatest elements are located once.
class Lattice {
 public:
  using Element = std::uint32_t;

  static Lattice from_tables(std::size_t size, std::vector<Element> meet, std::vector<Element> join);

  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] Element meet(std::size_t a, std::size_t b) const { return meet_[a * size_ + b]; }
  [[nodiscard]] Element join(std::size_t a, std::size_t b) const { return join_[a * size_ + b]; }
  [[nodiscard]] bool leq(std::size_t a, std::size_t b) const { return meet(a, b) == a; }
  [[nodiscard]] Element bottom() const { return bottom_; }
  [[nodiscard]] Element top() const { return top_; }

  /// Distributivity of meet over join, checked on all triples.
  [[nodiscard]] bool is_distributive_exhaustive() const;

 protected:
  Lattice(std::size_t size, std::vector<Element> meet, std::vector<Element> join);

 private:
  std::size_t size_ = 0;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  Element bottom_ = 0;
  Element top_ = 0;
};

/// A finite distributive lattice. Optionally remembers the base poset whose
/// down-sets form the carrier, together with each element's down-set as a
/// bit mask over the base poset.
class DistLattice : public Lattice {
 public:
  /// Validates distributivity: on all triples when size() <= 200, otherwise
  /// by checking that x -> {join-irreducibles below x} is a lattice
  /// isomorphism onto the down-sets of Jir(L). Throws BadInput on failure.
  static DistLattice from_lattice(Lattice lattice);

  [[nodiscard]] const std::optional<Poset>& base_poset() const { return base_; }
  [[nodiscard]] std::span<const std::uint64_t> down_set_masks() const { return masks_; }

 private:
  friend DistLattice down_set_lattice(const Poset& u, std::size_t max_elements);
  friend DistLattice direct_power(const DistLattice& l, std::size_t k, std::size_t max_elements);
  explicit DistLattice(Lattice lattice) : Lattice(std::move(lattice)) {}
  DistLattice(std::size_t size, std::vector<Element> meet, std::vector<Element> join)
      : Lattice(size, std::move(meet), std::move(join)) {}

  std::optional<Poset> base_;
  std::vector<std::uint64_t> masks_;
};

/// Lattice of all down-sets of u under inclusion (meet = intersection, join =
/// union). Carrier numbering: by down-set cardinality, then by bit-mask value,
/// so element 0 is the empty down-set and the last element is u itself.
/// Throws ResourceLimit when |u| > 64 or the carrier would exceed
/// max_elements (detected up front from the width: there are at least
/// 2^width(u) down-sets).
DistLattice down_set_lattice(const Poset& u, std::size_t max_elements = 2048);

/// Elements covering exactly one element, in increasing carrier index.
std::vector<std::size_t> join_irreducible_elements(const Lattice& l);
/// The same elements as an induced poset (index i = i-th join-irreducible).
Poset join_irreducibles(const Lattice& l);

/// Elements covered by exactly one element.
std::vector<std::size_t> meet_irreducible_elements(const Lattice& l);

/// The k-chain lattice 0 < 1 < ... < m-1 (m elements).
DistLattice chain_lattice(std::size_t m);

}  // namespace sperner
