#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sperner/subset.hpp"

namespace sperner {

/// A finite partial order on the elements 0..size()-1.
///
/// The order relation is stored as one bit-set row per element (bit y of row
/// x is set iff x <= y), so comparability queries are a single word lookup.
/// Values are immutable once constructed. The empty poset is not a value:
/// every constructor requires at least one element.
class Poset {
 public:
  using Cover = std::pair<std::size_t, std::size_t>;

  /// Reflexive-transitive closure of the given cover pairs (lower, upper).
  /// Throws BadInput on an out-of-range index or a cycle.
  static Poset from_covers(std::size_t size, std::span<const Cover> covers);

  /// Builds from an explicit relation and checks the partial-order axioms.
  template <class Leq>
  static Poset from_relation(std::size_t size, Leq&& leq) {
    Poset p(size);
    for (std::size_t x = 0; x < size; ++x)
      for (std::size_t y = 0; y < size; ++y)
        if (x == y || leq(x, y)) p.set(x, y);
    p.validate();
    return p;
  }

  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] bool leq(std::size_t x, std::size_t y) const {
    return (rows_[x * words_ + (y >> 6)] >> (y & 63)) & 1U;
  }
  [[nodiscard]] bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }
  [[nodiscard]] bool comparable(std::size_t x, std::size_t y) const { return leq(x, y) || leq(y, x); }

  /// Number of pairs x < y.
  [[nodiscard]] std::size_t comparability_count() const;

  /// Cover pairs (x, y): x < y with nothing strictly between.
  [[nodiscard]] std::vector<Cover> covers() const;

  /// Elements with no strictly smaller / strictly larger element.
  [[nodiscard]] std::vector<std::size_t> minimal_elements() const;
  [[nodiscard]] std::vector<std::size_t> maximal_elements() const;

  /// Deterministic linear extension: repeatedly takes the least index whose
  /// strict predecessors are all placed.
  [[nodiscard]] std::vector<std::size_t> linear_extension() const;

  /// Display names; purely cosmetic.
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  Poset with_labels(std::vector<std::string> labels) const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.size_ == b.size_ && a.rows_ == b.rows_;
  }

 private:
  explicit Poset(std::size_t size);
  void set(std::size_t x, std::size_t y) { rows_[x * words_ + (y >> 6)] |= std::uint64_t{1} << (y & 63); }
  void validate() const;

  std::size_t size_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::string> labels_;
};

// Named posets. chain(t) has t + 1 elements (length t).
Poset chain(std::size_t t);
Poset antichain(std::size_t m);
/// Bottom 0 with two incomparable tops 1, 2.
Poset poset_v();
/// Bottom 0 (z) with three maximal elements 1, 2, 3 (c, d, e).
Poset poset_w();
/// Pow([p]) ordered by inclusion; element i is the subset with bit mask i.
Poset powerset_poset(std::size_t p);

bool is_bounded(const Poset& u);
/// Longest chain cardinality minus one.
std::size_t length(const Poset& u);
/// Largest antichain size (exhaustive; intended for small posets).
std::size_t width(const Poset& u);

/// k disjoint, mutually incomparable copies of u. Copy c occupies indices
/// [c*|u|, (c+1)*|u|). Throws BadInput for k = 0.
Poset cardinal_sum(const Poset& u, std::size_t k);

/// Images of the poset elements as subsets of [ground_size].
struct SubsetAssignment {
  std::size_t ground_size = 0;
  std::vector<Subset> images;
};

/// True iff x <= y exactly when image(x) is contained in image(y).
bool is_order_embedding(const SubsetAssignment& f, const Poset& u);

/// Exact isomorphism test by backtracking over degree-refined candidates.
/// Returns the bijection a -> b (index by element of a) when isomorphic.
std::optional<std::vector<std::size_t>> find_isomorphism(const Poset& a, const Poset& b);
inline bool are_isomorphic(const Poset& a, const Poset& b) { return find_isomorphism(a, b).has_value(); }

/// Text format: "poset <size>" then "cover <i> <j>" lines; '#' comments and
/// blank lines are ignored.
Poset parse_poset_text(std::string_view text);

/// Built-in names: chain:<t>, antichain:<m>, v, w, powerset:<p>; anything
/// else is treated as a path to a file in the text format.
Poset poset_from_spec(std::string_view spec);

}  // namespace sperner
