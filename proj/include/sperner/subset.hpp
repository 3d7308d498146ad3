#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace sperner {

/// A subset of the ground set [n] = {1, ..., n}, stored as a fixed-width bit
/// set. Coordinate i (0-based) stands for the ground element i + 1.
///
/// Ordering is by numeric value of the bit set, which is the "increasing
/// bit-set order" used for all deterministic enumerations.
class Subset {
 public:
  static constexpr std::size_t kMaxGround = 128;

  constexpr Subset() = default;

  static constexpr Subset from_word(std::uint64_t low) {
    Subset s;
    s.words_[0] = low;
    return s;
  }

  /// The coordinates [first, first + count).
  static Subset range(std::size_t first, std::size_t count);

  void insert(std::size_t coord) { words_[coord >> 6] |= std::uint64_t{1} << (coord & 63); }
  void erase(std::size_t coord) { words_[coord >> 6] &= ~(std::uint64_t{1} << (coord & 63)); }
  [[nodiscard]] bool contains(std::size_t coord) const {
    return (words_[coord >> 6] >> (coord & 63)) & 1U;
  }

  [[nodiscard]] bool subset_of(const Subset& other) const {
    return (words_[0] & ~other.words_[0]) == 0 && (words_[1] & ~other.words_[1]) == 0;
  }
  [[nodiscard]] bool empty() const { return (words_[0] | words_[1]) == 0; }
  [[nodiscard]] std::size_t count() const {
    return static_cast<std::size_t>(std::popcount(words_[0]) + std::popcount(words_[1]));
  }
  [[nodiscard]] std::uint64_t low_word() const { return words_[0]; }
  [[nodiscard]] bool fits_in_word() const { return words_[1] == 0; }

  /// 0-based coordinates in increasing order.
  [[nodiscard]] std::vector<std::size_t> coordinates() const;

  /// "{1,3,4}" with 1-based ground elements; "{}" for the empty set.
  [[nodiscard]] std::string to_string() const;

  Subset& operator|=(const Subset& o) {
    words_[0] |= o.words_[0];
    words_[1] |= o.words_[1];
    return *this;
  }
  Subset& operator&=(const Subset& o) {
    words_[0] &= o.words_[0];
    words_[1] &= o.words_[1];
    return *this;
  }
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) {
    a.words_[0] &= ~b.words_[0];
    a.words_[1] &= ~b.words_[1];
    return a;
  }

  friend bool operator==(const Subset&, const Subset&) = default;
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
    if (auto c = a.words_[1] <=> b.words_[1]; c != 0) return c;
    return a.words_[0] <=> b.words_[0];
  }

 private:
  std::array<std::uint64_t, 2> words_{};
};

inline bool comparable(const Subset& a, const Subset& b) {
  return a.subset_of(b) || b.subset_of(a);
}

/// Calls `fn` on every k-element subset of the coordinates in `pool`, in
/// increasing bit-set order. Returns the number of subsets visited.
template <class Fn>
std::uint64_t for_each_k_subset(const Subset& pool, std::size_t k, Fn&& fn) {
  const auto coords = pool.coordinates();
  if (k > coords.size()) return 0;
  // Indices into coords, kept so that the generated sets ascend in value:
  // colexicographic order on index vectors equals numeric order on bit sets.
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::uint64_t visited = 0;
  while (true) {
    Subset s;
    for (auto i : idx) s.insert(coords[i]);
    fn(s);
    ++visited;
    // advance in colex order
    std::size_t j = 0;
    while (j < k && ((j + 1 < k) ? idx[j] + 1 == idx[j + 1] : idx[j] + 1 == coords.size())) ++j;
    if (j == k) break;
    ++idx[j];
    for (std::size_t t = 0; t < j; ++t) idx[t] = t;
  }
  return visited;
}

}  // namespace sperner
