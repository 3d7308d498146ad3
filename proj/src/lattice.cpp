#include "sperner/lattice.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "sperner/errors.hpp"

namespace sperner {

namespace {

constexpr std::size_t kExhaustiveCheckLimit = 200;

}  // namespace

Lattice::Lattice(std::size_t size, std::vector<Element> meet, std::vector<Element> join)
    : size_(size), meet_(std::move(meet)), join_(std::move(join)) {
  for (std::size_t a = 0; a < size_; ++a) {
    bool is_bottom = true, is_top = true;
    for (std::size_t b = 0; b < size_; ++b) {
      is_bottom = is_bottom && meet_[a * size_ + b] == a;
      is_top = is_top && join_[a * size_ + b] == a;
    }
    if (is_bottom) bottom_ = static_cast<Element>(a);
    if (is_top) top_ = static_cast<Element>(a);
  }
}

Lattice Lattice::from_tables(std::size_t size, std::vector<Element> meet, std::vector<Element> join) {
  if (size == 0) throw BadInput("a lattice needs at least one element");
  if (meet.size() != size * size || join.size() != size * size)
    throw BadInput("meet/join tables must be size x size");
  for (auto v : meet)
    if (v >= size) throw BadInput("meet table entry out of range");
  for (auto v : join)
    if (v >= size) throw BadInput("join table entry out of range");
  auto m = [&](std::size_t a, std::size_t b) { return meet[a * size + b]; };
  auto j = [&](std::size_t a, std::size_t b) { return join[a * size + b]; };
  for (std::size_t a = 0; a < size; ++a) {
    if (m(a, a) != a || j(a, a) != a) throw BadInput("lattice operations are not idempotent");
    for (std::size_t b = 0; b < size; ++b) {
      if (m(a, b) != m(b, a) || j(a, b) != j(b, a)) throw BadInput("lattice operations are not commutative");
      if (m(a, j(a, b)) != a || j(a, m(a, b)) != a) throw BadInput("absorption law fails");
    }
  }
  if (size <= kExhaustiveCheckLimit) {
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = 0; b < size; ++b)
        for (std::size_t c = 0; c < size; ++c)
          if (m(m(a, b), c) != m(a, m(b, c)) || j(j(a, b), c) != j(a, j(b, c)))
            throw BadInput("lattice operations are not associative");
  }
  return Lattice(size, std::move(meet), std::move(join));
}

bool Lattice::is_distributive_exhaustive() const {
  for (std::size_t a = 0; a < size_; ++a)
    for (std::size_t b = 0; b < size_; ++b)
      for (std::size_t c = 0; c < size_; ++c)
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) return false;
  return true;
}

std::vector<std::size_t> join_irreducible_elements(const Lattice& l) {
  // x covers exactly one element iff x is not the bottom and the join of
  // everything strictly below x is still strictly below x.
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (x == l.bottom()) continue;
    std::size_t acc = l.bottom();
    for (std::size_t y = 0; y < l.size(); ++y)
      if (y != x && l.leq(y, x)) acc = l.join(acc, y);
    if (acc != x) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> meet_irreducible_elements(const Lattice& l) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (x == l.top()) continue;
    std::size_t acc = l.top();
    for (std::size_t y = 0; y < l.size(); ++y)
      if (y != x && l.leq(x, y)) acc = l.meet(acc, y);
    if (acc != x) out.push_back(x);
  }
  return out;
}

Poset join_irreducibles(const Lattice& l) {
  const auto jir = join_irreducible_elements(l);
  if (jir.empty()) throw BadInput("the one-element lattice has no join-irreducible elements");
  return Poset::from_relation(jir.size(), [&](std::size_t a, std::size_t b) { return l.leq(jir[a], jir[b]); });
}

namespace {

std::vector<std::uint64_t> enumerate_down_sets(const Poset& u, std::size_t max_elements) {
  const auto order = u.linear_extension();
  std::vector<std::uint64_t> below(u.size(), 0);
  for (std::size_t x = 0; x < u.size(); ++x)
    for (std::size_t y = 0; y < u.size(); ++y)
      if (u.less(y, x)) below[x] |= std::uint64_t{1} << y;
  std::vector<std::uint64_t> out;
  // Include/exclude along the linear extension: x may join the down-set only
  // when everything below it is already present.
  auto visit = [&](auto&& self, std::size_t depth, std::uint64_t current) -> void {
    if (depth == order.size()) {
      if (out.size() == max_elements)
        throw ResourceLimit("down-set lattice exceeds the configured element cap");
      out.push_back(current);
      return;
    }
    const auto x = order[depth];
    self(self, depth + 1, current);
    if ((below[x] & ~current) == 0) self(self, depth + 1, current | (std::uint64_t{1} << x));
  };
  visit(visit, 0, 0);
  std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
    const auto ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  return out;
}

}  // namespace

DistLattice down_set_lattice(const Poset& u, std::size_t max_elements) {
  if (u.size() > 64) throw ResourceLimit("down-set lattice supports posets with at most 64 elements");
  const auto w = width(u);
  if (w >= 63 || (std::size_t{1} << w) > max_elements)
    throw ResourceLimit("down-set lattice would have at least 2^" + std::to_string(w) +
                        " elements, over the configured cap");
  auto masks = enumerate_down_sets(u, max_elements);
  const std::size_t n = masks.size();
  std::unordered_map<std::uint64_t, Lattice::Element> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(masks[i], static_cast<Lattice::Element>(i));
  std::vector<Lattice::Element> meet(n * n), join(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      meet[a * n + b] = index.at(masks[a] & masks[b]);
      join[a * n + b] = index.at(masks[a] | masks[b]);
    }
  DistLattice d(n, std::move(meet), std::move(join));
  d.base_ = u;
  d.masks_ = std::move(masks);
  return d;
}

DistLattice DistLattice::from_lattice(Lattice lattice) {
  if (lattice.size() <= kExhaustiveCheckLimit) {
    if (!lattice.is_distributive_exhaustive()) throw BadInput("lattice is not distributive");
    return DistLattice(std::move(lattice));
  }
  // Birkhoff check: x -> {j in Jir(L) : j <= x} must be injective, turn meet
  // into intersection and join into union, and hit every down-set of Jir(L).
  const auto jir = join_irreducible_elements(lattice);
  const std::size_t words = (jir.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> image(lattice.size(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t x = 0; x < lattice.size(); ++x)
    for (std::size_t i = 0; i < jir.size(); ++i)
      if (lattice.leq(jir[i], x)) image[x][i / 64] |= std::uint64_t{1} << (i % 64);
  auto sorted = image;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw BadInput("lattice is not distributive (join-irreducibles do not separate elements)");
  for (std::size_t a = 0; a < lattice.size(); ++a)
    for (std::size_t b = 0; b < lattice.size(); ++b)
      for (std::size_t w = 0; w < words; ++w) {
        if (image[lattice.meet(a, b)][w] != (image[a][w] & image[b][w]) ||
            image[lattice.join(a, b)][w] != (image[a][w] | image[b][w]))
          throw BadInput("lattice is not distributive");
      }
  const auto base = join_irreducibles(lattice);
  std::size_t down_sets = 0;
  try {
    down_sets = down_set_lattice(base, lattice.size() + 1).size();
  } catch (const ResourceLimit&) {
    throw BadInput("lattice is not distributive (too few elements for its join-irreducibles)");
  }
  if (down_sets != lattice.size()) throw BadInput("lattice is not distributive");
  return DistLattice(std::move(lattice));
}

DistLattice chain_lattice(std::size_t m) {
  if (m == 0) throw BadInput("a chain lattice needs at least one element");
  std::vector<Lattice::Element> meet(m * m), join(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      meet[a * m + b] = static_cast<Lattice::Element>(std::min(a, b));
      join[a * m + b] = static_cast<Lattice::Element>(std::max(a, b));
    }
  return DistLattice::from_lattice(Lattice::from_tables(m, std::move(meet), std::move(join)));
}

}  // namespace sperner
