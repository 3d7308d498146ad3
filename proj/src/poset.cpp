#include "sperner/poset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>
#include <tuple>

#include "sperner/errors.hpp"

namespace sperner {

Poset::Poset(std::size_t size) : size_(size), words_((size + 63) / 64), rows_(size * words_, 0) {
  if (size == 0) throw BadInput("a poset needs at least one element");
}

void Poset::validate() const {
  for (std::size_t x = 0; x < size_; ++x) {
    if (!leq(x, x)) throw BadInput("relation is not reflexive");
    for (std::size_t y = 0; y < size_; ++y) {
      if (x != y && leq(x, y) && leq(y, x)) throw BadInput("relation is not antisymmetric");
      if (!leq(x, y)) continue;
      for (std::size_t z = 0; z < size_; ++z)
        if (leq(y, z) && !leq(x, z)) throw BadInput("relation is not transitive");
    }
  }
}

Poset Poset::from_covers(std::size_t size, std::span<const Cover> covers) {
  Poset p(size);
  std::vector<std::vector<std::size_t>> up(size);
  for (auto [lo, hi] : covers) {
    if (lo >= size || hi >= size) throw BadInput("cover index out of range");
    if (lo == hi) throw BadInput("cover relation has a cycle (self-loop)");
    up[lo].push_back(hi);
  }
  // Transitive closure by DFS from every element; a path back to the start
  // is a cycle.
  for (std::size_t s = 0; s < size; ++s) {
    std::vector<std::size_t> stack{s};
    p.set(s, s);
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (auto y : up[x]) {
        if (y == s) throw BadInput("cover relation has a cycle; not a partial order");
        if (!p.leq(s, y)) {
          p.set(s, y);
          stack.push_back(y);
        }
      }
    }
  }
  return p;
}

std::size_t Poset::comparability_count() const {
  std::size_t c = 0;
  for (std::size_t x = 0; x < size_; ++x)
    for (std::size_t y = 0; y < size_; ++y)
      if (less(x, y)) ++c;
  return c;
}

std::vector<Poset::Cover> Poset::covers() const {
  std::vector<Cover> out;
  for (std::size_t x = 0; x < size_; ++x)
    for (std::size_t y = 0; y < size_; ++y) {
      if (!less(x, y)) continue;
      bool between = false;
      for (std::size_t z = 0; z < size_ && !between; ++z) between = less(x, z) && less(z, y);
      if (!between) out.emplace_back(x, y);
    }
  return out;
}

std::vector<std::size_t> Poset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size_; ++x) {
    bool minimal = true;
    for (std::size_t y = 0; y < size_ && minimal; ++y) minimal = !less(y, x);
    if (minimal) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> Poset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size_; ++x) {
    bool maximal = true;
    for (std::size_t y = 0; y < size_ && maximal; ++y) maximal = !less(x, y);
    if (maximal) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> Poset::linear_extension() const {
  std::vector<std::size_t> order;
  std::vector<bool> placed(size_, false);
  order.reserve(size_);
  while (order.size() < size_) {
    for (std::size_t x = 0; x < size_; ++x) {
      if (placed[x]) continue;
      bool ready = true;
      for (std::size_t y = 0; y < size_ && ready; ++y) ready = !less(y, x) || placed[y];
      if (ready) {
        placed[x] = true;
        order.push_back(x);
        break;
      }
    }
  }
  return order;
}

Poset Poset::with_labels(std::vector<std::string> labels) const {
  if (labels.size() != size_) throw BadInput("label count does not match poset size");
  Poset p = *this;
  p.labels_ = std::move(labels);
  return p;
}

Poset chain(std::size_t t) {
  return Poset::from_relation(t + 1, [](std::size_t x, std::size_t y) { return x <= y; });
}

Poset antichain(std::size_t m) {
  return Poset::from_relation(m, [](std::size_t, std::size_t) { return false; });
}

Poset poset_v() {
  const Poset::Cover covers[] = {{0, 1}, {0, 2}};
  return Poset::from_covers(3, covers).with_labels({"0", "a", "b"});
}

Poset poset_w() {
  const Poset::Cover covers[] = {{0, 1}, {0, 2}, {0, 3}};
  return Poset::from_covers(4, covers).with_labels({"z", "c", "d", "e"});
}

Poset powerset_poset(std::size_t p) {
  if (p > 8) throw ResourceLimit("powerset poset limited to p <= 8");
  return Poset::from_relation(std::size_t{1} << p,
                              [](std::size_t x, std::size_t y) { return (x & ~y) == 0; });
}

bool is_bounded(const Poset& u) {
  return u.minimal_elements().size() == 1 && u.maximal_elements().size() == 1;
}

std::size_t length(const Poset& u) {
  std::vector<std::size_t> height(u.size(), 0);
  std::size_t best = 0;
  for (auto x : u.linear_extension()) {
    for (std::size_t y = 0; y < u.size(); ++y)
      if (u.less(y, x)) height[x] = std::max(height[x], height[y] + 1);
    best = std::max(best, height[x]);
  }
  return best;
}

std::size_t width(const Poset& u) {
  // Dilworth: width = n - maximum matching in the strict-comparability
  // bipartite graph (left copy x -> right copy y when x < y).
  const std::size_t n = u.size();
  std::vector<std::size_t> match_right(n, n);
  std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t x, std::vector<bool>& seen) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!u.less(x, y) || seen[y]) continue;
      seen[y] = true;
      if (match_right[y] == n || augment(match_right[y], seen)) {
        match_right[y] = x;
        return true;
      }
    }
    return false;
  };
  std::size_t matching = 0;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<bool> seen(n, false);
    if (augment(x, seen)) ++matching;
  }
  return n - matching;
}

Poset cardinal_sum(const Poset& u, std::size_t k) {
  if (k == 0) throw BadInput("cardinal sum needs k >= 1 (the empty poset is not constructible)");
  const std::size_t n = u.size();
  return Poset::from_relation(n * k, [&](std::size_t x, std::size_t y) {
    return x / n == y / n && u.leq(x % n, y % n);
  });
}

bool is_order_embedding(const SubsetAssignment& f, const Poset& u) {
  if (f.images.size() != u.size()) return false;
  const Subset ground = Subset::range(0, f.ground_size);
  for (const auto& img : f.images)
    if (!img.subset_of(ground)) return false;
  for (std::size_t x = 0; x < u.size(); ++x)
    for (std::size_t y = 0; y < u.size(); ++y)
      if (u.leq(x, y) != f.images[x].subset_of(f.images[y])) return false;
  return true;
}

namespace {

struct Signature {
  std::size_t below, above, height;
  friend bool operator==(const Signature&, const Signature&) = default;
};

std::vector<Signature> signatures(const Poset& p) {
  std::vector<Signature> sig(p.size(), Signature{0, 0, 0});
  for (auto x : p.linear_extension()) {
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (p.less(y, x)) {
        ++sig[x].below;
        sig[x].height = std::max(sig[x].height, sig[y].height + 1);
      }
      if (p.less(x, y)) ++sig[x].above;
    }
  }
  return sig;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const Poset& a, const Poset& b) {
  const std::size_t n = a.size();
  if (n != b.size() || a.comparability_count() != b.comparability_count()) return std::nullopt;
  const auto sa = signatures(a);
  const auto sb = signatures(b);
  {
    auto key = [](const Signature& s) { return std::tuple(s.below, s.above, s.height); };
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> ka, kb;
    for (auto& s : sa) ka.push_back(key(s));
    for (auto& s : sb) kb.push_back(key(s));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    if (ka != kb) return std::nullopt;
  }
  const auto order = a.linear_extension();
  std::vector<std::size_t> map(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == n) return true;
    const auto x = order[depth];
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y] || !(sa[x] == sb[y])) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const auto w = order[d];
        ok = a.leq(w, x) == b.leq(map[w], y) && a.leq(x, w) == b.leq(y, map[w]);
      }
      if (!ok) continue;
      map[x] = y;
      used[y] = true;
      if (extend(depth + 1)) return true;
      used[y] = false;
      map[x] = n;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

namespace {

std::size_t parse_count(std::string_view s, std::string_view what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw BadInput("expected a non-negative integer for " + std::string(what) + ", got '" + std::string(s) + "'");
  return v;
}

}  // namespace

Poset parse_poset_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> size;
  std::vector<Poset::Cover> covers;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword)) continue;
    const auto where = " (line " + std::to_string(lineno) + ")";
    if (keyword == "poset") {
      std::string n;
      if (size || !(ls >> n)) throw BadInput("malformed 'poset' header" + where);
      size = parse_count(n, "poset size");
    } else if (keyword == "cover") {
      std::string i, j;
      if (!size) throw BadInput("'cover' before 'poset' header" + where);
      if (!(ls >> i >> j)) throw BadInput("malformed 'cover' line" + where);
      covers.emplace_back(parse_count(i, "cover index"), parse_count(j, "cover index"));
    } else {
      throw BadInput("unknown keyword '" + keyword + "'" + where);
    }
    std::string extra;
    if (ls >> extra) throw BadInput("trailing tokens" + where);
  }
  if (!size) throw BadInput("missing 'poset <size>' header");
  return Poset::from_covers(*size, covers);
}

Poset poset_from_spec(std::string_view spec) {
  auto arg = [&](std::string_view prefix) -> std::optional<std::size_t> {
    if (spec.substr(0, prefix.size()) != prefix) return std::nullopt;
    return parse_count(spec.substr(prefix.size()), prefix);
  };
  if (spec == "v") return poset_v();
  if (spec == "w") return poset_w();
  if (auto t = arg("chain:")) return chain(*t);
  if (auto m = arg("antichain:")) {
    if (*m == 0) throw BadInput("antichain needs at least one element");
    return antichain(*m);
  }
  if (auto p = arg("powerset:")) return powerset_poset(*p);
  std::ifstream file{std::string(spec)};
  if (!file) throw BadInput("unknown poset '" + std::string(spec) + "' (not a built-in name or readable file)");
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse_poset_text(buffer.str());
}

}  // namespace sperner
