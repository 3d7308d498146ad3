#include "sperner/genset.hpp"

#include <algorithm>

#include "sperner/errors.hpp"
#include "sperner/estimates.hpp"

namespace sperner {

std::string route_name(GminRoute r) {
  switch (r) {
    case GminRoute::bounded_formula: return "bounded-formula";
    case GminRoute::length_matching: return "length-matching";
    case GminRoute::w_bracket: return "W-bracket";
    case GminRoute::v_bracket: return "V-bracket";
    case GminRoute::general_bracket: return "general-bracket";
    case GminRoute::brute_force: return "brute-force";
  }
  return "?";
}

std::string GminResult::to_string() const {
  std::string head = kind == ResultKind::exact ? std::to_string(value)
                                               : std::to_string(lo) + ".." + std::to_string(hi);
  return head + " (route: " + route_name(route) + (collapsed ? ", collapsed" : "") + ")";
}

namespace {

GminResult exact_result(std::uint64_t v, GminRoute route, bool collapsed = false) {
  return {ResultKind::exact, v, v, v, route, collapsed};
}

}  // namespace

GminResult asp_dispatch(const Poset& u, const BigNat& k, std::size_t embedding_cap) {
  if (k <= 0) throw BadInput("k must be at least 1");
  const auto p = min_embedding_dimension(u, embedding_cap);
  const auto a = afsb(k);
  if (is_bounded(u)) return exact_result(p + a, GminRoute::bounded_formula);
  const auto t = length(u);
  if (t == p) return exact_result(p + a, GminRoute::length_matching);
  for (auto [pattern, route] : {std::pair{Pattern::W, GminRoute::w_bracket}, std::pair{Pattern::V, GminRoute::v_bracket}}) {
    if (!are_isomorphic(u, pattern == Pattern::W ? poset_w() : poset_v())) continue;
    const auto [lo, hi] = asp_bracket(pattern, k);
    if (lo == hi) return exact_result(lo, route, true);
    return {ResultKind::bracket, 0, lo, hi, route, false};
  }
  const auto lo = std::max<std::uint64_t>(p, t + a);
  const auto hi = p + a;
  if (lo == hi) return exact_result(lo, GminRoute::general_bracket, true);
  return {ResultKind::bracket, 0, lo, hi, GminRoute::general_bracket, false};
}

GminResult gmin_power(const DistLattice& d, const BigNat& k, std::size_t embedding_cap) {
  if (k <= 0) throw BadInput("k must be at least 1");
  if (k < 2)
    throw HypothesisNotMet("the power formula needs k >= 2; use the brute-force search for k = 1");
  if (d.size() == 1) throw BadInput("the one-element lattice has no join-irreducible elements");
  return asp_dispatch(join_irreducibles(d), k, embedding_cap);
}

SpernerResult sp_dispatch(const Poset& u, std::uint64_t n, std::size_t embedding_cap) {
  const auto p = min_embedding_dimension(u, embedding_cap);
  const auto t = length(u);
  auto shifted = [&](std::size_t s) { return n < s ? BigNat(0) : fsb(static_cast<std::int64_t>(n - s)); };
  if (is_bounded(u)) return SpernerResult::exact(shifted(p), route_name(GminRoute::bounded_formula));
  if (t == p) return SpernerResult::exact(shifted(p), route_name(GminRoute::length_matching));
  for (auto [pattern, route] : {std::pair{Pattern::W, GminRoute::w_bracket}, std::pair{Pattern::V, GminRoute::v_bracket}}) {
    if (!are_isomorphic(u, pattern == Pattern::W ? poset_w() : poset_v())) continue;
    if (n < pattern_dimension(pattern)) return SpernerResult::exact(0, route_name(route));
    auto b = sp_bracket(pattern, n);
    if (b.collapsed()) return SpernerResult::exact(b.lo, route_name(route) + ", collapsed");
    return SpernerResult::bracket(b.lo, b.hi, route_name(route));
  }
  auto lo = shifted(p), hi = shifted(t);
  if (lo == hi) return SpernerResult::exact(lo, route_name(GminRoute::general_bracket) + ", collapsed");
  return SpernerResult::bracket(lo, hi, route_name(GminRoute::general_bracket));
}

namespace {

// Reusable closure state for the brute-force loop.
class Closure {
 public:
  explicit Closure(const Lattice& l) : l_(l), seen_((l.size() + 63) / 64, 0) {}

  // Size of the generated sublattice; stops early once it is everything.
  std::size_t run(std::span<const std::size_t> gens) {
    std::fill(seen_.begin(), seen_.end(), 0);
    members_.clear();
    for (auto g : gens) add(g);
    for (std::size_t i = 0; i < members_.size() && members_.size() < l_.size(); ++i) {
      const auto a = members_[i];
      for (std::size_t j = 0; j <= i; ++j) {
        const auto b = members_[j];
        add(l_.meet(a, b));
        add(l_.join(a, b));
      }
    }
    return members_.size();
  }

  [[nodiscard]] std::vector<std::size_t> sorted_members() const {
    auto out = members_;
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void add(std::size_t x) {
    auto& w = seen_[x >> 6];
    const auto bit = std::uint64_t{1} << (x & 63);
    if (w & bit) return;
    w |= bit;
    members_.push_back(x);
  }

  const Lattice& l_;
  std::vector<std::uint64_t> seen_;
  std::vector<std::size_t> members_;
};

}  // namespace

std::vector<std::size_t> sublattice_closure(const Lattice& l, std::span<const std::size_t> s) {
  for (auto x : s)
    if (x >= l.size()) throw BadInput("element index out of range");
  Closure c(l);
  c.run(s);
  return c.sorted_members();
}

bool generating_set_check(const Lattice& l, std::span<const std::size_t> s) {
  for (auto x : s)
    if (x >= l.size()) throw BadInput("element index out of range");
  Closure c(l);
  return c.run(s) == l.size();
}

BruteForceResult gmin_bruteforce(const Lattice& l, std::size_t max_size) {
  const std::size_t n = l.size();
  if (n > max_size)
    throw ResourceLimit("brute-force search is capped at " + std::to_string(max_size) + " elements (lattice has " +
                        std::to_string(n) + ")");
  std::vector<std::size_t> lower_covers(n, 0), upper_covers(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || !l.leq(x, y)) continue;
      bool between = false;
      for (std::size_t z = 0; z < n && !between; ++z) between = z != x && z != y && l.leq(x, z) && l.leq(z, y);
      if (!between) {
        ++upper_covers[x];
        ++lower_covers[y];
      }
    }
  std::vector<std::size_t> forced, optional;
  for (std::size_t x = 0; x < n; ++x)
    (lower_covers[x] <= 1 && upper_covers[x] <= 1 ? forced : optional).push_back(x);

  BruteForceResult r;
  Closure closure(l);
  std::vector<std::size_t> cand;
  for (std::size_t s = std::max<std::size_t>(forced.size(), 1); s <= n; ++s) {
    const std::size_t extra = s - forced.size();
    if (extra > optional.size()) break;
    std::vector<std::size_t> idx(extra);
    for (std::size_t i = 0; i < extra; ++i) idx[i] = i;
    for (;;) {
      cand = forced;
      for (auto i : idx) cand.push_back(optional[i]);
      std::size_t top = cand[0], bottom = cand[0];
      for (auto x : cand) {
        top = l.join(top, x);
        bottom = l.meet(bottom, x);
      }
      if (top == l.top() && bottom == l.bottom()) {
        ++r.sets_tested;
        if (closure.run(cand) == n) {
          r.size = s;
          r.generators = cand;
          std::sort(r.generators.begin(), r.generators.end());
          return r;
        }
      }
      // next combination in lexicographic order
      std::size_t i = extra;
      while (i > 0 && idx[i - 1] == optional.size() - extra + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < extra; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw std::logic_error("the whole lattice always generates itself");
}

DistLattice direct_power(const DistLattice& l, std::size_t k, std::size_t max_elements) {
  if (k == 0) throw BadInput("direct power needs k >= 1");
  const std::size_t base = l.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > max_elements / base)
      throw ResourceLimit("direct power would exceed " + std::to_string(max_elements) + " elements");
    total *= base;
  }
  std::vector<Lattice::Element> meet(total * total), join(total * total);
  for (std::size_t a = 0; a < total; ++a)
    for (std::size_t b = 0; b < total; ++b) {
      std::size_t m = 0, j = 0, scale = 1, ra = a, rb = b;
      for (std::size_t i = 0; i < k; ++i) {
        const auto da = ra % base, db = rb % base;
        m += scale * l.meet(da, db);
        j += scale * l.join(da, db);
        ra /= base;
        rb /= base;
        scale *= base;
      }
      meet[a * total + b] = static_cast<Lattice::Element>(m);
      join[a * total + b] = static_cast<Lattice::Element>(j);
    }
  // componentwise operations on a distributive lattice stay distributive
  return DistLattice(total, std::move(meet), std::move(join));
}

DistLattice lattice_from_spec(std::string_view spec) {
  auto count_after = [&](std::string_view prefix) -> std::optional<std::size_t> {
    if (spec.substr(0, prefix.size()) != prefix) return std::nullopt;
    const auto rest = std::string(spec.substr(prefix.size()));
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos || rest.size() > 9)
      throw BadInput("expected a count after '" + std::string(prefix) + "'");
    return std::stoul(rest);
  };
  if (spec == "dnv") return down_set_lattice(poset_v());
  if (spec == "dnw") return down_set_lattice(poset_w());
  if (auto m = count_after("lchain:")) return chain_lattice(*m);
  if (auto p = count_after("bool:")) {
    if (*p == 0) return chain_lattice(1);
    return down_set_lattice(antichain(*p));
  }
  if (spec.substr(0, 3) == "dn:") return down_set_lattice(poset_from_spec(spec.substr(3)));
  return down_set_lattice(poset_from_spec(spec));
}

}  // namespace sperner
