#include "sperner/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>

#include "sperner/errors.hpp"

namespace sperner {

CopyGraph build_copy_graph(const Poset& u, std::size_t n) {
  if (n > 6) throw ResourceLimit("copy graphs are limited to n <= 6");
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<std::uint64_t> comparable_to(subsets, 0);
  for (std::size_t s = 0; s < subsets; ++s)
    for (std::size_t t = 0; t < subsets; ++t)
      if ((s & ~t) == 0 || (t & ~s) == 0) comparable_to[s] |= std::uint64_t{1} << t;

  const auto order = u.linear_extension();
  std::vector<std::size_t> image(u.size(), 0);
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> found;  // (key, assignment)
  auto place = [&](auto&& self, std::size_t depth) -> void {
    if (depth == order.size()) {
      auto key = image;
      std::sort(key.begin(), key.end());
      found.emplace_back(std::move(key), image);
      return;
    }
    const auto x = order[depth];
    for (std::size_t s = 0; s < subsets; ++s) {
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const auto y = order[d];
        const auto t = image[y];
        ok = s != t && u.leq(y, x) == ((t & ~s) == 0) && u.leq(x, y) == ((s & ~t) == 0);
      }
      if (!ok) continue;
      image[x] = s;
      self(self, depth + 1);
    }
  };
  place(place, 0);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
              found.end());

  CopyGraph g;
  g.n = n;
  for (const auto& [key, assignment] : found) {
    std::vector<Subset> copy;
    std::uint64_t members = 0, related = 0;
    for (auto s : assignment) {
      copy.push_back(Subset::from_word(s));
      members |= std::uint64_t{1} << s;
      related |= comparable_to[s];
    }
    g.copies.push_back(std::move(copy));
    g.members.push_back(members);
    g.related.push_back(related);
  }
  return g;
}

namespace {

struct BudgetExceeded {};

class CliqueSearch {
 public:
  CliqueSearch(const CopyGraph& g, double budget) : words_((g.size() + 63) / 64), budget_(budget) {
    const std::size_t v = g.size();
    // Degeneracy order: peel minimum-degree vertices; search the last peeled
    // (densest core) first.
    std::vector<std::vector<std::size_t>> nbrs(v);
    for (std::size_t a = 0; a < v; ++a)
      for (std::size_t b = a + 1; b < v; ++b)
        if (g.unrelated(a, b)) {
          nbrs[a].push_back(b);
          nbrs[b].push_back(a);
        }
    std::vector<std::size_t> degree(v), peeled;
    std::vector<bool> gone(v, false);
    for (std::size_t a = 0; a < v; ++a) degree[a] = nbrs[a].size();
    for (std::size_t step = 0; step < v; ++step) {
      std::size_t best = v;
      for (std::size_t a = 0; a < v; ++a)
        if (!gone[a] && (best == v || degree[a] < degree[best])) best = a;
      gone[best] = true;
      peeled.push_back(best);
      for (auto b : nbrs[best])
        if (!gone[b]) --degree[b];
    }
    original_.assign(peeled.rbegin(), peeled.rend());
    std::vector<std::size_t> position(v);
    for (std::size_t i = 0; i < v; ++i) position[original_[i]] = i;
    adj_.assign(v * words_, 0);
    for (std::size_t a = 0; a < v; ++a)
      for (auto b : nbrs[a]) adj_[position[a] * words_ + position[b] / 64] |= std::uint64_t{1} << (position[b] % 64);
    start_ = std::chrono::steady_clock::now();
  }

  // Returns false when the budget ran out (best_ holds the best clique so far).
  bool run() {
    std::vector<std::uint64_t> all(words_, 0);
    for (std::size_t i = 0; i < original_.size(); ++i) all[i / 64] |= std::uint64_t{1} << (i % 64);
    try {
      if (!original_.empty()) expand(all);
    } catch (const BudgetExceeded&) {
      return false;
    }
    return true;
  }

  [[nodiscard]] std::vector<std::size_t> best_clique() const {
    std::vector<std::size_t> out;
    for (auto i : best_) out.push_back(original_[i]);
    std::sort(out.begin(), out.end());
    return out;
  }
  [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

 private:
  void expand(std::vector<std::uint64_t> cand) {
    if ((++nodes_ & 1023) == 0 && budget_ > 0) {
      const std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start_;
      if (spent.count() > budget_) throw BudgetExceeded{};
    }
    // greedy colouring in index order
    std::vector<std::size_t> order, colour;
    auto uncoloured = cand;
    std::size_t c = 0;
    while (std::any_of(uncoloured.begin(), uncoloured.end(), [](std::uint64_t w) { return w != 0; })) {
      ++c;
      auto q = uncoloured;
      for (std::size_t w = 0; w < words_; ++w) {
        while (q[w]) {
          const auto bit = static_cast<std::size_t>(std::countr_zero(q[w]));
          const auto v = w * 64 + bit;
          q[w] &= q[w] - 1;
          uncoloured[w] &= ~(std::uint64_t{1} << bit);
          const auto* row = &adj_[v * words_];
          for (std::size_t k = w; k < words_; ++k) q[k] &= ~row[k];
          order.push_back(v);
          colour.push_back(c);
        }
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (clique_.size() + colour[i] <= best_.size()) return;
      const auto v = order[i];
      clique_.push_back(v);
      std::vector<std::uint64_t> next(words_);
      bool any = false;
      const auto* row = &adj_[v * words_];
      for (std::size_t w = 0; w < words_; ++w) any |= (next[w] = cand[w] & row[w]) != 0;
      if (any)
        expand(std::move(next));
      else if (clique_.size() > best_.size())
        best_ = clique_;
      clique_.pop_back();
      cand[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  std::size_t words_;
  double budget_;
  std::vector<std::size_t> original_;  // search index -> vertex id
  std::vector<std::uint64_t> adj_;
  std::vector<std::size_t> clique_, best_;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

ExhaustiveResult sp_exhaustive(const Poset& u, std::size_t n, const OracleLimits& limits) {
  if (n > limits.max_n || n > 6)
    throw ResourceLimit("exhaustive Sp is capped at n = " + std::to_string(std::min<std::size_t>(limits.max_n, 6)) +
                        " (n = 6 is opt-in)");
  if (u.size() > limits.max_pattern)
    throw ResourceLimit("exhaustive Sp is capped at patterns of " + std::to_string(limits.max_pattern) + " elements");
  const auto g = build_copy_graph(u, n);
  CliqueSearch search(g, limits.time_budget_seconds);
  const bool finished = search.run();
  ExhaustiveResult r{0, finished, UnrelatedFamily{n, u, {}}, g.size(), search.nodes()};
  for (auto v : search.best_clique()) r.witness.copies.push_back(g.copies[v]);
  r.value = r.witness.copies.size();
  return r;
}

namespace {

BigNat factorial(std::size_t n) {
  BigNat f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

// Calls fn(prefix) for every permutation of [n], where prefix[j] is the bit
// mask of the first j entries.
template <class Fn>
void for_each_permutation_prefix(std::size_t n, Fn&& fn) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint64_t> prefix(n + 1, 0);
  do {
    for (std::size_t j = 0; j < n; ++j) prefix[j + 1] = prefix[j] | (std::uint64_t{1} << perm[j]);
    fn(perm, prefix);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

bool associated(const std::vector<std::size_t>& perm, const std::vector<std::uint64_t>& prefix, std::uint64_t x,
                GammaReading reading) {
  std::size_t last = 0;
  for (std::size_t m = 0; m < perm.size(); ++m)
    if ((x >> perm[m]) & 1U) last = m + 1;
  const auto head = prefix[last];
  return reading == GammaReading::subset ? (head & ~x) == 0 : head == x;
}

}  // namespace

BigNat gamma_size(std::size_t x_size, std::size_t n) {
  if (x_size > n) throw BadInput("subset larger than the ground set");
  return factorial(x_size) * factorial(n - x_size);
}

std::uint64_t gamma_enumerate(const Subset& x, std::size_t n, GammaReading reading) {
  if (n > 8) throw ResourceLimit("permutation enumeration is capped at n = 8");
  if (!x.subset_of(Subset::range(0, n))) throw BadInput("subset is not inside [n]");
  std::uint64_t count = 0;
  for_each_permutation_prefix(n, [&](const auto& perm, const auto& prefix) {
    if (associated(perm, prefix, x.low_word(), reading)) ++count;
  });
  return count;
}

bool gamma_disjointness_check(std::size_t n, GammaReading reading) {
  if (n > 6) throw ResourceLimit("disjointness check is capped at n = 6");
  const std::size_t subsets = std::size_t{1} << n;
  // For each permutation, the subsets it is associated with must form a
  // chain; an incomparable pair among them is a shared member.
  bool ok = true;
  for_each_permutation_prefix(n, [&](const auto& perm, const auto& prefix) {
    std::vector<std::uint64_t> hits;
    for (std::uint64_t x = 0; x < subsets; ++x)
      if (associated(perm, prefix, x, reading)) hits.push_back(x);
    for (std::size_t a = 0; a < hits.size() && ok; ++a)
      for (std::size_t b = a + 1; b < hits.size() && ok; ++b)
        ok = (hits[a] & ~hits[b]) == 0 || (hits[b] & ~hits[a]) == 0;
  });
  return ok;
}

BigNat g0(std::size_t n, std::size_t x) {
  if (x + 1 > n) throw BadInput("g0 needs x <= n - 1");
  return BigNat(static_cast<unsigned long>(n + 2 * x)) * factorial(x) * factorial(n - 1 - x);
}

G0Check g0_argmin_check(std::size_t n) {
  if (n < 3) throw BadInput("g0 check needs n >= 3");
  G0Check r;
  r.argmin = (n - 1) / 2;
  r.minimum = g0(n, r.argmin);
  r.ok = true;
  for (std::size_t x = 1; x <= n - 1; ++x)
    if (g0(n, x) < r.minimum) r.ok = false;
  return r;
}

CountingReplay counting_bound_replay(const UnrelatedFamily& fam) {
  const auto n = fam.ground_size;
  if (n > 7) throw ResourceLimit("counting replay is capped at n = 7");
  CountingReplay r;
  r.n_factorial = factorial(n);
  r.k_times_m = n >= 3 ? g0_argmin_check(n).minimum * static_cast<unsigned long>(fam.copies.size()) : BigNat(0);
  std::uint64_t total = 0;
  for_each_permutation_prefix(n, [&](const auto& perm, const auto& prefix) {
    std::size_t owners = 0;
    for (const auto& copy : fam.copies) {
      bool hit = false;
      for (const auto& s : copy) hit = hit || associated(perm, prefix, s.low_word(), GammaReading::subset);
      if (hit) ++owners;
    }
    total += owners;
    if (owners > 1) r.disjoint = false;
  });
  r.union_total = BigNat(static_cast<unsigned long>(total));
  return r;
}

}  // namespace sperner
