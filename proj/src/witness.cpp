#include "sperner/witness.hpp"

#include <random>
#include <sstream>

#include "sperner/errors.hpp"
#include "sperner/estimates.hpp"
#include "sperner/exact.hpp"

namespace sperner {

namespace {

void check_ground(std::size_t n) {
  if (n > Subset::kMaxGround)
    throw ResourceLimit("subset-level operations are capped at n = " + std::to_string(Subset::kMaxGround));
}

UnrelatedFamily collect(Poset pattern, std::size_t n, std::uint64_t max_copies,
                        const std::function<std::uint64_t(const CopyVisitor&)>& generate) {
  UnrelatedFamily fam{n, std::move(pattern), {}};
  generate([&](std::span<const Subset> copy) {
    if (fam.copies.size() == max_copies)
      throw ResourceLimit("family exceeds " + std::to_string(max_copies) + " copies; use the streaming generator");
    fam.copies.emplace_back(copy.begin(), copy.end());
  });
  return fam;
}

}  // namespace

std::uint64_t for_each_bounded_copy(const Poset& u, std::size_t n, const CopyVisitor& visit) {
  check_ground(n);
  const auto e = minimum_embedding(u);
  const auto p = e.dimension;
  if (n < p) throw BadInput("n = " + std::to_string(n) + " is below the embedding dimension " + std::to_string(p));
  const auto free = n - p;
  std::vector<Subset> shifted(u.size());
  for (std::size_t x = 0; x < u.size(); ++x)
    for (auto c : e.images[x].coordinates()) shifted[x].insert(c + free);
  std::vector<Subset> copy(u.size());
  return for_each_k_subset(Subset::range(0, free), free / 2, [&](const Subset& base) {
    for (std::size_t x = 0; x < u.size(); ++x) copy[x] = base | shifted[x];
    visit(copy);
  });
}

std::uint64_t for_each_w_copy(std::size_t n, const CopyVisitor& visit) {
  if (n < 3) throw BadInput("W copies need n >= 3");
  check_ground(n);
  const std::size_t m = n / 3;
  const std::size_t qbar = w_base_size(n);
  std::uint64_t count = 0;
  std::vector<Subset> copy(4);
  for (std::size_t i = 0; i < m; ++i) {
    // Choose X_j inside B_j (a 2- or 3-subset) for j < i, then X_i in the
    // coordinates past B_i.
    auto choose = [&](auto&& self, std::size_t j, std::size_t used, const Subset& z) -> void {
      if (j == i) {
        if (used > qbar) return;
        const auto rest = Subset::range(3 * i + 3, n - 3 * i - 3);
        count += for_each_k_subset(rest, qbar - used, [&](const Subset& xi) {
          const Subset base = z | xi;
          copy[0] = base;
          for (std::size_t t = 0; t < 3; ++t) {
            copy[t + 1] = base;
            copy[t + 1].insert(3 * i + t);
          }
          visit(copy);
        });
        return;
      }
      const auto block = Subset::range(3 * j, 3);
      for (std::size_t v : {2, 3}) {
        if (used + v > qbar) continue;
        for_each_k_subset(block, v, [&](const Subset& xj) { self(self, j + 1, used + v, z | xj); });
      }
    };
    choose(choose, 0, 0, Subset{});
  }
  return count;
}

std::uint64_t for_each_v_copy(std::size_t n, const CopyVisitor& visit) {
  if (n < 2) throw BadInput("V copies need n >= 2");
  check_ground(n);
  const std::size_t c = (n - 1) / 2;
  std::uint64_t count = 0;
  std::vector<Subset> copy(3);
  for (std::size_t i = 0; i <= c / 2 && 2 * i + 2 <= n; ++i) {
    const auto z = Subset::range(0, 2 * i);
    const auto rest = Subset::range(2 * i + 2, n - 2 * i - 2);
    count += for_each_k_subset(rest, c - 2 * i, [&](const Subset& xi) {
      const Subset base = z | xi;
      copy[0] = base;
      copy[1] = base;
      copy[1].insert(2 * i);
      copy[2] = base;
      copy[2].insert(2 * i + 1);
      visit(copy);
    });
  }
  return count;
}

UnrelatedFamily witness_bounded(const Poset& u, std::size_t n, std::uint64_t max_copies) {
  return collect(u, n, max_copies, [&](const CopyVisitor& v) { return for_each_bounded_copy(u, n, v); });
}

UnrelatedFamily witness_W(std::size_t n, std::uint64_t max_copies) {
  return collect(poset_w(), n, max_copies, [&](const CopyVisitor& v) { return for_each_w_copy(n, v); });
}

UnrelatedFamily witness_V(std::size_t n, std::uint64_t max_copies) {
  return collect(poset_v(), n, max_copies, [&](const CopyVisitor& v) { return for_each_v_copy(n, v); });
}

namespace {

std::string describe_pair(const UnrelatedFamily& fam, std::size_t a, std::size_t b) {
  for (const auto& x : fam.copies[a])
    for (const auto& y : fam.copies[b])
      if (comparable(x, y))
        return "copies " + std::to_string(a) + " and " + std::to_string(b) + " are related: " + x.to_string() +
               " vs " + y.to_string();
  return {};
}

}  // namespace

CertifyReport certify(const UnrelatedFamily& fam, std::uint64_t exhaustive_limit, std::uint64_t samples,
                      std::uint64_t seed) {
  CertifyReport r;
  r.copies = fam.copies.size();
  for (std::size_t c = 0; c < fam.copies.size(); ++c) {
    if (!is_order_embedding({fam.ground_size, fam.copies[c]}, fam.pattern)) {
      r.ok = false;
      r.violation = "copy " + std::to_string(c) + " is not an order embedding of the pattern";
      return r;
    }
  }
  const auto k = fam.copies.size();
  if (k <= exhaustive_limit) {
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b) {
        ++r.pairs_checked;
        if (auto why = describe_pair(fam, a, b); !why.empty()) {
          r.ok = false;
          r.violation = why;
          return r;
        }
      }
    return r;
  }
  r.sampled = true;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  for (std::uint64_t s = 0; s < samples; ++s) {
    auto a = pick(rng), b = pick(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    ++r.pairs_checked;
    if (auto why = describe_pair(fam, a, b); !why.empty()) {
      r.ok = false;
      r.violation = why;
      return r;
    }
  }
  return r;
}

std::string dump_family(const UnrelatedFamily& fam) {
  std::ostringstream out;
  for (const auto& copy : fam.copies) {
    for (std::size_t x = 0; x < copy.size(); ++x) out << (x ? ";" : "") << copy[x].to_string();
    out << '\n';
  }
  return out.str();
}

}  // namespace sperner
