#include "sperner/exact.hpp"

#include "sperner/errors.hpp"

namespace sperner {

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Poset& u, std::size_t n) : u_(u), n_(n), order_(u.linear_extension()), images_(u.size(), 0) {
    placed_.assign(u.size(), false);
    twin_before_.assign(u.size(), u.size());
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const auto x = order_[i];
      for (std::size_t j = 0; j < i; ++j) {
        const auto y = order_[j];
        if (is_twin(x, y)) twin_before_[x] = y;  // latest earlier twin
      }
    }
  }

  bool run() { return place(0, 0); }
  [[nodiscard]] const std::vector<std::uint64_t>& images() const { return images_; }

 private:
  [[nodiscard]] bool is_twin(std::size_t x, std::size_t y) const {
    for (std::size_t z = 0; z < u_.size(); ++z) {
      if (z == x || z == y) continue;
      if (u_.less(z, x) != u_.less(z, y) || u_.less(x, z) != u_.less(y, z)) return false;
    }
    return !u_.comparable(x, y);
  }

  bool place(std::size_t depth, std::size_t used) {
    if (depth == order_.size()) return true;
    const auto x = order_[depth];
    std::uint64_t required = 0;
    for (std::size_t y = 0; y < u_.size(); ++y)
      if (placed_[y] && u_.less(y, x)) required |= images_[y];
    const std::uint64_t used_mask = used == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << used) - 1;
    const std::uint64_t free = used_mask & ~required;
    for (std::size_t fresh = 0; used + fresh <= n_; ++fresh) {
      const std::uint64_t fresh_bits = ((std::uint64_t{1} << fresh) - 1) << used;
      std::uint64_t s = 0;
      do {
        const std::uint64_t img = required | s | fresh_bits;
        if (admissible(x, img)) {
          images_[x] = img;
          placed_[x] = true;
          if (place(depth + 1, used + fresh)) return true;
          placed_[x] = false;
        }
        s = ((s | ~free) + 1) & free;  // next submask of `free` in increasing order
      } while (s != 0);
    }
    return false;
  }

  [[nodiscard]] bool admissible(std::size_t x, std::uint64_t img) const {
    if (twin_before_[x] != u_.size() && !(images_[twin_before_[x]] < img)) return false;
    for (std::size_t y = 0; y < u_.size(); ++y) {
      if (!placed_[y]) continue;
      const auto other = images_[y];
      if (u_.less(y, x)) {
        if (other == img) return false;
      } else {
        // no placed element lies above x in a linear extension
        const bool up = (img & ~other) == 0, down = (other & ~img) == 0;
        if (up || down) return false;
      }
    }
    return true;
  }

  const Poset& u_;
  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<std::uint64_t> images_;
  std::vector<bool> placed_;
  std::vector<std::size_t> twin_before_;
};

std::uint64_t require_positive(const BigNat& k) {
  if (k <= 0) throw BadInput("k must be at least 1");
  return afsb(k);
}

}  // namespace

Embedding minimum_embedding(const Poset& u, std::size_t max_size) {
  if (u.size() > max_size)
    throw ResourceLimit("embedding-dimension search is capped at " + std::to_string(max_size) + " elements");
  if (u.size() > 64) throw ResourceLimit("embedding-dimension search supports at most 64 elements");
  std::size_t lower = length(u);
  const auto w = width(u);
  std::size_t by_width = 0;
  while (fsb(static_cast<std::int64_t>(by_width)) < w) ++by_width;
  lower = std::max(lower, by_width);
  // The principal-ideal map embeds U into Pow(|U|), so the loop terminates.
  for (std::size_t n = lower; n <= u.size(); ++n) {
    EmbeddingSearch search(u, n);
    if (search.run()) {
      Embedding e{n, {}};
      for (auto img : search.images()) e.images.push_back(Subset::from_word(img));
      return e;
    }
  }
  throw std::logic_error("no embedding into Pow(|U|) found");
}

MonotoneFn shifted_fsb_fn(std::size_t p, std::string name) {
  return {std::move(name), [p](std::uint64_t n) {
            return n < p ? BigNat(0) : fsb(static_cast<std::int64_t>(n - p));
          }};
}

SpernerResult sp_bounded(const Poset& u, std::uint64_t n) {
  if (!is_bounded(u))
    throw HypothesisNotMet("poset is not bounded; use the estimator/bracket routes instead");
  const auto p = min_embedding_dimension(u);
  return SpernerResult::exact(shifted_fsb_fn(p, "").eval(n), "bounded-formula");
}

std::uint64_t asp_bounded(const Poset& u, const BigNat& k) {
  if (!is_bounded(u))
    throw HypothesisNotMet("poset is not bounded; use the estimator/bracket routes instead");
  const auto a = require_positive(k);
  return min_embedding_dimension(u) + a;
}

SpernerResult sp_length_matching(const Poset& u, std::uint64_t n) {
  const auto t = length(u);
  const auto p = min_embedding_dimension(u);
  if (t != p)
    throw HypothesisNotMet("length " + std::to_string(t) + " differs from embedding dimension " +
                           std::to_string(p));
  return SpernerResult::exact(shifted_fsb_fn(t, "").eval(n), "length-matching");
}

BigNat sp_general_lower(const Poset& u, std::uint64_t n) {
  return shifted_fsb_fn(min_embedding_dimension(u), "").eval(n);
}

std::uint64_t asp_general_upper(const Poset& u, const BigNat& k) {
  const auto a = require_positive(k);
  return min_embedding_dimension(u) + a;
}

}  // namespace sperner
