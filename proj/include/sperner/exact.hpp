#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sperner/bigcomb.hpp"
#include "sperner/poset.hpp"

namespace sperner {

/// Default cap on |U| for the embedding-dimension search.
inline constexpr std::size_t kDefaultEmbeddingCap = 16;

/// Least n admitting an order embedding of U into Pow([n]), with one such
/// embedding (images live on coordinates 0..dimension-1).
struct Embedding {
  std::size_t dimension = 0;
  std::vector<Subset> images;
};

/// Iterative deepening on n from max(length(U), least n with fsb(n) >=
/// width(U)) up to |U|; each level is an exhaustive backtracking search along
/// a fixed linear extension. Coordinates of Pow([n]) are interchangeable, so a
/// fresh coordinate may only be introduced as the next unused one; twin
/// elements (same strict up- and down-sets) get increasing images.
/// Throws ResourceLimit when |U| > max_size.
Embedding minimum_embedding(const Poset& u, std::size_t max_size = kDefaultEmbeddingCap);

inline std::size_t min_embedding_dimension(const Poset& u, std::size_t max_size = kDefaultEmbeddingCap) {
  return minimum_embedding(u, max_size).dimension;
}

enum class ResultKind { exact, bracket };

struct SpernerResult {
  ResultKind kind = ResultKind::exact;
  BigNat value;  // meaningful when exact
  BigNat lo, hi;
  std::string method;

  static SpernerResult exact(BigNat v, std::string method) {
    return {ResultKind::exact, v, v, v, std::move(method)};
  }
  static SpernerResult bracket(BigNat lo, BigNat hi, std::string method) {
    return {ResultKind::bracket, 0, std::move(lo), std::move(hi), std::move(method)};
  }
};

// Counts of pairwise unrelated copies of U in Pow([n]) (Sp) and their left
// adjoints (Asp). `p` below is min_embedding_dimension(U).

/// Sp(U, n) = fsb(n - p) for bounded U; 0 when n < p.
/// Throws HypothesisNotMet when U is not bounded.
SpernerResult sp_bounded(const Poset& u, std::uint64_t n);

/// Asp(U, k) = p + afsb(k) for bounded U and k >= 1.
std::uint64_t asp_bounded(const Poset& u, const BigNat& k);

/// Sp(U, n) = fsb(n - t) when length(U) = t equals p.
/// Throws HypothesisNotMet otherwise.
SpernerResult sp_length_matching(const Poset& u, std::uint64_t n);

/// Valid for every finite U: Sp(U, n) >= fsb(n - p).
BigNat sp_general_lower(const Poset& u, std::uint64_t n);
/// Valid for every finite U: Asp(U, k) <= p + afsb(k), k >= 1.
std::uint64_t asp_general_upper(const Poset& u, const BigNat& k);

/// n -> fsb(n - p) as a MonotoneFn (p precomputed).
MonotoneFn shifted_fsb_fn(std::size_t p, std::string name);

}  // namespace sperner
