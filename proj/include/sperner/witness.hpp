#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "sperner/poset.hpp"

namespace sperner {

/// Copies of `pattern` inside Pow([ground_size]); copies[c][x] is the image
/// of pattern element x in copy c.
struct UnrelatedFamily {
  std::size_t ground_size = 0;
  Poset pattern;
  std::vector<std::vector<Subset>> copies;
};

using CopyVisitor = std::function<void(std::span<const Subset>)>;

inline constexpr std::uint64_t kDefaultMaxCopies = 2'000'000;

// Streaming generators; each returns the number of copies visited. Copies
// come out in a fixed order, so dumps are reproducible.

/// {X | shifted image of U : X a floor((n-p)/2)-subset of [n-p]}, with U's
/// minimum embedding moved onto the last p coordinates. Throws BadInput when
/// n < p.
std::uint64_t for_each_bounded_copy(const Poset& u, std::size_t n, const CopyVisitor& visit);
/// One copy {Z, Z+c_i, Z+d_i, Z+e_i} per eligible set vector, blocks
/// B_j = {3j+1, 3j+2, 3j+3}. Requires n >= 3.
std::uint64_t for_each_w_copy(std::size_t n, const CopyVisitor& visit);
/// Blocks B_j = {2j+1, 2j+2}; X_j = B_j for j < i, X_i a
/// (ceil((n-2)/2) - 2i)-subset of the coordinates after B_i. Requires n >= 2.
std::uint64_t for_each_v_copy(std::size_t n, const CopyVisitor& visit);

// Materialized versions; ResourceLimit when more than max_copies would be
// produced.
UnrelatedFamily witness_bounded(const Poset& u, std::size_t n, std::uint64_t max_copies = kDefaultMaxCopies);
UnrelatedFamily witness_W(std::size_t n, std::uint64_t max_copies = kDefaultMaxCopies);
UnrelatedFamily witness_V(std::size_t n, std::uint64_t max_copies = kDefaultMaxCopies);

struct CertifyReport {
  bool ok = true;
  bool sampled = false;  // unrelatedness checked on random pairs only
  std::uint64_t copies = 0;
  std::uint64_t pairs_checked = 0;
  std::string violation;  // first problem found, empty when ok
};

inline constexpr std::uint64_t kExhaustiveCertifyLimit = 100'000;

/// Every copy must be an order embedding of the pattern inside [ground_size]
/// and every two copies unrelated. Families above `exhaustive_limit` copies
/// get all embeddings checked but only `samples` random pairs (seeded).
CertifyReport certify(const UnrelatedFamily& fam, std::uint64_t exhaustive_limit = kExhaustiveCertifyLimit,
                      std::uint64_t samples = 2'000'000, std::uint64_t seed = 1);

/// One line per copy: its subsets in pattern order, "{1,2}" style, joined
/// by ';'.
std::string dump_family(const UnrelatedFamily& fam);

}  // namespace sperner
