#include <doctest.h>

#include "sperner/errors.hpp"
#include "sperner/exact.hpp"
#include "sperner/oracle.hpp"
#include "test_posets.hpp"

using namespace sperner;

namespace {

// least n with any copy of u in Pow([n]), straight from the copy graph
std::size_t dimension_by_copies(const Poset& u) {
  for (std::size_t n = 0; n <= 6; ++n)
    if (build_copy_graph(u, n).size() > 0) return n;
  return 99;
}

}  // namespace

TEST_CASE("embedding dimension of the named posets") {
  CHECK(min_embedding_dimension(chain(0)) == 0);
  CHECK(min_embedding_dimension(poset_w()) == 3);
  CHECK(min_embedding_dimension(poset_v()) == 2);
  for (std::size_t t = 0; t <= 6; ++t) CHECK(min_embedding_dimension(chain(t)) == t);
  for (std::size_t p = 0; p <= 3; ++p) CHECK(min_embedding_dimension(powerset_poset(p)) == p);
  CHECK(min_embedding_dimension(antichain(6)) == 4);
  CHECK(min_embedding_dimension(antichain(7)) == 5);
  CHECK(min_embedding_dimension(antichain(16)) == 6);
  CHECK(min_embedding_dimension(testing_posets::bowtie()) == 4);
  CHECK_THROWS_AS(min_embedding_dimension(antichain(17)), ResourceLimit);
  CHECK(min_embedding_dimension(antichain(17), 20) == 6);
}

TEST_CASE("embedding dimension agrees with the copy graph and returns a valid embedding") {
  for (const auto& [name, u] : testing_posets::small_posets()) {
    CAPTURE(name);
    const auto e = minimum_embedding(u);
    CHECK(is_order_embedding({e.dimension, e.images}, u));
    if (u.size() <= 6) CHECK(e.dimension == dimension_by_copies(u));
  }
}

TEST_CASE("bounded formula") {
  CHECK(sp_bounded(chain(4), 18).value == 3432);
  CHECK(sp_bounded(chain(4), 17).value == 1716);
  CHECK(sp_bounded(powerset_poset(2), 4).value == 2);
  CHECK(sp_bounded(chain(4), 3).value == 0);
  CHECK(sp_bounded(chain(4), 18).kind == ResultKind::exact);
  CHECK(sp_bounded(chain(4), 18).lo == 3432);
  CHECK_THROWS_AS(sp_bounded(poset_w(), 5), HypothesisNotMet);
  CHECK(asp_bounded(chain(4), 2023) == 18);
  CHECK(asp_bounded(chain(0), 2) == 2);
  CHECK(asp_bounded(chain(4), parse_bignat("5e606")) == 2026);
  CHECK_THROWS_AS(asp_bounded(chain(4), 0), BadInput);
  CHECK_THROWS_AS(asp_bounded(poset_v(), 2), HypothesisNotMet);
}

TEST_CASE("length-matching formula") {
  CHECK(sp_length_matching(chain(2), 5).value == 3);
  CHECK_THROWS_AS(sp_length_matching(poset_v(), 5), HypothesisNotMet);
  CHECK(sp_length_matching(chain(0), 4).value == 6);
}

TEST_CASE("general bounds") {
  CHECK(sp_general_lower(poset_w(), 10) == 35);
  CHECK(sp_general_lower(poset_v(), 4) == 2);
  CHECK(asp_general_upper(poset_w(), 1) == 3);
  CHECK(asp_general_upper(poset_v(), 2) == 4);
}

TEST_CASE("bounded formula equals the exhaustive oracle (n <= 5)") {
  OracleLimits limits;
  limits.max_pattern = 8;
  for (const auto& [name, u] : testing_posets::small_posets()) {
    if (!is_bounded(u) || u.size() > 8) continue;
    for (std::size_t n = 0; n <= 5; ++n) {
      CAPTURE(name);
      CAPTURE(n);
      CHECK(sp_bounded(u, n).value == sp_exhaustive(u, n, limits).value);
    }
  }
}

TEST_CASE("general lower bound never exceeds the oracle") {
  for (const auto& [name, u] : testing_posets::small_posets()) {
    if (u.size() > 6) continue;
    const auto p = min_embedding_dimension(u);
    for (std::size_t n = p; n <= 5; ++n) {
      CAPTURE(name);
      CAPTURE(n);
      CHECK(sp_general_lower(u, n) <= sp_exhaustive(u, n).value);
    }
  }
}

TEST_CASE("monotone in n and consistent with its adjoint") {
  for (const auto& u : {chain(0), chain(2), chain(4), powerset_poset(2)}) {
    for (std::uint64_t n = 0; n < 60; ++n) REQUIRE(sp_bounded(u, n).value <= sp_bounded(u, n + 1).value);
    const auto f = shifted_fsb_fn(min_embedding_dimension(u), "Sp");
    for (unsigned long k = 1; k <= 10'000; ++k) REQUIRE(asp_bounded(u, k) == left_adjoint(f, k));
  }
}
