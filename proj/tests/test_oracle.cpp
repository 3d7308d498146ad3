#include <doctest.h>

#include "sperner/errors.hpp"
#include "sperner/oracle.hpp"

using namespace sperner;

TEST_CASE("copy graph vertex counts") {
  // distinct image sets, frozen from an independent enumeration
  const std::vector<std::size_t> v_counts = {1, 12, 97, 660};
  for (std::size_t n = 2; n <= 5; ++n) CHECK(build_copy_graph(poset_v(), n).size() == v_counts[n - 2]);
  const std::vector<std::size_t> w_counts = {2, 72, 1430};
  for (std::size_t n = 3; n <= 5; ++n) CHECK(build_copy_graph(poset_w(), n).size() == w_counts[n - 3]);
  CHECK(build_copy_graph(chain(0), 3).size() == 8);
  const auto g = build_copy_graph(poset_v(), 3);
  for (std::size_t a = 0; a < g.size(); ++a) {
    CHECK_FALSE(g.unrelated(a, a));
    for (std::size_t b = 0; b < g.size(); ++b) CHECK(g.unrelated(a, b) == g.unrelated(b, a));
  }
}

TEST_CASE("exhaustive Sp on small instances") {
  CHECK(sp_exhaustive(poset_w(), 3).value == 1);
  CHECK(sp_exhaustive(poset_w(), 4).value == 1);
  CHECK(sp_exhaustive(poset_w(), 5).value == 2);
  CHECK(sp_exhaustive(poset_w(), 2).value == 0);
  const std::vector<std::uint64_t> v = {1, 1, 2, 4};
  for (std::size_t n = 2; n <= 5; ++n) CHECK(sp_exhaustive(poset_v(), n).value == v[n - 2]);
  CHECK(sp_exhaustive(chain(1), 3).value == 2);
  for (std::size_t t = 0; t <= 3; ++t)
    for (std::size_t n = 0; n <= 5; ++n) {
      CAPTURE(t);
      CAPTURE(n);
      const auto r = sp_exhaustive(chain(t), n);
      CHECK(r.exact);
      CHECK(BigNat(static_cast<unsigned long>(r.value)) == fsb(static_cast<std::int64_t>(n) - static_cast<std::int64_t>(t)));
      CHECK(certify(r.witness).ok);
      CHECK(r.witness.copies.size() == r.value);
    }
}

TEST_CASE("oracle limits") {
  CHECK_THROWS_AS(sp_exhaustive(poset_w(), 6), ResourceLimit);
  CHECK_THROWS_AS(sp_exhaustive(powerset_poset(3), 3), ResourceLimit);
  OracleLimits limits;
  limits.max_n = 7;
  CHECK_THROWS_AS(sp_exhaustive(chain(0), 7, limits), ResourceLimit);
}

TEST_CASE("time budget yields a labelled partial result") {
  OracleLimits limits;
  limits.max_n = 6;
  limits.time_budget_seconds = 1e-9;
  const auto r = sp_exhaustive(poset_v(), 6, limits);
  CHECK(r.value <= 7);  // upS(V,6) = 7
  CHECK(certify(r.witness).ok);
}

TEST_CASE("permutation classes") {
  CHECK(gamma_size(2, 4) == 4);
  CHECK(gamma_size(5, 5) == 120);
  CHECK(gamma_size(1, 5) == 24);
  Subset x;
  x.insert(1);
  CHECK(gamma_enumerate(x, 5) == 24);
  CHECK(gamma_enumerate(Subset{}, 4) == 24);
  CHECK(gamma_enumerate(Subset{}, 4, GammaReading::equal) == 24);
  for (std::size_t n = 0; n <= 6; ++n)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const auto s = Subset::from_word(mask);
      const auto closed = gamma_size(s.count(), n);
      REQUIRE(BigNat(static_cast<unsigned long>(gamma_enumerate(s, n))) == closed);
      REQUIRE(BigNat(static_cast<unsigned long>(gamma_enumerate(s, n, GammaReading::equal))) == closed);
    }
  CHECK_THROWS_AS(gamma_enumerate(Subset::from_word(0b1000), 3), BadInput);
}

TEST_CASE("class disjointness") {
  for (std::size_t n = 0; n <= 6; ++n) {
    CHECK(gamma_disjointness_check(n));
    CHECK(gamma_disjointness_check(n, GammaReading::equal));
  }
}

TEST_CASE("g0 minimum") {
  for (std::size_t n = 3; n <= 40; ++n) {
    CAPTURE(n);
    const auto r = g0_argmin_check(n);
    CHECK(r.ok);
    CHECK(r.argmin == (n - 1) / 2);
  }
  CHECK(g0(10, 4) == BigNat(18) * 24 * 120);
  CHECK_THROWS_AS(g0_argmin_check(2), BadInput);
}

TEST_CASE("counting bound replay on the oracle witnesses") {
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto r = sp_exhaustive(poset_w(), n);
    const auto replay = counting_bound_replay(r.witness);
    CHECK(replay.disjoint);
    CHECK(replay.ok());
  }
}
