#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "sperner/errors.hpp"
#include "sperner/lattice.hpp"
#include "sperner/poset.hpp"
#include "test_posets.hpp"

using namespace sperner;

TEST_CASE("covers close reflexively and transitively") {
  const Poset v = poset_v();
  CHECK(v.size() == 3);
  CHECK(v.leq(0, 1));
  CHECK(v.leq(0, 2));
  CHECK_FALSE(v.comparable(1, 2));
  const Poset::Cover c[] = {{0, 1}, {1, 2}};
  const auto p = Poset::from_covers(3, c);
  CHECK(p.leq(0, 2));
  CHECK(p == chain(2));
  CHECK(Poset::from_covers(1, {}).size() == 1);
}

TEST_CASE("bad covers are rejected") {
  const Poset::Cover cycle[] = {{0, 1}, {1, 2}, {2, 0}};
  CHECK_THROWS_AS(Poset::from_covers(3, cycle), BadInput);
  const Poset::Cover out[] = {{0, 3}};
  CHECK_THROWS_AS(Poset::from_covers(3, out), BadInput);
  const Poset::Cover self[] = {{1, 1}};
  CHECK_THROWS_AS(Poset::from_covers(3, self), BadInput);
  CHECK_THROWS_AS(Poset::from_covers(0, {}), BadInput);
}

TEST_CASE("from_relation checks the axioms") {
  CHECK_THROWS_AS(Poset::from_relation(2, [](std::size_t, std::size_t) { return true; }), BadInput);
  CHECK_THROWS_AS(Poset::from_relation(3,
                                       [](std::size_t x, std::size_t y) {
                                         return (x == 0 && y == 1) || (x == 1 && y == 2);
                                       }),
                  BadInput);
}

TEST_CASE("boundedness and length") {
  CHECK(is_bounded(chain(4)));
  CHECK_FALSE(is_bounded(poset_w()));
  CHECK(is_bounded(chain(0)));
  CHECK(is_bounded(powerset_poset(3)));
  CHECK(length(chain(4)) == 4);
  CHECK(length(poset_w()) == 1);
  CHECK(length(poset_v()) == 1);
  CHECK(length(powerset_poset(3)) == 3);
  CHECK(width(poset_w()) == 3);
  CHECK(width(powerset_poset(4)) == 6);
  CHECK(width(chain(5)) == 1);
}

TEST_CASE("cardinal sums") {
  CHECK(are_isomorphic(cardinal_sum(chain(0), 3), antichain(3)));
  const auto two_v = cardinal_sum(poset_v(), 2);
  CHECK(two_v.size() == 6);
  CHECK(two_v.comparability_count() == 4);
  CHECK_FALSE(two_v.comparable(1, 4));
  const auto two_chains = cardinal_sum(chain(1), 2);
  CHECK(two_chains.size() == 4);
  CHECK(length(two_chains) == 1);
  CHECK_THROWS_AS(cardinal_sum(poset_v(), 0), BadInput);
  for (const auto& [name, u] : testing_posets::small_posets()) {
    CAPTURE(name);
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto s = cardinal_sum(u, k);
      CHECK(s.size() == k * u.size());
      CHECK(s.comparability_count() == k * u.comparability_count());
    }
  }
}

TEST_CASE("order embeddings") {
  auto sub = [](std::initializer_list<std::size_t> coords) {
    Subset s;
    for (auto c : coords) s.insert(c - 1);
    return s;
  };
  CHECK(is_order_embedding({2, {sub({}), sub({1}), sub({2})}}, poset_v()));
  CHECK_FALSE(is_order_embedding({2, {sub({}), sub({1}), sub({1, 2})}}, poset_v()));
  CHECK(is_order_embedding({3, {sub({}), sub({1}), sub({2}), sub({3})}}, poset_w()));
  CHECK_FALSE(is_order_embedding({2, {sub({}), sub({1}), sub({3})}}, poset_v()));  // outside [2]
}

TEST_CASE("embedding validity is invariant under permuting coordinates") {
  std::mt19937_64 rng(7);
  const SubsetAssignment f{4, {Subset::from_word(0b0001), Subset::from_word(0b0011), Subset::from_word(0b0101),
                              Subset::from_word(0b0111)}};
  const auto pow2 = powerset_poset(2);
  const bool base = is_order_embedding(f, pow2);
  CHECK(base);
  std::vector<std::size_t> perm(4);
  std::iota(perm.begin(), perm.end(), 0);
  for (int trial = 0; trial < 24; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    SubsetAssignment g{4, {}};
    for (const auto& img : f.images) {
      Subset s;
      for (auto c : img.coordinates()) s.insert(perm[c]);
      g.images.push_back(s);
    }
    CHECK(is_order_embedding(g, pow2) == base);
  }
}

TEST_CASE("down-set lattices") {
  CHECK(down_set_lattice(poset_v()).size() == 5);
  CHECK(down_set_lattice(poset_w()).size() == 9);
  CHECK(down_set_lattice(chain(0)).size() == 2);
  CHECK(down_set_lattice(chain(3)).size() == 5);
  CHECK(down_set_lattice(antichain(3)).size() == 8);
  const auto d = down_set_lattice(poset_w());
  CHECK(d.base_poset().has_value());
  CHECK(d.down_set_masks().front() == 0);
  CHECK(d.down_set_masks().back() == 0b1111);
  CHECK(d.is_distributive_exhaustive());
  CHECK_THROWS_AS(down_set_lattice(antichain(12), 2048), ResourceLimit);
}

TEST_CASE("join-irreducibles and the Birkhoff round trip") {
  CHECK(are_isomorphic(join_irreducibles(down_set_lattice(poset_v())), poset_v()));
  CHECK(are_isomorphic(join_irreducibles(down_set_lattice(poset_w())), poset_w()));
  CHECK(join_irreducibles(chain_lattice(2)).size() == 1);
  CHECK(are_isomorphic(join_irreducibles(chain_lattice(5)), chain(3)));
  for (const auto& [name, u] : testing_posets::small_posets()) {
    CAPTURE(name);
    CHECK(are_isomorphic(join_irreducibles(down_set_lattice(u)), u));
  }
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    const auto u = testing_posets::random_poset(5 + seed % 8, 0.3, seed);
    CAPTURE(seed);
    CHECK(are_isomorphic(join_irreducibles(down_set_lattice(u)), u));
  }
}

TEST_CASE("isomorphism") {
  CHECK_FALSE(are_isomorphic(poset_v(), chain(2)));
  const Poset::Cover relabeled[] = {{3, 0}, {3, 1}, {3, 2}};
  const auto w2 = Poset::from_covers(4, relabeled);
  const auto map = find_isomorphism(poset_w(), w2);
  REQUIRE(map.has_value());
  CHECK((*map)[0] == 3);
  CHECK_FALSE(are_isomorphic(testing_posets::n_poset(), testing_posets::bowtie()));
  CHECK_FALSE(are_isomorphic(poset_w(), poset_v()));
  // N and its dual are isomorphic; N and the 4-chain minus a cover are not
  const Poset::Cover dual[] = {{2, 0}, {2, 1}, {3, 1}};
  CHECK(are_isomorphic(testing_posets::n_poset(), Poset::from_covers(4, dual)));
}

TEST_CASE("lattice validation") {
  // pentagon N5: 0 < a < b < 1, 0 < c < 1
  const auto n5 = Poset::from_relation(5, [](std::size_t x, std::size_t y) {
    if (x == 0 || y == 4) return true;
    return x == 1 && y == 2;
  });
  std::vector<Lattice::Element> meet(25), join(25);
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 5; ++b) {
      std::size_t m = 0, j = 4;
      for (std::size_t z = 0; z < 5; ++z) {
        if (n5.leq(z, a) && n5.leq(z, b) && n5.leq(m, z)) m = z;
        if (n5.leq(a, z) && n5.leq(b, z) && n5.leq(z, j)) j = z;
      }
      meet[a * 5 + b] = static_cast<Lattice::Element>(m);
      join[a * 5 + b] = static_cast<Lattice::Element>(j);
    }
  const auto l = Lattice::from_tables(5, meet, join);
  CHECK_FALSE(l.is_distributive_exhaustive());
  CHECK_THROWS_AS(DistLattice::from_lattice(l), BadInput);
  auto bad = meet;
  bad[1] = 3;
  CHECK_THROWS_AS(Lattice::from_tables(5, bad, join), BadInput);
}

TEST_CASE("text format and named specs") {
  const auto p = parse_poset_text("# W\nposet 4\ncover 0 1\ncover 0 2  # c\n\ncover 0 3\n");
  CHECK(p == poset_w());
  CHECK_THROWS_AS(parse_poset_text("cover 0 1\n"), BadInput);
  CHECK_THROWS_AS(parse_poset_text("poset 3\ncover 0 x\n"), BadInput);
  CHECK_THROWS_AS(parse_poset_text("poset 3\nedge 0 1\n"), BadInput);
  CHECK(poset_from_spec("chain:4") == chain(4));
  CHECK(poset_from_spec("antichain:3") == antichain(3));
  CHECK(poset_from_spec("v") == poset_v());
  CHECK(poset_from_spec("powerset:2") == powerset_poset(2));
  CHECK_THROWS_AS(poset_from_spec("no-such-file"), BadInput);
  CHECK_THROWS_AS(poset_from_spec("chain:x"), BadInput);
}

TEST_CASE("subsets") {
  Subset s;
  s.insert(0);
  s.insert(2);
  CHECK(s.to_string() == "{1,3}");
  CHECK(Subset{}.to_string() == "{}");
  s.insert(100);
  CHECK(s.count() == 3);
  CHECK(Subset::range(0, 3).subset_of(Subset::range(0, 4)));
  std::vector<std::uint64_t> seen;
  const auto visited = for_each_k_subset(Subset::range(0, 5), 2, [&](const Subset& x) { seen.push_back(x.low_word()); });
  CHECK(visited == 10);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(for_each_k_subset(Subset::range(0, 3), 0, [](const Subset&) {}) == 1);
  CHECK(for_each_k_subset(Subset::range(0, 3), 4, [](const Subset&) {}) == 0);
}
