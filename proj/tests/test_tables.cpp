#include <doctest.h>

#include "sperner/errors.hpp"
#include "sperner/tables.hpp"

using namespace sperner;

TEST_CASE("table ids") {
  for (const char* name : {"t1", "adjoints", "chain4", "v-small", "v-big", "w-big", "gmin"}) {
    const auto id = parse_table_id(name);
    REQUIRE(id.has_value());
    CHECK(table_id_name(*id) == name);
  }
  CHECK_FALSE(parse_table_id("t2").has_value());
}

TEST_CASE("t1 rows and csv rendering") {
  const auto t = build_table(TableId::t1, {std::nullopt, std::nullopt, true});
  REQUIRE(t.rows.size() == 28);
  CHECK(t.rows[22 - 3] == std::vector<std::string>{"22", "178388", "184756", "1.035697468"});
  const auto csv = render_table(build_table(TableId::t1, {10, 10, true}), true);
  CHECK(csv == "n,loS,upS,ratio\n10,66,70,1.060606061\n");
  const auto plain = render_table(build_table(TableId::t1, {25, 25, false}), false);
  CHECK(plain.find("1 337 896") != std::string::npos);
}

TEST_CASE("chain and big-n tables") {
  const auto c = build_table(TableId::chain4, {});
  REQUIRE(c.rows.size() == 5);
  CHECK(c.rows[0][1] == "1 716");
  CHECK(c.rows[2][1] == "2.137e606");
  CHECK(c.rows[4][1] == "8.544e606");
  const auto v = build_table(TableId::v_big, {});
  CHECK(v.rows[1][3] == "1.000219780");
  CHECK(v.rows[0][1] == "2.848220e606");
}

TEST_CASE("adjoint and gmin tables") {
  const auto a = build_table(TableId::adjoints, {std::nullopt, std::nullopt, true});
  REQUIRE(a.rows.size() == 15);
  CHECK(a.rows[1] == std::vector<std::string>{"2", "4", "5"});
  const auto g = build_table(TableId::gmin, {});
  REQUIRE(g.rows.size() == 3);
  CHECK(g.rows[1] == std::vector<std::string>{"D(V)", "15", "15", "2023", "2023"});
  CHECK(g.rows[2] == std::vector<std::string>{"D(W)", "16", "16", "2023", "2024"});
}

TEST_CASE("ranges and caps") {
  CHECK_THROWS_AS(build_table(TableId::t1, {2, 5, false}), BadInput);
  CHECK_THROWS_AS(build_table(TableId::t1, {10, 5, false}), BadInput);
  CHECK_THROWS_AS(build_table(TableId::t1, {3, 5000, false}), ResourceLimit);
  CHECK_THROWS_AS(build_table(TableId::gmin, {1, 2, false}), BadInput);
  CHECK(build_table(TableId::v_small, {2, 4, false}).rows.size() == 3);
  CHECK(build_table(TableId::w_big, {100, 101, false}).rows.size() == 2);
}
