#include <doctest.h>

#include <map>
#include <memory>
#include <vector>

#include "sperner/bigcomb.hpp"
#include "sperner/errors.hpp"
#include "sperner/estimates.hpp"

using namespace sperner;

namespace {

// f restricted to a precomputed table, for grid checks of the adjoint laws
MonotoneFn tabulated(const MonotoneFn& f, std::uint64_t upto) {
  auto values = std::make_shared<std::vector<BigNat>>();
  for (std::uint64_t n = 0; n <= upto; ++n) values->push_back(f.eval(n));
  return {f.name, [values, f](std::uint64_t n) { return n < values->size() ? (*values)[n] : f.eval(n); }};
}

std::vector<MonotoneFn> adjoint_grid_functions() {
  return {tabulated(fsb_fn(), 400),
          tabulated(lower_estimate_fn(Pattern::W), 400),
          tabulated(upper_estimate_fn(Pattern::W), 400),
          tabulated(lower_estimate_fn(Pattern::V), 400),
          tabulated(upper_estimate_fn(Pattern::V), 400)};
}

}  // namespace

TEST_CASE("binomials") {
  CHECK(binom(9, 4) == 126);
  CHECK(binom(4, -1) == 0);
  CHECK(binom(4, 5) == 0);
  CHECK(binom(-2, 1) == 0);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(60, 30) == BigNat("118264581564861424"));
  CHECK(to_scientific(binom(2020, 1010), 4) == "2.137e606");
  CHECK(decimal_digits(binom(2020, 1010)) == 607);
}

TEST_CASE("Pascal identity on n <= 300") {
  for (std::int64_t n = 1; n <= 300; ++n)
    for (std::int64_t k = -1; k <= n + 1; ++k) REQUIRE(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
}

TEST_CASE("central binomials") {
  CHECK(fsb(13) == 1716);
  CHECK(fsb(14) == 3432);
  CHECK(fsb(0) == 1);
  CHECK(fsb(-3) == 0);
  CHECK(fsb(1) == 1);
  CHECK(fsb(2) == 2);
}

TEST_CASE("left adjoints") {
  CHECK(left_adjoint(fsb_fn(), 2023) == 14);
  CHECK(left_adjoint(fsb_fn(), 1) == 0);
  CHECK(left_adjoint(lower_estimate_fn(Pattern::W), 5) == 6);
  CHECK(afsb(1) == 0);
  CHECK(afsb(2) == 2);
  CHECK(afsb(3) == 3);
  CHECK(afsb(2023) == 14);
  CHECK(afsb(parse_bignat("3e606")) == 2021);
  CHECK(afsb(parse_bignat("5e606")) == 2022);
  CHECK_THROWS_AS(afsb(0), BadInput);
  const MonotoneFn bounded{"bounded", [](std::uint64_t n) { return BigNat(std::min<std::uint64_t>(n, 10)); }};
  CHECK_THROWS_AS(left_adjoint(bounded, 11, 20), ResourceLimit);
  CHECK(left_adjoint(bounded, 10, 20) == 10);
}

TEST_CASE("Galois law and recovery on the grid") {
  constexpr std::uint64_t kMaxK = 10'000, kMaxN = 200;
  for (const auto& f : adjoint_grid_functions()) {
    CAPTURE(f.name);
    std::vector<std::uint64_t> adj(kMaxK + 1);
    for (std::uint64_t k = 0; k <= kMaxK; ++k) adj[k] = left_adjoint(f, BigNat(static_cast<unsigned long>(k)));
    for (std::uint64_t n = 0; n <= kMaxN; ++n) {
      const BigNat fn = f.eval(n);
      const std::uint64_t fn_small = fn.fits_ulong_p() ? fn.get_ui() : UINT64_MAX;
      for (std::uint64_t k = 0; k <= kMaxK; ++k) {
        const bool lhs = k <= fn_small;
        if (lhs != (adj[k] <= n)) FAIL("Galois law fails at k=" << k << " n=" << n);
      }
      // f(n) = max{y : f*(y) <= n}, checked where the grid covers f(n) + 1
      if (fn < kMaxK) {
        const auto y = fn.get_ui();
        CHECK(adj[y] <= n);
        CHECK(adj[y + 1] > n);
      }
    }
  }
}

TEST_CASE("antitonicity: loS <= upS pointwise gives upS* <= loS*") {
  const auto lo = tabulated(lower_estimate_fn(Pattern::W), 400);
  const auto hi = tabulated(upper_estimate_fn(Pattern::W), 400);
  for (std::uint64_t n = 0; n <= 200; ++n) REQUIRE(lo.eval(n) <= hi.eval(n));
  for (unsigned long k = 1; k <= 10'000; ++k) REQUIRE(left_adjoint(hi, k) <= left_adjoint(lo, k));
}

TEST_CASE("decimal rendering") {
  CHECK(parse_bignat("12345") == 12345);
  CHECK(parse_bignat("3e2") == 300);
  CHECK(decimal_digits(parse_bignat("3e606")) == 607);
  CHECK_THROWS_AS(parse_bignat("-3"), BadInput);
  CHECK_THROWS_AS(parse_bignat("3e"), BadInput);
  CHECK_THROWS_AS(parse_bignat(""), BadInput);
  CHECK_THROWS_AS(parse_bignat("1.5"), BadInput);
  CHECK(group_thousands(1337896) == "1 337 896");
  CHECK(group_thousands(716) == "716");
  CHECK(group_thousands(0) == "0");
  CHECK(to_scientific(BigNat(12345), 3) == "1.23e4");
  CHECK(to_scientific(BigNat(12350), 3) == "1.24e4");  // half to even
  CHECK(to_scientific(BigNat(12250), 3) == "1.22e4");
  CHECK(to_scientific(BigNat(99960), 3) == "1.00e5");
  CHECK(rounded_ratio(70, 66, 3) == "1.061");
  CHECK(rounded_ratio(1, 8, 2) == "0.12");
  CHECK(rounded_ratio(3, 8, 2) == "0.38");
  CHECK(rounded_ratio(1, 0, 9) == "undefined");
  CHECK(rounded_ratio(5, 1, 2) == "5.00");
}
