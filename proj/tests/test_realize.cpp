#include <catch2/catch_amalgamated.hpp>

#include "gerechte/gerechte.hpp"
#include "test_util.hpp"

using namespace gerechte;

TEST_CASE("realize_uniform handles all shapes including degenerate ones") {
  for (auto [s, t] : std::vector<std::pair<int, int>>{{1, 1}, {1, 4}, {2, 2}, {2, 3}, {3, 3}}) {
    auto F = generate(GenClass::Uniform, GenParams{s, t, 0}, 0);
    auto L = realize_uniform(F);
    REQUIRE(verify_realization(L, F).ok);
  }
  REQUIRE_THROWS_AS(realize_uniform(load_framework("mixed12_divides.txt")),
                    UnsupportedError);
}

TEST_CASE("realize_divides is structure independent") {
  auto F = load_framework("mixed12_divides.txt");
  auto L = realize_divides(F);
  REQUIRE(verify_realization(L, F).ok);

  // the square depends only on (s, c); it realizes other s=2, t=6 frameworks
  auto fixed = realize_divides_square(2, 3);
  REQUIRE(L == fixed);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto G = generate(GenClass::Mixed, GenParams{2, 6, 0}, seed);
    REQUIRE(verify_realization(fixed, G).ok);
  }
  REQUIRE_THROWS_AS(realize_divides(generate(GenClass::Mixed, GenParams{2, 3, 0}, 1)),
                    UnsupportedError);
}

TEST_CASE("reduced fill satisfies its invariants") {
  auto F = load_framework("mixed12_divides.txt");
  auto M = build_reduced_fill(F, 2, 6);
  REQUIRE(M.side == 6);
  REQUIRE(M.symbols == 3);
  // the constructor already asserts row/column/region balance; recount here
  for (int i = 0; i < M.side; ++i) {
    std::vector<int> rc(M.symbols, 0);
    for (int j = 0; j < M.side; ++j) rc[M.at(i, j) - 1]++;
    for (int c : rc) REQUIRE(c == 2);
  }
}

TEST_CASE("realize_mixed covers both the k=1 and k>1 paths") {
  SECTION("coprime sides go through the reduced fill directly") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      auto F = generate(GenClass::Mixed, GenParams{2, 3, 0}, seed);
      auto L = realize_mixed(F);
      REQUIRE(verify_realization(L, F).ok);
    }
  }
  SECTION("common factor goes through the outline blow-up") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      auto F = generate(GenClass::Mixed, GenParams{4, 6, 0}, seed);
      auto L = realize_mixed(F);
      REQUIRE(verify_realization(L, F).ok);
    }
  }
  SECTION("equal sides are the uniform square case") {
    auto F = generate(GenClass::Uniform, GenParams{3, 3, 0}, 0);
    REQUIRE(verify_realization(realize_mixed(F), F).ok);
  }
  REQUIRE_THROWS_AS(realize_mixed(sandwich4()), UnsupportedError);
}

TEST_CASE("row_realization works for every gerechte framework") {
  auto W = row_realization(diagonal2());
  REQUIRE(verify_row_realization(W, diagonal2()).ok);
  auto F = load_framework("tree12.txt");
  REQUIRE(verify_row_realization(row_realization(F), F).ok);
  RegionPartition not_gerechte(2, 3, {1, 1, 1, 2, 2, 2});
  REQUIRE_THROWS_AS(row_realization(not_gerechte), Error);
}

TEST_CASE("realize_columns") {
  auto F = load_framework("columns12.txt");
  auto L = realize_columns(F);
  REQUIRE(verify_realization(L, F).ok);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto G = generate(GenClass::Columns, GenParams{0, 0, 10}, seed);
    REQUIRE(verify_realization(realize_columns(G), G).ok);
  }
  REQUIRE_THROWS_AS(realize_columns(load_framework("tree12.txt")), UnsupportedError);
}

TEST_CASE("realize_tree") {
  auto F = load_framework("tree12.txt");
  auto L = realize_tree(F);
  REQUIRE(verify_realization(L, F).ok);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto G = generate(GenClass::Tree, GenParams{0, 0, 12}, seed);
    REQUIRE(verify_realization(realize_tree(G), G).ok);
  }
  // a columns framework is in particular a tree framework
  auto C = load_framework("columns12.txt");
  REQUIRE(verify_realization(realize_tree(C), C).ok);
  REQUIRE_THROWS_AS(realize_tree(sandwich4()), UnsupportedError);
}

TEST_CASE("dispatcher picks the most specific method") {
  auto check = [](const RegionPartition& F, Method expect) {
    auto r = realize(F);
    REQUIRE(r.method == expect);
    REQUIRE(verify_realization(r.square, F).ok);
  };
  check(generate(GenClass::Uniform, GenParams{2, 3, 0}, 0), Method::Uniform);
  check(load_framework("mixed12_divides.txt"), Method::Mixed);
  check(load_framework("columns12.txt"), Method::Columns);
  check(load_framework("tree12.txt"), Method::Tree);
  check(sandwich4(), Method::Brute);
}

TEST_CASE("dispatcher respects explicit methods and the brute cap") {
  auto F = load_framework("tree12.txt");
  REQUIRE_THROWS_AS(realize(F, Method::Uniform), UnsupportedError);
  SearchBudget tiny;
  tiny.max_assignments = 1;
  REQUIRE_THROWS_AS(realize(F, Method::Brute, tiny), BudgetError);
}
