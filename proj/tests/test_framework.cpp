#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "gerechte/gerechte.hpp"
#include "test_util.hpp"

using namespace gerechte;

TEST_CASE("grid format round-trips through parse and serialize") {
  auto F = load_framework("mixed12_divides.txt");
  REQUIRE(F.rows() == 12);
  REQUIRE(F.region_count() == 12);
  REQUIRE(F.is_gerechte());
  REQUIRE(F.is_rectangular());
  auto G = RegionPartition::parse(F.serialize());
  REQUIRE(F == G);
}

TEST_CASE("labels are canonicalized by first occurrence") {
  RegionPartition a(2, 2, {7, 7, 3, 3});
  RegionPartition b(2, 2, {1, 1, 2, 2});
  REQUIRE(a == b);
  REQUIRE(a.label(0, 0) == 1);
  REQUIRE(a.label(1, 1) == 2);
}

TEST_CASE("rect list format parses to the same partition") {
  std::string text =
      "rects 4\n"
      "# top left height width, 1-based\n"
      "1 1 1 4\n"
      "2 1 2 2\n"
      "2 3 2 2\n"
      "4 1 1 4\n";
  auto F = RegionPartition::parse(text);
  REQUIRE(F == sandwich4());
}

TEST_CASE("parse errors carry line information") {
  using Catch::Matchers::ContainsSubstring;
  // ragged grid row
  REQUIRE_THROWS_AS(RegionPartition::parse("2\n1 1\n2\n"), ParseError);
  // non-integer token
  REQUIRE_THROWS_MATCHES(RegionPartition::parse("2\n1 x\n2 2\n"), ParseError,
                         Catch::Matchers::MessageMatches(ContainsSubstring("'x'")));
  // wrong number of lines
  REQUIRE_THROWS_AS(RegionPartition::parse("3\n1 1 1\n2 2 2\n"), ParseError);
  // a skipped label
  REQUIRE_THROWS_MATCHES(
      RegionPartition::parse("2\n1 1\n3 3\n"), ParseError,
      Catch::Matchers::MessageMatches(ContainsSubstring("label 2 never occurs")));
  // overlapping rects
  REQUIRE_THROWS_AS(RegionPartition::parse("rects 2\n1 1 2 2\n2 2 2 2\n"), ParseError);
  // uncovered cell
  REQUIRE_THROWS_AS(RegionPartition::parse("rects 1\n1 1 1 2\n"), ParseError);
  // comments and blank lines are fine
  REQUIRE_NOTHROW(RegionPartition::parse("# c\n\n1\n# c\n1\n"));
}

TEST_CASE("classification of the handcrafted frameworks") {
  SECTION("uniform banded") {
    auto F = generate(GenClass::Uniform, GenParams{2, 3, 0}, 0);
    auto cl = classify(F);
    REQUIRE(cl.primary == FrameworkClass::Uniform);
    REQUIRE(cl.uniform);
    REQUIRE(cl.mixed);
    REQUIRE(cl.columns);
    REQUIRE(cl.tree);
    REQUIRE(cl.s == 2);
    REQUIRE(cl.t == 3);
  }
  SECTION("mixed with t = 3s") {
    auto cl = classify(load_framework("mixed12_divides.txt"));
    REQUIRE(cl.primary == FrameworkClass::Mixed);
    REQUIRE_FALSE(cl.uniform);
    REQUIRE(cl.mixed);
    REQUIRE(cl.divides);
    REQUIRE(cl.s == 2);
    REQUIRE(cl.t == 6);
  }
  SECTION("columns") {
    auto cl = classify(load_framework("columns12.txt"));
    REQUIRE(cl.primary == FrameworkClass::Columns);
    REQUIRE_FALSE(cl.mixed);
    REQUIRE(cl.columns);
    REQUIRE(cl.tree);
  }
  SECTION("tree but not columns") {
    auto cl = classify(load_framework("tree12.txt"));
    REQUIRE(cl.primary == FrameworkClass::Tree);
    REQUIRE_FALSE(cl.columns);
    REQUIRE(cl.tree);
  }
  SECTION("rectangular but unsupported") {
    auto cl = classify(sandwich4());
    REQUIRE(cl.primary == FrameworkClass::UnsupportedRectangular);
    REQUIRE_FALSE(cl.mixed);
    REQUIRE_FALSE(cl.columns);
    REQUIRE_FALSE(cl.tree);
  }
  SECTION("non-rectangular") {
    auto cl = classify(diagonal2());
    REQUIRE(cl.primary == FrameworkClass::NonRectangular);
  }
}

TEST_CASE("reduce collapses k x k blocks") {
  auto F = load_framework("mixed12_divides.txt");
  auto R = reduce(F, 2);
  REQUIRE(R == load_framework("mixed12_divides_reduced.txt"));
  REQUIRE(reduce(F, 1) == F);
  REQUIRE_THROWS_AS(reduce(F, 5), Error);
  // 2x6 regions cannot be collapsed by k = 4
  REQUIRE_THROWS_AS(reduce(F, 4), Error);
}

TEST_CASE("refine extends vertical boundaries to the top") {
  SECTION("a columns framework is already refined") {
    auto F = load_framework("columns12.txt");
    REQUIRE(refine(F) == F);
  }
  SECTION("tree framework splits into full-height strips") {
    auto F = load_framework("tree12.txt");
    auto R = refine(F);
    REQUIRE(R.rows() == 12);
    REQUIRE(R.is_rectangular());
    // refined regions are arranged in columns: overlapping ones align exactly
    for (int a = 1; a <= R.region_count(); ++a)
      for (int b = a + 1; b <= R.region_count(); ++b) {
        Rect ra = R.bounding_box(a), rb = R.bounding_box(b);
        if (ra.left < rb.right() && rb.left < ra.right()) {
          REQUIRE(ra.left == rb.left);
          REQUIRE(ra.width == rb.width);
        }
      }
    // every refined region sits inside one original region
    for (int id = 1; id <= R.region_count(); ++id) {
      auto cells = R.region_cells(id);
      int lab = F.label(cells[0].first, cells[0].second);
      for (auto [r, c] : cells) REQUIRE(F.label(r, c) == lab);
    }
  }
  SECTION("requires a tree framework") {
    REQUIRE_THROWS_AS(refine(sandwich4()), Error);
  }
}

TEST_CASE("begin counts satisfy the divisibility conclusions") {
  SECTION("order 12, s=2 t=6") {
    auto bc = begin_counts(load_framework("mixed12_divides.txt"), 2, 6);
    REQUIRE(bc.k == 2);
    REQUIRE(bc.s_prime == 1);
    REQUIRE(bc.t_prime == 3);
    int total = 0;
    for (int i = 0; i < 12; ++i) total += bc.n_row[i] + bc.m_row[i];
    REQUIRE(total == 12);
  }
  SECTION("exhaustive order 6, s=2 t=3") {
    int checked = 0;
    enumerate_rect_frameworks(6, [&](const RegionPartition& F) {
      auto cl = classify(F);
      if (!cl.mixed || cl.s != 2 || cl.t != 3) return true;
      auto bc = begin_counts(F, 2, 3);  // throws on any divisibility failure
      // independent recount straight from the bounding boxes
      for (int i = 0; i < 6; ++i) {
        int n_i = 0, m_i = 0;
        for (int id = 1; id <= 6; ++id) {
          Rect r = F.bounding_box(id);
          if (r.top != i) continue;
          (r.height == 2 ? n_i : m_i)++;
        }
        REQUIRE(bc.n_row[i] == n_i);
        REQUIRE(bc.m_row[i] == m_i);
        REQUIRE(n_i % 2 == 0);
        REQUIRE(m_i % 3 == 0);
      }
      ++checked;
      return true;
    });
    REQUIRE(checked > 0);
  }
  SECTION("rejects regions of other shapes") {
    REQUIRE_THROWS_AS(begin_counts(sandwich4(), 2, 2), Error);
  }
}

TEST_CASE("alignment classes") {
  auto F = load_framework("tree12.txt");
  auto classes = alignment_classes(F);
  int vertical = 0, vmembers = 0, horizontal = 0;
  for (const auto& c : classes) {
    if (c.horizontal) {
      ++horizontal;
    } else {
      ++vertical;
      vmembers += static_cast<int>(c.members.size());
      // all members share begin column and width
      for (int id : c.members) {
        REQUIRE(F.bounding_box(id).left == c.begin);
        REQUIRE(F.bounding_box(id).width == c.extent);
      }
    }
  }
  REQUIRE(vertical == 7);
  REQUIRE(vmembers == 12);
  REQUIRE(horizontal >= 1);
}

TEST_CASE("generators are deterministic and produce their class") {
  auto a = generate(GenClass::Mixed, GenParams{3, 4, 0}, 17);
  auto b = generate(GenClass::Mixed, GenParams{3, 4, 0}, 17);
  REQUIRE(a.serialize() == b.serialize());

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto u = generate(GenClass::Uniform, GenParams{2, 4, 0}, seed);
    REQUIRE(classify(u).uniform);
    auto m = generate(GenClass::Mixed, GenParams{2, 3, 0}, seed);
    REQUIRE(classify(m).mixed);
    REQUIRE(m.is_gerechte());
    auto c = generate(GenClass::Columns, GenParams{0, 0, 12}, seed);
    REQUIRE(classify(c).columns);
    auto t = generate(GenClass::Tree, GenParams{0, 0, 12}, seed);
    REQUIRE(classify(t).tree);
  }
}
