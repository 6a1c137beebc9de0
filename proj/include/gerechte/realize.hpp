#pragma once

// The realization constructions: the uniform and t=cs special cases, the
// general s x t / t x s construction via a reduced fill, row-realizations,
// the columns and tree constructions, and a dispatching front end. Every
// returned square is re-verified against the framework before return.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "gerechte/framework.hpp"
#include "gerechte/outline.hpp"
#include "gerechte/verify.hpp"

namespace gerechte {

enum class Method { Auto, Uniform, Divides, Mixed, Columns, Tree, Brute };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::Uniform: return "uniform";
    case Method::Divides: return "divides";
    case Method::Mixed: return "mixed";
    case Method::Columns: return "columns";
    case Method::Tree: return "tree";
    case Method::Brute: return "brute";
  }
  return "?";
}

struct Realization {
  LatinSquare square;
  Method method = Method::Auto;
};

namespace detail {

inline LatinSquare checked(LatinSquare L, const RegionPartition& F, const char* what) {
  auto rep = verify_realization(L, F);
  if (!rep.ok)
    throw Error(std::string(what) + ": constructed square fails verification: " +
                rep.violations.front().details + "\nframework:\n" + F.serialize());
  return L;
}

}  // namespace detail

// Uniform case: all regions are s x t rectangles (one orientation). The
// layout is forced into bands of height s cut into width-t pieces, so the
// all-symbols outline with S=(s,...,s), T=(t,...,t), U=(1,...,1) realizes it.
inline LatinSquare realize_uniform(const RegionPartition& F) {
  ClassLabel cl = classify(F);
  if (!cl.uniform) throw UnsupportedError("realize_uniform: framework is not uniform");
  Rect r0 = F.bounding_box(1);
  int s = r0.height, t = r0.width, n = F.rows();
  OutlineLatinSquare M(Composition::uniform(t, s), Composition::uniform(s, t),
                       Composition::units(n));
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < s; ++j)
      for (int k = 0; k < n; ++k) M.count(i, j, k) = 1;
  return detail::checked(realize_outline(M), F, "realize_uniform");
}

// t = cs case: fill the (n/s) x (n/s) array cyclically with 1..c, blow each
// symbol up to s*s symbols, and realize the resulting outline. The square
// does not depend on the framework's layout, only on (s, c).
inline LatinSquare realize_divides_square(int s, int c) {
  int t = c * s, n = s * t, side = n / s;
  OutlineLatinSquare M(Composition::uniform(side, s), Composition::uniform(side, s),
                       Composition::units(n));
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) {
      int sym = (i + j) % c;  // symbol congruent to i + j - 1 mod c, 1-based
      for (int d = 0; d < s * s; ++d) M.count(i, j, sym * s * s + d) = 1;
    }
  return realize_outline(M);
}

inline LatinSquare realize_divides(const RegionPartition& F) {
  ClassLabel cl = classify(F);
  if (!cl.mixed || !cl.divides)
    throw UnsupportedError("realize_divides: regions are not s x t / t x s with t = c*s");
  return detail::checked(realize_divides_square(cl.s, cl.t / cl.s), F,
                         "realize_divides");
}

// ---------------------------------------------------------------------------
// General mixed case

// Intermediate reduced fill: an (n/k) x (n/k) array over symbols 1..s't'
// with each symbol k times per row and column and once per region of F/k.
struct ReducedFill {
  int side = 0;
  int symbols = 0;  // s' * t'
  std::vector<int> grid;
  RegionPartition reduced;

  int at(int i, int j) const { return grid[i * side + j]; }
};

namespace detail {

// Fill all regions of one orientation (height hh, width ww, ww-symbol rows).
// Horizontal classes get the base fill cyclically shifted by member offset;
// vertical classes then rotate matching slices to balance columns.
inline void fill_orientation(const RegionPartition& Fk, int hh, int ww,
                             std::vector<int>& grid, const std::vector<int>& ids) {
  int side = Fk.rows();
  std::map<int, std::vector<int>> by_top, by_left;
  for (int id : ids) {
    by_top[Fk.bounding_box(id).top].push_back(id);
    by_left[Fk.bounding_box(id).left].push_back(id);
  }

  for (auto& [top, members] : by_top) {
    if (static_cast<int>(members.size()) % hh != 0)
      throw Error("reduced fill: horizontal class size not a multiple of the height");
    std::sort(members.begin(), members.end(), [&](int a, int b) {
      return Fk.bounding_box(a).left < Fk.bounding_box(b).left;
    });
    for (size_t m = 0; m < members.size(); ++m) {
      Rect r = Fk.bounding_box(members[m]);
      for (int rr = 0; rr < hh; ++rr) {
        int block = static_cast<int>(((rr - static_cast<int>(m)) % hh + hh) % hh);
        for (int c = 0; c < ww; ++c)
          grid[(r.top + rr) * side + r.left + c] = block * ww + c + 1;
      }
    }
  }

  for (auto& [left, members] : by_left) {
    if (static_cast<int>(members.size()) % ww != 0)
      throw Error("reduced fill: vertical class size not a multiple of the width");
    std::sort(members.begin(), members.end(), [&](int a, int b) {
      return Fk.bounding_box(a).top < Fk.bounding_box(b).top;
    });
    for (size_t g0 = 0; g0 < members.size(); g0 += ww) {
      for (int j = 0; j < ww; ++j) {
        Rect r = Fk.bounding_box(members[g0 + j]);
        // Rotate each symbol-block slice left by the position in the group.
        for (int rr = 0; rr < hh; ++rr) {
          int* row = &grid[(r.top + rr) * side + r.left];
          int block = (row[0] - 1) / ww;
          for (int c = 0; c < ww; ++c) row[c] = block * ww + (c + j) % ww + 1;
        }
      }
    }
  }
}

}  // namespace detail

// Phases 1-4: canonical fill plus cyclic slice permutations on both
// orientations of F/k. The result satisfies the reduced-fill invariants; a
// failure there is an internal error, not a property of the input.
inline ReducedFill build_reduced_fill(const RegionPartition& F, int s, int t) {
  int k = std::gcd(s, t), sp = s / k, tp = t / k;
  RegionPartition Fk = reduce(F, k);
  int side = Fk.rows();
  std::vector<int> grid(static_cast<size_t>(side) * side, 0);

  std::vector<int> a_ids, b_ids;
  for (int id = 1; id <= Fk.region_count(); ++id) {
    Rect r = Fk.bounding_box(id);
    if (r.height == sp && r.width == tp)
      a_ids.push_back(id);
    else if (r.height == tp && r.width == sp)
      b_ids.push_back(id);
    else
      throw Error("reduced framework has a region of unexpected shape");
  }
  if (sp == tp) {  // s = t: one symbol, one orientation
    b_ids.clear();
    a_ids.clear();
    for (int id = 1; id <= Fk.region_count(); ++id) a_ids.push_back(id);
  }
  detail::fill_orientation(Fk, sp, tp, grid, a_ids);
  if (!b_ids.empty()) detail::fill_orientation(Fk, tp, sp, grid, b_ids);

  ReducedFill M{side, sp * tp, std::move(grid), Fk};
  // Invariants: each symbol k times per row and column, once per region.
  for (int i = 0; i < side; ++i) {
    std::vector<int> rc(M.symbols, 0), cc(M.symbols, 0);
    for (int j = 0; j < side; ++j) {
      rc[M.at(i, j) - 1]++;
      cc[M.at(j, i) - 1]++;
    }
    for (int sym = 0; sym < M.symbols; ++sym)
      if (rc[sym] != k || cc[sym] != k)
        throw Error("reduced fill invariant failed (row/column balance)");
  }
  for (int id = 1; id <= Fk.region_count(); ++id) {
    std::vector<int> cnt(M.symbols, 0);
    for (auto [r, c] : Fk.region_cells(id)) cnt[M.at(r, c) - 1]++;
    for (int sym = 0; sym < M.symbols; ++sym)
      if (cnt[sym] != 1) throw Error("reduced fill invariant failed (region balance)");
  }
  return M;
}

// General case: build the reduced fill on F/k, blow each symbol up to k*k
// symbols, and realize the outline with S = T = (k,...,k).
inline LatinSquare realize_mixed(const RegionPartition& F) {
  ClassLabel cl = classify(F);
  if (!cl.mixed) throw UnsupportedError("realize_mixed: regions are not s x t / t x s");
  int s = cl.s, t = cl.t, k = std::gcd(s, t), n = F.rows();
  ReducedFill M = build_reduced_fill(F, s, t);

  if (k == 1)
    return detail::checked(LatinSquare(n, M.grid), F, "realize_mixed");

  OutlineLatinSquare O(Composition::uniform(M.side, k), Composition::uniform(M.side, k),
                       Composition::units(n));
  for (int i = 0; i < M.side; ++i)
    for (int j = 0; j < M.side; ++j) {
      int base = (M.at(i, j) - 1) * k * k;
      for (int d = 0; d < k * k; ++d) O.count(i, j, base + d) = 1;
    }
  return detail::checked(realize_outline(O), F, "realize_mixed");
}

// ---------------------------------------------------------------------------
// Row-realizations and the columns / tree constructions

// Every gerechte framework (rectangular or not) has a row-realization: colour
// the n-regular rows x regions multigraph with n colours and drop symbol i
// into the leftmost unfilled cell of each colour-i incidence.
inline RowLatinSquare row_realization(const RegionPartition& F) {
  if (!F.is_gerechte()) throw Error("row_realization: framework is not gerechte");
  int n = F.rows();
  BipartiteMultigraph g;
  g.left = n;   // rows
  g.right = n;  // regions
  for (int i = 0; i < n; ++i) {
    std::vector<int> cnt(n, 0);
    for (int j = 0; j < n; ++j) cnt[F.label(i, j) - 1]++;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < cnt[r]; ++c) g.add_edge(i, r);
  }
  EdgeColouring col = proper_edge_colouring(g);

  RowLatinSquare W(n, std::vector<int>(static_cast<size_t>(n) * n, 0));
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [row, reg] = g.edges[e];
    for (int j = 0; j < n; ++j)
      if (F.label(row, j) == reg + 1 && W.at(row, j) == 0) {
        W.at(row, j) = col.colour[e] + 1;
        break;
      }
  }
  auto rep = verify_row_realization(W, F);
  if (!rep.ok) throw Error("row_realization: internal check failed");
  return W;
}

namespace detail {

// Maximal column intervals not cut by any region boundary; for a columns- or
// tree-arranged framework these are exactly the widths of the refined
// framework's regions.
inline std::vector<int> column_strips(const RegionPartition& F) {
  std::set<int> cuts{0, F.cols()};
  for (int id = 1; id <= F.region_count(); ++id) {
    Rect r = F.bounding_box(id);
    cuts.insert(r.left);
    cuts.insert(r.right());
  }
  std::vector<int> widths;
  int prev = -1;
  for (int x : cuts) {
    if (prev >= 0) widths.push_back(x - prev);
    prev = x;
  }
  return widths;
}

// Amalgamate the columns of W by the given strip widths and realize the
// resulting outline (S = U = (1,...,1)).
inline LatinSquare realize_by_column_amalgamation(const RowLatinSquare& W,
                                                  const std::vector<int>& widths) {
  int n = W.n;
  OutlineLatinSquare O(Composition::units(n), Composition(widths),
                       Composition::units(n));
  int left = 0;
  for (size_t j = 0; j < widths.size(); ++j) {
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < widths[j]; ++c) O.count(i, static_cast<int>(j), W.at(i, left + c) - 1)++;
    left += widths[j];
  }
  return realize_outline(O);
}

}  // namespace detail

inline LatinSquare realize_columns(const RegionPartition& F) {
  ClassLabel cl = classify(F);
  if (!cl.columns) throw UnsupportedError("realize_columns: regions are not arranged in columns");
  RowLatinSquare W = row_realization(F);
  return detail::checked(
      detail::realize_by_column_amalgamation(W, detail::column_strips(F)), F,
      "realize_columns");
}

inline LatinSquare realize_tree(const RegionPartition& F) {
  ClassLabel cl = classify(F);
  if (!cl.tree) throw UnsupportedError("realize_tree: regions are not arranged in a tree structure");
  int n = F.rows();
  RowLatinSquare W = row_realization(F);

  // Representatives of vertical-alignment classes: the bottom-most member of
  // each class, ordered by begin row (regions above come first).
  std::map<std::pair<int, int>, Rect> reps;  // (left, width) -> lowest member
  for (int id = 1; id <= F.region_count(); ++id) {
    Rect r = F.bounding_box(id);
    auto key = std::make_pair(r.left, r.width);
    auto it = reps.find(key);
    if (it == reps.end() || r.top > it->second.top) reps[key] = r;
  }
  std::vector<Rect> order;
  for (auto& [key, r] : reps) order.push_back(r);
  std::sort(order.begin(), order.end(), [](const Rect& a, const Rect& b) {
    return a.top != b.top ? a.top < b.top : a.left < b.left;
  });

  for (const Rect& R : order) {
    int srows = R.bottom(), tw = R.width;

    // Chunks of the top set: column ranges of the regions directly below it.
    std::set<int> xs{R.left, R.right()};
    for (int id = 1; id <= F.region_count(); ++id) {
      Rect q = F.bounding_box(id);
      if (q.top == R.bottom() && q.left >= R.left && q.right() <= R.right()) {
        xs.insert(q.left);
        xs.insert(q.right());
      }
    }
    int d = 0, prev = -1;
    for (int x : xs) {
      if (prev >= 0) d = std::gcd(d, x - prev);
      prev = x;
    }
    int q = tw / d;
    if (q == 1) continue;
    if ((srows * tw) % n != 0)
      throw Error("realize_tree: top set size is not a multiple of n");
    int r_deg = srows * tw / n;

    // Rows-of-top-set x symbols graph; equitable q-colouring sends each
    // symbol occurrence to a width-d chunk.
    BipartiteMultigraph g;
    g.left = srows;
    g.right = n;
    for (int i = 0; i < srows; ++i)
      for (int c = R.left; c < R.right(); ++c) g.add_edge(i, W.at(i, c) - 1);
    auto deg = g.degrees();
    for (int sym = 0; sym < n; ++sym)
      if (deg[srows + sym] != r_deg)
        throw Error(
            "realize_tree: top set is not symbol-balanced; framework:\n" +
            F.serialize());
    EdgeColouring col = equitable_edge_colouring(g, q);

    std::vector<std::vector<std::vector<int>>> chunk_syms(
        srows, std::vector<std::vector<int>>(q));
    for (int e = 0; e < g.edge_count(); ++e)
      chunk_syms[g.edges[e].first][col.colour[e]].push_back(g.edges[e].second + 1);
    for (int i = 0; i < srows; ++i)
      for (int h = 0; h < q; ++h) {
        if (static_cast<int>(chunk_syms[i][h].size()) != d)
          throw Error("realize_tree: chunk does not receive d symbols");
        for (int c = 0; c < d; ++c)
          W.at(i, R.left + h * d + c) = chunk_syms[i][h][c];
      }

    auto rep = verify_row_realization(W, F);
    if (!rep.ok)
      throw Error("realize_tree: rearrangement left the row-realization invalid; "
                  "framework:\n" +
                  F.serialize());
  }

  return detail::checked(
      detail::realize_by_column_amalgamation(W, detail::column_strips(F)), F,
      "realize_tree");
}

// ---------------------------------------------------------------------------
// Dispatcher

inline Realization realize(const RegionPartition& F, Method method = Method::Auto,
                           const SearchBudget& budget = {}) {
  if (!F.is_gerechte()) throw Error("realize: framework is not gerechte");
  switch (method) {
    case Method::Uniform: return {realize_uniform(F), Method::Uniform};
    case Method::Divides: return {realize_divides(F), Method::Divides};
    case Method::Mixed: return {realize_mixed(F), Method::Mixed};
    case Method::Columns: return {realize_columns(F), Method::Columns};
    case Method::Tree: return {realize_tree(F), Method::Tree};
    case Method::Brute: {
      auto res = brute_force_realize(F, budget);
      if (res.status == BruteForceResult::Status::BudgetExceeded)
        throw BudgetError("realize: brute-force budget exceeded");
      if (res.status == BruteForceResult::Status::Unrealizable)
        throw Error("realize: framework is unrealizable");
      return {detail::checked(*res.square, F, "brute force"), Method::Brute};
    }
    case Method::Auto: {
      ClassLabel cl = F.is_rectangular() ? classify(F) : ClassLabel{};
      std::string failures;
      auto attempt = [&](Method m, auto&& fn) -> std::optional<Realization> {
        try {
          return Realization{fn(F), m};
        } catch (const Error& e) {
          failures += std::string("\n  ") + to_string(m) + ": " + e.what();
          return std::nullopt;
        }
      };
      if (cl.uniform)
        if (auto r = attempt(Method::Uniform, realize_uniform)) return *r;
      if (cl.mixed)
        if (auto r = attempt(Method::Mixed, realize_mixed)) return *r;
      if (cl.columns)
        if (auto r = attempt(Method::Columns, realize_columns)) return *r;
      if (cl.tree)
        if (auto r = attempt(Method::Tree, realize_tree)) return *r;
      if (F.rows() > budget.max_order)
        throw UnsupportedError("realize: no constructive method applies and order " +
                    std::to_string(F.rows()) + " exceeds the brute-force cap of " +
                    std::to_string(budget.max_order) + failures);
      return realize(F, Method::Brute, budget);
    }
  }
  throw Error("realize: unknown method");
}

}  // namespace gerechte
