#pragma once

// Independent checkers for latin squares and gerechte realizations, a
// brute-force realization oracle, and the exhaustive small-order enumerator
// of rectangular frameworks. Shares no logic with the constructive code.

#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gerechte/framework.hpp"
#include "gerechte/latin.hpp"

namespace gerechte {

struct Violation {
  enum class Kind { Row, Column, Region, Shape } kind;
  int index = -1;   // 0-based row/column/region index
  int symbol = -1;  // 0-based symbol, -1 if not applicable
  std::string details;
};

struct VerificationReport {
  bool ok = true;
  std::vector<Violation> violations;

  void add(Violation v) {
    ok = false;
    violations.push_back(std::move(v));
  }
};

namespace detail {

inline void check_lines(const std::vector<int>& cells, int n, bool rows,
                        VerificationReport& rep) {
  for (int i = 0; i < n; ++i) {
    std::vector<int> count(n, 0);
    for (int j = 0; j < n; ++j) count[(rows ? cells[i * n + j] : cells[j * n + i]) - 1]++;
    for (int s = 0; s < n; ++s)
      if (count[s] != 1)
        rep.add(Violation{rows ? Violation::Kind::Row : Violation::Kind::Column, i, s,
                          std::string(rows ? "row " : "column ") + std::to_string(i + 1) +
                              " contains symbol " + std::to_string(s + 1) + " " +
                              std::to_string(count[s]) + " times"});
  }
}

}  // namespace detail

inline VerificationReport verify_latin(const LatinSquare& L) {
  VerificationReport rep;
  detail::check_lines(L.cells, L.n, true, rep);
  detail::check_lines(L.cells, L.n, false, rep);
  return rep;
}

inline VerificationReport verify_realization(const LatinSquare& L,
                                             const RegionPartition& F) {
  if (L.n != F.rows() || L.n != F.cols())
    throw Error("verify_realization: dimensions disagree");
  VerificationReport rep;
  if (!F.is_gerechte())
    rep.add(Violation{Violation::Kind::Shape, -1, -1, "framework is not gerechte"});
  detail::check_lines(L.cells, L.n, true, rep);
  detail::check_lines(L.cells, L.n, false, rep);
  for (int id = 1; id <= F.region_count(); ++id) {
    std::vector<int> count(L.n, 0);
    for (auto [r, c] : F.region_cells(id)) count[L.at(r, c) - 1]++;
    for (int s = 0; s < L.n; ++s)
      if (count[s] != 1)
        rep.add(Violation{Violation::Kind::Region, id - 1, s,
                          "region " + std::to_string(id) + " contains symbol " +
                              std::to_string(s + 1) + " " + std::to_string(count[s]) +
                              " times"});
  }
  return rep;
}

inline VerificationReport verify_row_realization(const RowLatinSquare& W,
                                                 const RegionPartition& F) {
  if (W.n != F.rows() || W.n != F.cols())
    throw Error("verify_row_realization: dimensions disagree");
  VerificationReport rep;
  detail::check_lines(W.cells, W.n, true, rep);
  for (int id = 1; id <= F.region_count(); ++id) {
    std::vector<int> count(W.n, 0);
    for (auto [r, c] : F.region_cells(id)) count[W.at(r, c) - 1]++;
    for (int s = 0; s < W.n; ++s)
      if (count[s] != 1)
        rep.add(Violation{Violation::Kind::Region, id - 1, s,
                          "region " + std::to_string(id) + " contains symbol " +
                              std::to_string(s + 1) + " " + std::to_string(count[s]) +
                              " times"});
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Brute-force oracle

struct SearchBudget {
  std::uint64_t max_assignments = 10'000'000;
  double max_seconds = 0.0;  // 0 = no wall-clock limit
  int max_order = 9;         // order cap for the realize() dispatcher fallback
};

struct BruteForceResult {
  enum class Status { Found, Unrealizable, BudgetExceeded } status;
  std::optional<LatinSquare> square;
  std::uint64_t assignments = 0;
};

// Complete backtracking over cells in most-constrained-first order, with
// row/column/region candidate bitmasks. Unrealizable only on exhaustion.
inline BruteForceResult brute_force_realize(const RegionPartition& F,
                                            const SearchBudget& budget = {}) {
  if (!F.is_gerechte()) throw Error("brute_force_realize: framework is not gerechte");
  int n = F.rows();
  if (n > 63) throw Error("brute_force_realize: order too large for bitmasks");

  std::vector<int> grid(static_cast<size_t>(n) * n, 0);
  std::vector<std::uint64_t> row_used(n, 0), col_used(n, 0), reg_used(n, 0);
  const std::uint64_t full = (n == 63) ? ~0ULL : ((1ULL << n) - 1);

  BruteForceResult res{BruteForceResult::Status::Unrealizable, std::nullopt, 0};
  auto start = std::chrono::steady_clock::now();
  bool out_of_budget = false;

  auto over_budget = [&]() {
    if (res.assignments >= budget.max_assignments) return true;
    if (budget.max_seconds > 0 && (res.assignments & 1023) == 0) {
      std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
      if (dt.count() > budget.max_seconds) return true;
    }
    return false;
  };

  std::function<bool()> solve = [&]() -> bool {
    int best = -1, best_count = n + 1;
    std::uint64_t best_avail = 0;
    for (int idx = 0; idx < n * n; ++idx) {
      if (grid[idx] != 0) continue;
      int i = idx / n, j = idx % n, reg = F.label(i, j) - 1;
      std::uint64_t avail = full & ~(row_used[i] | col_used[j] | reg_used[reg]);
      int cnt = std::popcount(avail);
      if (cnt == 0) return false;
      if (cnt < best_count) {
        best_count = cnt;
        best = idx;
        best_avail = avail;
        if (cnt == 1) break;
      }
    }
    if (best < 0) return true;  // complete
    int i = best / n, j = best % n, reg = F.label(i, j) - 1;
    std::uint64_t avail = best_avail;
    while (avail) {
      int s = std::countr_zero(avail);
      std::uint64_t bit = 1ULL << s;
      avail &= avail - 1;
      if (over_budget()) {
        out_of_budget = true;
        return false;
      }
      ++res.assignments;
      grid[best] = s + 1;
      row_used[i] |= bit;
      col_used[j] |= bit;
      reg_used[reg] |= bit;
      if (solve()) return true;
      grid[best] = 0;
      row_used[i] &= ~bit;
      col_used[j] &= ~bit;
      reg_used[reg] &= ~bit;
      if (out_of_budget) return false;
    }
    return false;
  };

  if (solve()) {
    res.status = BruteForceResult::Status::Found;
    res.square = LatinSquare(n, grid);
  } else if (out_of_budget) {
    res.status = BruteForceResult::Status::BudgetExceeded;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of rectangular gerechte frameworks of order n

// Emits every partition of the n x n grid into n axis-aligned rectangles of n
// cells each, exactly once, in lexicographic first-free-cell placement order.
// The callback may return false to stop early.
inline void enumerate_rect_frameworks(
    int n, const std::function<bool(const RegionPartition&)>& emit,
    bool allow_large = false) {
  if (n > 6 && !allow_large)
    throw Error("enumerate_rect_frameworks: order above the default cap of 6");
  std::vector<std::pair<int, int>> shapes;  // (height, width), h*w == n
  for (int h = 1; h <= n; ++h)
    if (n % h == 0) shapes.emplace_back(h, n / h);

  std::vector<int> labels(static_cast<size_t>(n) * n, 0);
  bool stopped = false;

  std::function<void(int)> place = [&](int placed) {
    if (stopped) return;
    int idx = 0;
    while (idx < n * n && labels[idx] != 0) ++idx;
    if (idx == n * n) {
      if (!emit(RegionPartition(n, n, labels))) stopped = true;
      return;
    }
    int i = idx / n, j = idx % n;
    for (auto [h, w] : shapes) {
      if (i + h > n || j + w > n) continue;
      bool free = true;
      for (int di = 0; di < h && free; ++di)
        for (int dj = 0; dj < w && free; ++dj)
          if (labels[(i + di) * n + j + dj] != 0) free = false;
      if (!free) continue;
      for (int di = 0; di < h; ++di)
        for (int dj = 0; dj < w; ++dj) labels[(i + di) * n + j + dj] = placed + 1;
      place(placed + 1);
      for (int di = 0; di < h; ++di)
        for (int dj = 0; dj < w; ++dj) labels[(i + di) * n + j + dj] = 0;
      if (stopped) return;
    }
  };
  place(0);
}

inline std::vector<RegionPartition> all_rect_frameworks(int n, bool allow_large = false) {
  std::vector<RegionPartition> out;
  enumerate_rect_frameworks(
      n,
      [&](const RegionPartition& F) {
        out.push_back(F);
        return true;
      },
      allow_large);
  return out;
}

}  // namespace gerechte
