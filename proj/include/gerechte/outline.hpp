#pragma once

// Outline latin squares: the amalgamation map, validation of the three
// counting conditions, row splitting via equitable colourings, and the full
// constructive inverse (every outline square is an amalgamated latin square).

#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gerechte/graph.hpp"
#include "gerechte/latin.hpp"

namespace gerechte {

struct Composition {
  std::vector<int> parts;

  Composition() = default;
  explicit Composition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
      if (x < 1) throw Error("composition parts must be positive");
  }

  static Composition units(int n) { return Composition(std::vector<int>(n, 1)); }
  static Composition uniform(int count, int part) {
    return Composition(std::vector<int>(count, part));
  }

  int total() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int size() const { return static_cast<int>(parts.size()); }
  bool is_units() const {
    for (int x : parts)
      if (x != 1) return false;
    return true;
  }

  // First original index covered by block b (0-based).
  int offset(int b) const {
    return std::accumulate(parts.begin(), parts.begin() + b, 0);
  }

  // block_of[i] = block containing original index i.
  std::vector<int> block_of() const {
    std::vector<int> out;
    for (int b = 0; b < size(); ++b) out.insert(out.end(), parts[b], b);
    return out;
  }

  bool operator==(const Composition&) const = default;
};

// An s x t array of symbol multisets over 1..u, stored as count vectors.
class OutlineLatinSquare {
 public:
  OutlineLatinSquare(Composition S, Composition T, Composition U)
      : S_(std::move(S)), T_(std::move(T)), U_(std::move(U)) {
    int n = S_.total();
    if (T_.total() != n || U_.total() != n)
      throw Error("outline compositions must sum to the same n");
    cells_.assign(static_cast<size_t>(S_.size()) * T_.size(),
                  std::vector<int>(U_.size(), 0));
  }

  const Composition& S() const { return S_; }
  const Composition& T() const { return T_; }
  const Composition& U() const { return U_; }
  int n() const { return S_.total(); }
  int block_rows() const { return S_.size(); }
  int block_cols() const { return T_.size(); }
  int symbols() const { return U_.size(); }

  // Count of symbol k (0-based) in cell (i,j).
  int count(int i, int j, int k) const { return cells_[i * T_.size() + j][k]; }
  int& count(int i, int j, int k) { return cells_[i * T_.size() + j][k]; }
  const std::vector<int>& cell(int i, int j) const { return cells_[i * T_.size() + j]; }

  int cell_total(int i, int j) const {
    const auto& c = cell(i, j);
    return std::accumulate(c.begin(), c.end(), 0);
  }

  bool operator==(const OutlineLatinSquare&) const = default;

  // Debug serialization: one line per cell, counts space-separated.
  std::string debug_string() const {
    std::ostringstream os;
    os << "S=";
    for (int p : S_.parts) os << p << ' ';
    os << "T=";
    for (int p : T_.parts) os << p << ' ';
    os << "U=";
    for (int p : U_.parts) os << p << ' ';
    os << "\n";
    for (int i = 0; i < block_rows(); ++i)
      for (int j = 0; j < block_cols(); ++j) {
        os << "(" << i + 1 << "," << j + 1 << "):";
        for (int k = 0; k < symbols(); ++k) os << ' ' << count(i, j, k);
        os << "\n";
      }
    return os.str();
  }

 private:
  Composition S_, T_, U_;
  std::vector<std::vector<int>> cells_;
};

inline OutlineLatinSquare amalgamate(const LatinSquare& L, const Composition& S,
                                     const Composition& T, const Composition& U) {
  if (S.total() != L.n || T.total() != L.n || U.total() != L.n)
    throw Error("amalgamate: compositions must sum to the square's order");
  OutlineLatinSquare out(S, T, U);
  auto rb = S.block_of(), cb = T.block_of(), sb = U.block_of();
  for (int i = 0; i < L.n; ++i)
    for (int j = 0; j < L.n; ++j)
      out.count(rb[i], cb[j], sb[L.at(i, j) - 1])++;
  return out;
}

struct OutlineViolation {
  int condition = 0;  // 1, 2 or 3
  int row = -1, col = -1, symbol = -1;  // 0-based; -1 where not applicable
  int expected = 0, actual = 0;

  std::string to_string() const {
    std::ostringstream os;
    os << "condition (" << condition << ") violated";
    if (row >= 0) os << " at row " << row + 1;
    if (col >= 0) os << (row >= 0 ? ", column " : " at column ") << col + 1;
    if (symbol >= 0) os << " for symbol " << symbol + 1;
    os << ": expected " << expected << ", got " << actual;
    return os.str();
  }
};

inline std::optional<OutlineViolation> validate_outline(const OutlineLatinSquare& M) {
  const auto& S = M.S().parts;
  const auto& T = M.T().parts;
  const auto& U = M.U().parts;
  for (int i = 0; i < M.block_rows(); ++i)
    for (int k = 0; k < M.symbols(); ++k) {
      int c = 0;
      for (int j = 0; j < M.block_cols(); ++j) c += M.count(i, j, k);
      if (c != S[i] * U[k]) return OutlineViolation{1, i, -1, k, S[i] * U[k], c};
    }
  for (int j = 0; j < M.block_cols(); ++j)
    for (int k = 0; k < M.symbols(); ++k) {
      int c = 0;
      for (int i = 0; i < M.block_rows(); ++i) c += M.count(i, j, k);
      if (c != T[j] * U[k]) return OutlineViolation{2, -1, j, k, T[j] * U[k], c};
    }
  for (int i = 0; i < M.block_rows(); ++i)
    for (int j = 0; j < M.block_cols(); ++j)
      if (M.cell_total(i, j) != S[i] * T[j])
        return OutlineViolation{3, i, j, -1, S[i] * T[j], M.cell_total(i, j)};
  return std::nullopt;
}

inline OutlineLatinSquare transpose(const OutlineLatinSquare& M) {
  OutlineLatinSquare out(M.T(), M.S(), M.U());
  for (int i = 0; i < M.block_rows(); ++i)
    for (int j = 0; j < M.block_cols(); ++j)
      for (int k = 0; k < M.symbols(); ++k) out.count(j, i, k) = M.count(i, j, k);
  return out;
}

// Split row block i (0-based) with part p >= 2 into p unit rows. The new rows
// come from an equitable p-colouring of the columns x symbols multigraph of
// the block, and are emitted in colour order.
inline OutlineLatinSquare split_row(const OutlineLatinSquare& M, int i) {
  int p = M.S().parts.at(i);
  if (p < 2) throw Error("split_row: row block already has part 1");

  BipartiteMultigraph g;
  g.left = M.block_cols();
  g.right = M.symbols();
  for (int j = 0; j < M.block_cols(); ++j)
    for (int k = 0; k < M.symbols(); ++k)
      for (int c = 0; c < M.count(i, j, k); ++c) g.add_edge(j, k);
  EdgeColouring col = equitable_edge_colouring(g, p);

  std::vector<int> parts;
  for (int b = 0; b < M.S().size(); ++b) {
    if (b == i)
      parts.insert(parts.end(), p, 1);
    else
      parts.push_back(M.S().parts[b]);
  }
  OutlineLatinSquare out(Composition(std::move(parts)), M.T(), M.U());
  for (int b = 0; b < M.S().size(); ++b) {
    if (b == i) continue;
    int nb = b < i ? b : b + p - 1;
    for (int j = 0; j < M.block_cols(); ++j)
      for (int k = 0; k < M.symbols(); ++k) out.count(nb, j, k) = M.count(b, j, k);
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [j, k] = g.edges[e];
    out.count(i + col.colour[e], j, k)++;
  }
  return out;
}

namespace detail {

inline OutlineLatinSquare split_all_rows(OutlineLatinSquare M) {
  int i = 0;
  while (i < M.S().size()) {
    int p = M.S().parts[i];
    if (p == 1) {
      ++i;
    } else {
      M = split_row(M, i);
      i += p;
    }
  }
  return M;
}

}  // namespace detail

// Hilton's construction: split all rows top to bottom, then all columns left
// to right, then all symbols in increasing index, each via an equitable
// colouring. Returns L with amalgamate(L, M.S(), M.T(), M.U()) == M.
inline LatinSquare realize_outline(const OutlineLatinSquare& M) {
  if (auto v = validate_outline(M))
    throw Error("realize_outline: invalid outline: " + v->to_string());
  int n = M.n();

  OutlineLatinSquare cur = detail::split_all_rows(M);
  cur = transpose(detail::split_all_rows(transpose(cur)));

  // Rows and columns are now units; each cell holds exactly one symbol
  // instance. Split symbol k into r_k new symbols via an equitable
  // r_k-colouring of its occurrence graph on rows x columns.
  LatinSquare L(n, std::vector<int>(static_cast<size_t>(n) * n, 0));
  int base = 0;
  for (int k = 0; k < cur.symbols(); ++k) {
    int r = cur.U().parts[k];
    BipartiteMultigraph g;
    g.left = n;
    g.right = n;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int c = 0; c < cur.count(i, j, k); ++c) g.add_edge(i, j);
    EdgeColouring col = equitable_edge_colouring(g, r);
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [i, j] = g.edges[e];
      L.at(i, j) = base + col.colour[e] + 1;
    }
    base += r;
  }
  return L;
}

}  // namespace gerechte
