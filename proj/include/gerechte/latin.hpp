#pragma once

// Latin and row-latin squares with the shared text format: n lines of n
// space-separated symbols 1..n, trailing newline.

#include <sstream>
#include <string>
#include <vector>

#include "gerechte/framework.hpp"  // Error, ParseError, detail::parse_ints

namespace gerechte {

namespace detail {

inline std::vector<int> parse_square_grid(const std::string& text, int* out_n) {
  std::vector<int> line_numbers;
  auto lines = significant_lines(text, &line_numbers);
  if (lines.empty()) throw ParseError("empty square", 1);
  auto first = parse_ints(lines[0], line_numbers[0]);
  int n = static_cast<int>(first.size());
  if (static_cast<int>(lines.size()) != n)
    throw ParseError("expected " + std::to_string(n) + " lines of " +
                         std::to_string(n) + " symbols",
                     line_numbers[0]);
  std::vector<int> cells;
  cells.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    auto vals = parse_ints(lines[i], line_numbers[i]);
    if (static_cast<int>(vals.size()) != n)
      throw ParseError("ragged row", line_numbers[i]);
    for (long long v : vals) {
      if (v < 1 || v > n) throw ParseError("symbol out of range", line_numbers[i]);
      cells.push_back(static_cast<int>(v));
    }
  }
  *out_n = n;
  return cells;
}

inline std::string serialize_square_grid(int n, const std::vector<int>& cells) {
  std::ostringstream os;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) os << ' ';
      os << cells[i * n + j];
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace detail

struct LatinSquare {
  int n = 0;
  std::vector<int> cells;  // row-major, symbols 1..n

  LatinSquare() = default;
  LatinSquare(int n_, std::vector<int> cells_) : n(n_), cells(std::move(cells_)) {
    if (static_cast<int>(cells.size()) != n * n) throw Error("latin square size mismatch");
  }

  int at(int i, int j) const { return cells[i * n + j]; }
  int& at(int i, int j) { return cells[i * n + j]; }

  static LatinSquare parse(const std::string& text) {
    int n = 0;
    auto cells = detail::parse_square_grid(text, &n);
    return LatinSquare(n, std::move(cells));
  }

  std::string serialize() const { return detail::serialize_square_grid(n, cells); }

  bool operator==(const LatinSquare&) const = default;
};

struct RowLatinSquare {
  int n = 0;
  std::vector<int> cells;

  RowLatinSquare() = default;
  RowLatinSquare(int n_, std::vector<int> cells_) : n(n_), cells(std::move(cells_)) {
    if (static_cast<int>(cells.size()) != n * n)
      throw Error("row-latin square size mismatch");
  }

  int at(int i, int j) const { return cells[i * n + j]; }
  int& at(int i, int j) { return cells[i * n + j]; }

  std::string serialize() const { return detail::serialize_square_grid(n, cells); }
};

}  // namespace gerechte
