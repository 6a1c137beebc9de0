#pragma once

// Gerechte frameworks: labelled partitions of an n x n grid into regions,
// with parsing, validation, classification, reduction and refinement.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gerechte {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A requested operation does not apply to the given input (wrong framework
// class, order above a hard cap, ...).
struct UnsupportedError : Error {
  using Error::Error;
};

// A search ran out of its node or wall-clock budget.
struct BudgetError : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line = 0;    // 1-based
  int column = 0;  // 1-based, 0 if not applicable
  ParseError(const std::string& msg, int line_, int column_ = 0)
      : Error("parse error at line " + std::to_string(line_) +
              (column_ > 0 ? ", column " + std::to_string(column_) : "") + ": " + msg),
        line(line_),
        column(column_) {}
};

// Axis-aligned rectangle, 0-based cell coordinates.
struct Rect {
  int top = 0;
  int left = 0;
  int height = 0;
  int width = 0;

  int bottom() const { return top + height; }  // exclusive
  int right() const { return left + width; }   // exclusive
  int area() const { return height * width; }

  bool operator==(const Rect&) const = default;
};

// A labelled partition of a rows x cols grid into regions 1..R.
// Region IDs are canonicalized by first occurrence in a row-major scan.
class RegionPartition {
 public:
  RegionPartition(int rows, int cols, std::vector<int> labels)
      : rows_(rows), cols_(cols), labels_(std::move(labels)) {
    if (rows_ <= 0 || cols_ <= 0) throw Error("grid dimensions must be positive");
    if (static_cast<int>(labels_.size()) != rows_ * cols_)
      throw Error("label grid has wrong size");
    canonicalize();
    index_regions();
  }

  static RegionPartition parse(const std::string& text);
  static RegionPartition from_rects(const std::vector<Rect>& rects);

  std::string serialize() const {
    std::ostringstream os;
    os << rows_ << "\n";
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) {
        if (j) os << ' ';
        os << label(i, j);
      }
      os << "\n";
    }
    return os.str();
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int region_count() const { return regions_; }
  int label(int r, int c) const { return labels_[r * cols_ + c]; }

  // Cells of region id (1-based), in row-major order.
  const std::vector<std::pair<int, int>>& region_cells(int id) const {
    return cells_[id - 1];
  }

  int region_size(int id) const { return static_cast<int>(cells_[id - 1].size()); }

  // Bounding box of region id.
  Rect bounding_box(int id) const { return boxes_[id - 1]; }

  bool region_is_rect(int id) const {
    return boxes_[id - 1].area() == region_size(id);
  }

  bool is_rectangular() const {
    for (int id = 1; id <= regions_; ++id)
      if (!region_is_rect(id)) return false;
    return true;
  }

  bool is_gerechte() const {
    if (rows_ != cols_ || regions_ != rows_) return false;
    for (int id = 1; id <= regions_; ++id)
      if (region_size(id) != rows_) return false;
    return true;
  }

  RegionPartition transposed() const {
    std::vector<int> t(labels_.size());
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t[j * rows_ + i] = label(i, j);
    return RegionPartition(cols_, rows_, std::move(t));
  }

  bool operator==(const RegionPartition& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && labels_ == o.labels_;
  }

 private:
  void canonicalize() {
    std::map<int, int> remap;
    for (int& l : labels_) {
      auto [it, inserted] = remap.emplace(l, static_cast<int>(remap.size()) + 1);
      l = it->second;
    }
    regions_ = static_cast<int>(remap.size());
  }

  void index_regions() {
    cells_.assign(regions_, {});
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) cells_[label(i, j) - 1].emplace_back(i, j);
    boxes_.clear();
    boxes_.reserve(regions_);
    for (const auto& cs : cells_) {
      int rlo = rows_, rhi = -1, clo = cols_, chi = -1;
      for (auto [r, c] : cs) {
        rlo = std::min(rlo, r);
        rhi = std::max(rhi, r);
        clo = std::min(clo, c);
        chi = std::max(chi, c);
      }
      boxes_.push_back(Rect{rlo, clo, rhi - rlo + 1, chi - clo + 1});
    }
  }

  int rows_, cols_, regions_ = 0;
  std::vector<int> labels_;
  std::vector<std::vector<std::pair<int, int>>> cells_;
  std::vector<Rect> boxes_;
};

namespace detail {

inline std::vector<std::string> significant_lines(const std::string& text,
                                                  std::vector<int>* line_numbers) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string line;
  int ln = 0;
  while (std::getline(is, line)) {
    ++ln;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    out.push_back(line);
    if (line_numbers) line_numbers->push_back(ln);
  }
  return out;
}

inline std::vector<long long> parse_ints(const std::string& line, int line_number) {
  std::vector<long long> vals;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) {
    try {
      size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      vals.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("expected an integer, got '" + tok + "'", line_number);
    }
  }
  return vals;
}

}  // namespace detail

inline RegionPartition RegionPartition::from_rects(const std::vector<Rect>& rects) {
  int side = 0;
  for (const auto& r : rects) {
    if (r.top < 0 || r.left < 0 || r.height <= 0 || r.width <= 0)
      throw Error("rect out of range");
    side = std::max({side, r.bottom(), r.right()});
  }
  if (rects.empty()) throw Error("empty rect list");
  std::vector<int> labels(static_cast<size_t>(side) * side, 0);
  for (size_t id = 0; id < rects.size(); ++id) {
    const auto& r = rects[id];
    for (int i = r.top; i < r.bottom(); ++i)
      for (int j = r.left; j < r.right(); ++j) {
        int& cell = labels[i * side + j];
        if (cell != 0)
          throw Error("rects " + std::to_string(cell) + " and " +
                      std::to_string(id + 1) + " overlap at cell (" +
                      std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        cell = static_cast<int>(id) + 1;
      }
  }
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j)
      if (labels[i * side + j] == 0)
        throw Error("rect list leaves cell (" + std::to_string(i + 1) + "," +
                    std::to_string(j + 1) + ") uncovered");
  return RegionPartition(side, side, std::move(labels));
}

inline RegionPartition RegionPartition::parse(const std::string& text) {
  std::vector<int> line_numbers;
  auto lines = detail::significant_lines(text, &line_numbers);
  if (lines.empty()) throw ParseError("empty input", 1);

  std::istringstream head(lines[0]);
  std::string first_tok;
  head >> first_tok;

  if (first_tok == "rects") {
    long long count = 0;
    if (!(head >> count) || count <= 0)
      throw ParseError("expected 'rects <count>'", line_numbers[0]);
    if (static_cast<long long>(lines.size()) - 1 != count)
      throw ParseError("expected " + std::to_string(count) + " rect lines, got " +
                           std::to_string(lines.size() - 1),
                       line_numbers[0]);
    std::vector<Rect> rects;
    for (long long i = 1; i <= count; ++i) {
      auto vals = detail::parse_ints(lines[i], line_numbers[i]);
      if (vals.size() != 4)
        throw ParseError("expected 'top left height width'", line_numbers[i]);
      if (vals[0] < 1 || vals[1] < 1 || vals[2] < 1 || vals[3] < 1)
        throw ParseError("rect fields must be positive (1-based)", line_numbers[i]);
      rects.push_back(Rect{static_cast<int>(vals[0]) - 1, static_cast<int>(vals[1]) - 1,
                           static_cast<int>(vals[2]), static_cast<int>(vals[3])});
    }
    try {
      return from_rects(rects);
    } catch (const Error& e) {
      throw ParseError(e.what(), line_numbers[0]);
    }
  }

  auto header = detail::parse_ints(lines[0], line_numbers[0]);
  if (header.size() != 1 || header[0] <= 0)
    throw ParseError("expected grid side on the first line", line_numbers[0]);
  int n = static_cast<int>(header[0]);
  if (static_cast<int>(lines.size()) - 1 != n)
    throw ParseError("expected " + std::to_string(n) + " grid lines, got " +
                         std::to_string(lines.size() - 1),
                     line_numbers[0]);
  std::vector<int> labels;
  labels.reserve(static_cast<size_t>(n) * n);
  for (int i = 1; i <= n; ++i) {
    auto vals = detail::parse_ints(lines[i], line_numbers[i]);
    if (static_cast<int>(vals.size()) != n)
      throw ParseError("expected " + std::to_string(n) + " labels, got " +
                           std::to_string(vals.size()),
                       line_numbers[i]);
    for (size_t j = 0; j < vals.size(); ++j) {
      if (vals[j] < 1 || vals[j] > static_cast<long long>(n) * n)
        throw ParseError("label out of range", line_numbers[i], static_cast<int>(j) + 1);
      labels.push_back(static_cast<int>(vals[j]));
    }
  }
  // Reject grids where some label in 1..max is unused; canonicalization would
  // silently renumber and hide the gap.
  int maxlab = *std::max_element(labels.begin(), labels.end());
  std::vector<char> seen(maxlab + 1, 0);
  for (int l : labels) seen[l] = 1;
  for (int l = 1; l <= maxlab; ++l)
    if (!seen[l])
      throw ParseError("label " + std::to_string(l) + " never occurs", line_numbers[0]);
  return RegionPartition(n, n, std::move(labels));
}

// ---------------------------------------------------------------------------
// Classification

enum class FrameworkClass {
  Uniform,
  Mixed,
  Columns,
  Tree,
  UnsupportedRectangular,
  NonRectangular,
};

inline const char* to_string(FrameworkClass c) {
  switch (c) {
    case FrameworkClass::Uniform: return "uniform";
    case FrameworkClass::Mixed: return "mixed";
    case FrameworkClass::Columns: return "columns";
    case FrameworkClass::Tree: return "tree";
    case FrameworkClass::UnsupportedRectangular: return "unsupported-rectangular";
    case FrameworkClass::NonRectangular: return "non-rectangular";
  }
  return "?";
}

struct ClassLabel {
  FrameworkClass primary = FrameworkClass::NonRectangular;
  bool uniform = false;
  bool mixed = false;
  bool divides = false;  // mixed with t = c*s
  bool columns = false;
  bool tree = false;
  int s = 0;  // uniform: region height; mixed: min(s,t)
  int t = 0;  // uniform: region width; mixed: max(s,t)
};

inline ClassLabel classify(const RegionPartition& F) {
  if (!F.is_gerechte()) throw Error("classify: framework is not gerechte");
  ClassLabel out;
  if (!F.is_rectangular()) return out;

  int n = F.rows();
  std::vector<Rect> rects;
  rects.reserve(F.region_count());
  for (int id = 1; id <= F.region_count(); ++id) rects.push_back(F.bounding_box(id));

  std::vector<std::pair<int, int>> dims;
  for (const auto& r : rects) {
    std::pair<int, int> d{r.height, r.width};
    if (std::find(dims.begin(), dims.end(), d) == dims.end()) dims.push_back(d);
  }

  if (dims.size() == 1) {
    out.uniform = true;
    out.mixed = true;
    out.s = std::min(dims[0].first, dims[0].second);
    out.t = std::max(dims[0].first, dims[0].second);
  } else if (dims.size() == 2 && dims[0].first == dims[1].second &&
             dims[0].second == dims[1].first) {
    out.mixed = true;
    out.s = std::min(dims[0].first, dims[0].second);
    out.t = std::max(dims[0].first, dims[0].second);
  }
  if (out.mixed) out.divides = (out.s > 0 && out.t % out.s == 0);

  auto col_overlap = [](const Rect& a, const Rect& b) {
    return a.left < b.right() && b.left < a.right();
  };

  out.columns = true;
  for (size_t a = 0; a < rects.size() && out.columns; ++a)
    for (size_t b = a + 1; b < rects.size() && out.columns; ++b)
      if (col_overlap(rects[a], rects[b]) &&
          (rects[a].left != rects[b].left || rects[a].width != rects[b].width))
        out.columns = false;

  // Tree: the bottom set of every region contains only complete regions.
  out.tree = true;
  for (size_t a = 0; a < rects.size() && out.tree; ++a) {
    const Rect& R = rects[a];
    if (R.bottom() == n) continue;
    for (size_t b = 0; b < rects.size() && out.tree; ++b) {
      if (a == b) continue;
      const Rect& Q = rects[b];
      bool touches_bottom_set =
          col_overlap(R, Q) && Q.bottom() > R.bottom();
      if (!touches_bottom_set) continue;
      bool contained = Q.top >= R.bottom() && Q.left >= R.left && Q.right() <= R.right();
      if (!contained) out.tree = false;
    }
  }

  if (out.uniform)
    out.primary = FrameworkClass::Uniform;
  else if (out.mixed)
    out.primary = FrameworkClass::Mixed;
  else if (out.columns)
    out.primary = FrameworkClass::Columns;
  else if (out.tree)
    out.primary = FrameworkClass::Tree;
  else
    out.primary = FrameworkClass::UnsupportedRectangular;
  return out;
}

// ---------------------------------------------------------------------------
// Reduction F/k and refinement F'

inline RegionPartition reduce(const RegionPartition& F, int k) {
  if (k <= 0) throw Error("reduce: k must be positive");
  if (!F.is_gerechte()) throw Error("reduce: framework is not gerechte");
  if (!F.is_rectangular()) throw Error("reduce: framework is not rectangular");
  int n = F.rows();
  for (int id = 1; id <= F.region_count(); ++id) {
    Rect r = F.bounding_box(id);
    if (r.height % k != 0 || r.width % k != 0)
      throw Error("reduce: k=" + std::to_string(k) + " does not divide the " +
                  std::to_string(r.height) + "x" + std::to_string(r.width) +
                  " region " + std::to_string(id));
  }
  int m = n / k;
  std::vector<int> labels(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int l = F.label(i * k, j * k);
      // Regions with k | height and k | width are k-grid aligned, so each
      // k x k block carries a single label; check it anyway.
      for (int di = 0; di < k; ++di)
        for (int dj = 0; dj < k; ++dj)
          if (F.label(i * k + di, j * k + dj) != l)
            throw Error("reduce: k x k block not contained in one region");
      labels[i * m + j] = l;
    }
  return RegionPartition(m, m, std::move(labels));
}

// Refined framework F': every vertical region boundary is extended upwards to
// the top of the square. Requires a tree-structured framework, where each
// extended line either cuts a region over its full height or misses it.
inline RegionPartition refine(const RegionPartition& F) {
  ClassLabel cl = classify(F);
  if (!cl.tree) throw Error("refine: framework is not arranged in a tree structure");
  int n = F.rows();
  std::vector<Rect> rects;
  for (int id = 1; id <= F.region_count(); ++id) rects.push_back(F.bounding_box(id));

  std::vector<int> labels(static_cast<size_t>(n) * n);
  int next = 0;
  std::map<std::pair<int, int>, int> piece_id;  // (region, strip piece) -> label
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int id = F.label(i, j);
      const Rect& R = rects[id - 1];
      // Count extended boundaries in (R.left, j] that pass through R. A line
      // at x from region Q spans rows [0, Q.bottom) after extension.
      int piece = 0;
      for (const Rect& Q : rects) {
        if (Q.bottom() < R.bottom()) continue;
        for (int x : {Q.left, Q.right()})
          if (x > R.left && x <= j) ++piece;
      }
      auto [it, inserted] = piece_id.emplace(std::make_pair(id, piece), next + 1);
      if (inserted) ++next;
      labels[i * n + j] = it->second;
    }
  return RegionPartition(n, n, std::move(labels));
}

// ---------------------------------------------------------------------------
// Begin counts (Lemma on s' | n_i) and alignment classes

struct BeginCounts {
  int s = 0, t = 0, k = 1, s_prime = 0, t_prime = 0;
  std::vector<int> n_row;  // s x t regions beginning in each row
  std::vector<int> m_row;  // t x s regions beginning in each row
  std::vector<int> n_col;  // s x t regions beginning in each column
  std::vector<int> m_col;  // t x s regions beginning in each column
};

inline BeginCounts begin_counts(const RegionPartition& F, int s, int t) {
  if (!F.is_gerechte() || !F.is_rectangular())
    throw Error("begin_counts: framework is not gerechte and rectangular");
  int n = F.rows();
  BeginCounts bc;
  bc.s = s;
  bc.t = t;
  bc.k = std::gcd(s, t);
  bc.s_prime = s / bc.k;
  bc.t_prime = t / bc.k;
  bc.n_row.assign(n, 0);
  bc.m_row.assign(n, 0);
  bc.n_col.assign(n, 0);
  bc.m_col.assign(n, 0);
  for (int id = 1; id <= F.region_count(); ++id) {
    Rect r = F.bounding_box(id);
    if (r.height == s && r.width == t) {
      bc.n_row[r.top]++;
      bc.n_col[r.left]++;
    } else if (r.height == t && r.width == s && s != t) {
      bc.m_row[r.top]++;
      bc.m_col[r.left]++;
    } else {
      throw Error("begin_counts: region " + std::to_string(id) + " is not " +
                  std::to_string(s) + "x" + std::to_string(t) + " or transposed");
    }
  }
  // The divisibility conclusions hold for every valid framework; a failure
  // here means the partition does not satisfy the hypotheses.
  for (int i = 0; i < n; ++i) {
    if (bc.n_row[i] % bc.s_prime != 0)
      throw Error("begin_counts: s' does not divide n_" + std::to_string(i + 1));
    if (bc.m_row[i] % bc.t_prime != 0)
      throw Error("begin_counts: t' does not divide m_" + std::to_string(i + 1));
    if (bc.n_col[i] % bc.t_prime != 0)
      throw Error("begin_counts: t' does not divide column count " + std::to_string(i + 1));
    if (bc.m_col[i] % bc.s_prime != 0)
      throw Error("begin_counts: s' does not divide column count " + std::to_string(i + 1));
  }
  return bc;
}

struct AlignmentClass {
  bool horizontal = false;  // else vertical
  int begin = 0;            // begin row (horizontal) or begin column (vertical)
  int extent = 0;           // shared height (horizontal) or width (vertical)
  std::vector<int> members; // region ids
};

inline std::vector<AlignmentClass> alignment_classes(const RegionPartition& F) {
  if (!F.is_rectangular()) throw Error("alignment_classes: framework is not rectangular");
  std::map<std::pair<int, int>, std::vector<int>> horiz, vert;
  for (int id = 1; id <= F.region_count(); ++id) {
    Rect r = F.bounding_box(id);
    horiz[{r.top, r.height}].push_back(id);
    vert[{r.left, r.width}].push_back(id);
  }
  std::vector<AlignmentClass> out;
  for (auto& [key, members] : horiz) {
    std::sort(members.begin(), members.end(), [&](int a, int b) {
      return F.bounding_box(a).left < F.bounding_box(b).left;
    });
    out.push_back(AlignmentClass{true, key.first, key.second, members});
  }
  for (auto& [key, members] : vert) {
    std::sort(members.begin(), members.end(), [&](int a, int b) {
      return F.bounding_box(a).top < F.bounding_box(b).top;
    });
    out.push_back(AlignmentClass{false, key.first, key.second, members});
  }
  return out;
}

}  // namespace gerechte
