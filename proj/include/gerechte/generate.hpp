#pragma once

// Seeded random framework generators for the supported families. Coverage
// generators, not uniform samplers; all randomness comes from the seed.

#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "gerechte/framework.hpp"

namespace gerechte {

enum class GenClass { Uniform, Mixed, Columns, Tree };

struct GenParams {
  int s = 0;  // Uniform / Mixed
  int t = 0;  // Uniform / Mixed
  int n = 0;  // Columns / Tree
};

namespace detail {

inline int rand_below(std::mt19937_64& rng, int m) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(m));
}

template <typename T>
inline void shuffle_vec(std::mt19937_64& rng, std::vector<T>& v) {
  for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
    std::swap(v[i], v[rand_below(rng, i + 1)]);
}

// Randomized first-free-cell tiling of the n x n grid by s x t and t x s
// rectangles, with a node cap per attempt.
inline bool tile_mixed(int n, int s, int t, std::mt19937_64& rng,
                       std::vector<int>& labels, std::uint64_t node_cap) {
  labels.assign(static_cast<size_t>(n) * n, 0);
  std::uint64_t nodes = 0;
  int placed_total = n;  // regions to place

  std::vector<std::pair<int, int>> shapes{{s, t}};
  if (s != t) shapes.emplace_back(t, s);

  std::function<bool(int)> place = [&](int placed) -> bool {
    if (placed == placed_total) return true;
    if (++nodes > node_cap) return false;
    int idx = 0;
    while (labels[idx] != 0) ++idx;
    int i = idx / n, j = idx % n;
    auto order = shapes;
    shuffle_vec(rng, order);
    for (auto [h, w] : order) {
      if (i + h > n || j + w > n) continue;
      bool free = true;
      for (int di = 0; di < h && free; ++di)
        for (int dj = 0; dj < w && free; ++dj)
          if (labels[(i + di) * n + j + dj] != 0) free = false;
      if (!free) continue;
      for (int di = 0; di < h; ++di)
        for (int dj = 0; dj < w; ++dj) labels[(i + di) * n + j + dj] = placed + 1;
      if (place(placed + 1)) return true;
      if (nodes > node_cap) return false;
      for (int di = 0; di < h; ++di)
        for (int dj = 0; dj < w; ++dj) labels[(i + di) * n + j + dj] = 0;
    }
    return false;
  };
  return place(0);
}

// Tree strips: fill columns [l, r) from row a downwards with a top region of
// some width w (w | n, and n | w*a so the remaining area stays tileable)
// followed recursively by complete regions.
inline void gen_tree_strip(int n, int l, int r, int a, std::mt19937_64& rng,
                           std::vector<int>& labels, int& next_label) {
  int pos = l;
  while (pos < r) {
    int g = n / std::gcd(n, a);  // widths must be multiples of g
    std::vector<int> widths;
    for (int w = g; w <= r - pos; w += g)
      if (n % w == 0 && n / w <= n - a) widths.push_back(w);
    int w = widths[rand_below(rng, static_cast<int>(widths.size()))];
    int h = n / w;
    int label = ++next_label;
    for (int i = a; i < a + h; ++i)
      for (int j = pos; j < pos + w; ++j) labels[i * n + j] = label;
    if (a + h < n) gen_tree_strip(n, pos, pos + w, a + h, rng, labels, next_label);
    pos += w;
  }
}

}  // namespace detail

inline RegionPartition generate(GenClass cls, const GenParams& params,
                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  switch (cls) {
    case GenClass::Uniform: {
      int s = params.s, t = params.t;
      if (s <= 0 || t <= 0) throw Error("generate: uniform needs s and t");
      int n = s * t;
      std::vector<int> labels(static_cast<size_t>(n) * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) labels[i * n + j] = (i / s) * s + j / t + 1;
      return RegionPartition(n, n, std::move(labels));
    }
    case GenClass::Mixed: {
      int s = params.s, t = params.t;
      if (s <= 0 || t <= 0) throw Error("generate: mixed needs s and t");
      int n = s * t;
      std::vector<int> labels;
      for (int attempt = 0; attempt < 64; ++attempt) {
        std::mt19937_64 arng(seed + 0x9e3779b97f4a7c15ULL * attempt);
        if (detail::tile_mixed(n, s, t, arng, labels, 2'000'000))
          return RegionPartition(n, n, std::move(labels));
      }
      throw Error("generate: mixed tiling search exhausted its budget");
    }
    case GenClass::Columns: {
      int n = params.n;
      if (n <= 0) throw Error("generate: columns needs n");
      std::vector<int> divisors;
      for (int d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
      std::vector<int> labels(static_cast<size_t>(n) * n);
      int left = 0, label = 0;
      while (left < n) {
        std::vector<int> fit;
        for (int d : divisors)
          if (d <= n - left) fit.push_back(d);
        int w = fit[detail::rand_below(rng, static_cast<int>(fit.size()))];
        int h = n / w;
        for (int top = 0; top < n; top += h) {
          ++label;
          for (int i = top; i < top + h; ++i)
            for (int j = left; j < left + w; ++j) labels[i * n + j] = label;
        }
        left += w;
      }
      return RegionPartition(n, n, std::move(labels));
    }
    case GenClass::Tree: {
      int n = params.n;
      if (n <= 0) throw Error("generate: tree needs n");
      std::vector<int> labels(static_cast<size_t>(n) * n, 0);
      int next_label = 0;
      detail::gen_tree_strip(n, 0, n, 0, rng, labels, next_label);
      return RegionPartition(n, n, std::move(labels));
    }
  }
  throw Error("generate: unknown class");
}

}  // namespace gerechte
