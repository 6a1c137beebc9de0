#pragma once

// Bipartite multigraphs with a constructive proper edge-colouring (Konig) and
// the equitable k-edge-colouring obtained by vertex splitting.

#include <algorithm>
#include <utility>
#include <vector>

#include "gerechte/framework.hpp"  // for Error

namespace gerechte {

// Edges are identified by their position in the edge list, so parallel edges
// are distinct instances.
struct BipartiteMultigraph {
  int left = 0;
  int right = 0;
  std::vector<std::pair<int, int>> edges;

  void add_edge(int u, int v) {
    if (u < 0 || u >= left || v < 0 || v >= right)
      throw Error("edge endpoint out of range");
    edges.emplace_back(u, v);
  }

  int edge_count() const { return static_cast<int>(edges.size()); }

  std::vector<int> degrees() const {
    std::vector<int> deg(left + right, 0);
    for (auto [u, v] : edges) {
      deg[u]++;
      deg[left + v]++;
    }
    return deg;
  }

  int max_degree() const {
    auto deg = degrees();
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  }
};

// colour[e] in 0..colours-1 for each edge instance e.
struct EdgeColouring {
  int colours = 0;
  std::vector<int> colour;
};

inline bool is_proper(const BipartiteMultigraph& g, const EdgeColouring& c) {
  if (c.colour.size() != g.edges.size()) return false;
  std::vector<std::vector<char>> seen(g.left + g.right,
                                      std::vector<char>(c.colours, 0));
  for (size_t e = 0; e < g.edges.size(); ++e) {
    int col = c.colour[e];
    if (col < 0 || col >= c.colours) return false;
    auto [u, v] = g.edges[e];
    if (seen[u][col] || seen[g.left + v][col]) return false;
    seen[u][col] = seen[g.left + v][col] = 1;
  }
  return true;
}

inline bool is_equitable(const BipartiteMultigraph& g, const EdgeColouring& c, int k) {
  if (c.colour.size() != g.edges.size() || c.colours != k) return false;
  std::vector<std::vector<int>> count(g.left + g.right, std::vector<int>(k, 0));
  for (size_t e = 0; e < g.edges.size(); ++e) {
    int col = c.colour[e];
    if (col < 0 || col >= k) return false;
    auto [u, v] = g.edges[e];
    count[u][col]++;
    count[g.left + v][col]++;
  }
  auto deg = g.degrees();
  for (int v = 0; v < g.left + g.right; ++v) {
    if (deg[v] % k != 0) return false;
    for (int col = 0; col < k; ++col)
      if (count[v][col] != deg[v] / k) return false;
  }
  return true;
}

// Incremental Konig colouring: insert edges one at a time, using the smallest
// colour free at both endpoints, or flipping an alternating path otherwise.
// Deterministic in the edge order. Uses exactly Delta(G) colours.
inline EdgeColouring proper_edge_colouring(const BipartiteMultigraph& g) {
  int delta = g.max_degree();
  EdgeColouring out;
  out.colours = delta;
  out.colour.assign(g.edges.size(), -1);
  int vcount = g.left + g.right;
  // slot[v][c] = edge currently coloured c at v, or -1.
  std::vector<std::vector<int>> slot(vcount, std::vector<int>(delta, -1));

  auto other = [&](int e, int v) {
    auto [u, w] = g.edges[e];
    return u == v ? g.left + w : u;
  };

  for (int e = 0; e < g.edge_count(); ++e) {
    int u = g.edges[e].first;
    int w = g.left + g.edges[e].second;
    int both = -1, at_u = -1, at_w = -1;
    for (int c = 0; c < delta; ++c) {
      bool fu = slot[u][c] < 0, fw = slot[w][c] < 0;
      if (fu && fw && both < 0) both = c;
      if (fu && at_u < 0) at_u = c;
      if (fw && at_w < 0) at_w = c;
    }
    int use;
    if (both >= 0) {
      use = both;
    } else {
      // Flip the at_u/at_w alternating path starting at w; it cannot reach u.
      int a = at_u, b = at_w;
      std::vector<int> path;
      int cur = w, want = a;
      while (slot[cur][want] >= 0) {
        int pe = slot[cur][want];
        path.push_back(pe);
        cur = other(pe, cur);
        want = (want == a ? b : a);
      }
      for (int pe : path) {
        auto [pu, pv] = g.edges[pe];
        int x = pu, y = g.left + pv;
        slot[x][out.colour[pe]] = -1;
        slot[y][out.colour[pe]] = -1;
        out.colour[pe] = (out.colour[pe] == a ? b : a);
      }
      for (int pe : path) {
        auto [pu, pv] = g.edges[pe];
        slot[pu][out.colour[pe]] = pe;
        slot[g.left + pv][out.colour[pe]] = pe;
      }
      use = a;
    }
    out.colour[e] = use;
    slot[u][use] = e;
    slot[w][use] = e;
  }
  return out;
}

// Equitable k-colouring via vertex splitting: each vertex v becomes deg(v)/k
// copies of degree k (edges distributed in input order), the split graph is
// properly coloured with its Delta = k colours, and colours are pulled back.
inline EdgeColouring equitable_edge_colouring(const BipartiteMultigraph& g, int k) {
  if (k <= 0) throw Error("equitable colouring: k must be positive");
  auto deg = g.degrees();
  for (int v = 0; v < g.left + g.right; ++v)
    if (deg[v] % k != 0)
      throw Error("equitable colouring: degree " + std::to_string(deg[v]) +
                  " not divisible by k=" + std::to_string(k));

  std::vector<int> base(g.left + g.right + 1, 0);
  for (int v = 0; v < g.left + g.right; ++v) base[v + 1] = base[v] + deg[v] / k;
  int left_copies = base[g.left];
  int total_copies = base[g.left + g.right];

  BipartiteMultigraph split;
  split.left = left_copies;
  split.right = total_copies - left_copies;
  std::vector<int> seen(g.left + g.right, 0);
  for (auto [u, v] : g.edges) {
    int cu = base[u] + seen[u]++ / k;
    int cv = base[g.left + v] + seen[g.left + v]++ / k;
    split.add_edge(cu, cv - left_copies);
  }

  EdgeColouring out = proper_edge_colouring(split);
  out.colours = k;  // vacuously k colours even if the graph is empty
  return out;
}

}  // namespace gerechte
