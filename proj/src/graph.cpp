#include "bm/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace bm {

SimpleGraph::SimpleGraph(int vertices, std::vector<Edge> edges)
    : vertices_(vertices), edges_(std::move(edges)) {
  if (vertices < 0) throw GraphError("negative vertex count");
  std::set<Edge> seen;
  for (Edge& e : edges_) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 0 || e.second >= vertices) {
      throw GraphError("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                       " references a missing vertex");
    }
    if (e.first == e.second) throw GraphError("loop at vertex " + std::to_string(e.first));
    if (!seen.insert(e).second) {
      throw GraphError("repeated edge " + std::to_string(e.first) + "-" + std::to_string(e.second));
    }
  }
}

int SimpleGraph::components() const {
  std::vector<int> parent(vertices_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int count = vertices_;
  for (const auto& [a, b] : edges_) {
    const int ra = find(a);
    const int rb = find(b);
    if (ra != rb) {
      parent[std::max(ra, rb)] = std::min(ra, rb);
      --count;
    }
  }
  return count;
}

SimpleGraph wheel(int n) {
  if (n < 3) throw GraphError("wheel needs at least 3 spokes");
  std::vector<SimpleGraph::Edge> e;
  for (int i = 1; i <= n; ++i) e.emplace_back(0, i);
  for (int i = 1; i <= n; ++i) e.emplace_back(i, i % n + 1);
  return SimpleGraph(n + 1, std::move(e));
}

SimpleGraph planar_quartic_ladder(int n) {
  if (n < 3) throw GraphError("quartic ladders need n >= 3");
  // u_i = i, v_i = n + i.
  std::vector<SimpleGraph::Edge> e;
  for (int i = 0; i < n; ++i) {
    const int next = (i + 1) % n;
    const int prev = (i + n - 1) % n;
    e.emplace_back(i, next);
    e.emplace_back(n + i, n + next);
    e.emplace_back(i, n + i);
    e.emplace_back(i, n + prev);
  }
  return SimpleGraph(2 * n, std::move(e));
}

SimpleGraph mobius_quartic_ladder(int n) {
  if (n < 3) throw GraphError("quartic ladders need n >= 3");
  const int m = 2 * n - 1;
  std::set<SimpleGraph::Edge> e;
  auto add = [&](int a, int b) { e.emplace(std::min(a, b), std::max(a, b)); };
  for (int i = 0; i < m; ++i) add(i, (i + 1) % m);
  for (int i = 0; i < n; ++i) {
    add(i, (i + n - 1) % m);
    add(i, (i + n) % m);
  }
  return SimpleGraph(m, std::vector<SimpleGraph::Edge>(e.begin(), e.end()));
}

SimpleGraph cube() {
  std::vector<SimpleGraph::Edge> e;
  for (int v = 0; v < 8; ++v) {
    for (int bit = 1; bit < 8; bit <<= 1) {
      if ((v & bit) == 0) e.emplace_back(v, v | bit);
    }
  }
  return SimpleGraph(8, std::move(e));
}

SimpleGraph octahedron() {
  // K_{2,2,2}: vertices 2i and 2i+1 are the non-adjacent pairs.
  std::vector<SimpleGraph::Edge> e;
  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) {
      if (a / 2 != b / 2) e.emplace_back(a, b);
    }
  }
  return SimpleGraph(6, std::move(e));
}

SimpleGraph terrahawk() {
  std::vector<SimpleGraph::Edge> e = cube().edges();
  // Face with bit 2 clear: vertices 0, 1, 2, 3.
  for (int v = 0; v < 4; ++v) e.emplace_back(v, 8);
  return SimpleGraph(9, std::move(e));
}

SimpleGraph complete(int n) {
  if (n < 1) throw GraphError("complete graph needs a vertex");
  std::vector<SimpleGraph::Edge> e;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) e.emplace_back(a, b);
  }
  return SimpleGraph(n, std::move(e));
}

SimpleGraph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw GraphError("complete bipartite graph needs two nonempty sides");
  std::vector<SimpleGraph::Edge> e;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  }
  return SimpleGraph(a + b, std::move(e));
}

SimpleGraph prism_graph() {
  return SimpleGraph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

}  // namespace bm
