#pragma once

// Small simple graphs and the families whose cycle matroids we need.

#include <stdexcept>
#include <utility>
#include <vector>

namespace bm {

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SimpleGraph {
 public:
  using Edge = std::pair<int, int>;

  SimpleGraph() = default;
  // Edges are normalized to (min, max); loops and repeats are rejected.
  SimpleGraph(int vertices, std::vector<Edge> edges);

  int vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int components() const;

 private:
  int vertices_ = 0;
  std::vector<Edge> edges_;
};

// Hub 0 joined to the rim cycle 1..n.
SimpleGraph wheel(int n);
// Cycles u_0..u_{n-1} and v_0..v_{n-1} joined by u_i v_i and u_i v_{i-1}.
SimpleGraph planar_quartic_ladder(int n);
// Cycle v_0..v_{2n-2} plus v_i v_{i+n-1} and v_i v_{i+n}, indices mod 2n-1.
SimpleGraph mobius_quartic_ladder(int n);
SimpleGraph cube();
SimpleGraph octahedron();
// The cube plus a vertex adjacent to the four corners of one face.
SimpleGraph terrahawk();
SimpleGraph complete(int n);
SimpleGraph complete_bipartite(int a, int b);
// Two triangles joined by a perfect matching.
SimpleGraph prism_graph();

}  // namespace bm
