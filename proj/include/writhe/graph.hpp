#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "writhe/permutation.hpp"

namespace writhe {

/// Small labeled directed multigraph on vertices {1, ..., v}.
///
/// Parallel edges are kept; acyclicity is not required.
class DirectedGraph {
 public:
  using Edge = std::pair<int, int>;

  DirectedGraph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const noexcept { return num_vertices_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  int in_degree(int vertex) const;
  int out_degree(int vertex) const;

  /// Same graph with the direction of edge `index` reversed.
  DirectedGraph flip_edge(std::size_t index) const;

  /// Vertex sets of the weakly connected components, each sorted ascending.
  std::vector<std::vector<int>> components() const;

  /// Subgraph induced on `vertices`, relabeled 1..k in the given order.
  DirectedGraph induced(std::span<const int> vertices) const;

  /// Disjoint union; vertices of `other` are shifted by num_vertices().
  DirectedGraph disjoint_union(const DirectedGraph& other) const;

  friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;

 private:
  int num_vertices_;
  std::vector<Edge> edges_;
};

/// Number of edges u -> w with p(u) > p(w); vertex u corresponds to position u-1.
std::int64_t inv_graphical(const Permutation& p, const DirectedGraph& graph);

/// Edges i -> i+j (mod 2n+1) for 1 <= j <= n.
DirectedGraph clockwise_tournament(int n);

enum class GraphKind {
  transitive_tournament,  // params: {v}
  path,                   // params: {v}, edges (i, i+1)
  cycle,                  // params: {v}, path plus (v, 1); v >= 2
  complete_bipartite,     // params: {|U|, |V|}
  cyclic_bipartite,       // params: {|U1|, |V1|, |U2|, |V2|}, U1 => V1 => U2 => V2 => U1
};

DirectedGraph standard_graph(GraphKind kind, std::span<const int> params);

/// Oriented path with `num_edges` edges (num_edges + 1 vertices).
DirectedGraph oriented_path(int num_edges);

/// Cyclically oriented cycle with `num_edges` edges; two vertices give a 2-cycle.
DirectedGraph oriented_cycle(int num_edges);

std::string to_string(GraphKind kind);

}  // namespace writhe
