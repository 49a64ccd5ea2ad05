#include "writhe/graph.hpp"

#include <algorithm>
#include <numeric>

#include "writhe/errors.hpp"

namespace writhe {

DirectedGraph::DirectedGraph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices_ < 1) throw DomainError("graph needs at least one vertex");
  for (const auto& [u, w] : edges_) {
    if (u < 1 || u > num_vertices_ || w < 1 || w > num_vertices_) {
      throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(w) +
                        ") references a vertex outside 1.." + std::to_string(num_vertices_));
    }
  }
}

int DirectedGraph::in_degree(int vertex) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [vertex](const Edge& e) { return e.second == vertex; }));
}

int DirectedGraph::out_degree(int vertex) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [vertex](const Edge& e) { return e.first == vertex; }));
}

DirectedGraph DirectedGraph::flip_edge(std::size_t index) const {
  if (index >= edges_.size()) throw DomainError("edge index out of range");
  auto edges = edges_;
  std::swap(edges[index].first, edges[index].second);
  return DirectedGraph(num_vertices_, std::move(edges));
}

std::vector<std::vector<int>> DirectedGraph::components() const {
  // union-find over 1-based vertices
  std::vector<int> parent(static_cast<std::size_t>(num_vertices_) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& [u, w] : edges_) parent[find(u)] = find(w);

  std::vector<std::vector<int>> groups;
  std::vector<int> slot(parent.size(), -1);
  for (int v = 1; v <= num_vertices_; ++v) {
    const int root = find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[slot[root]].push_back(v);
  }
  return groups;
}

DirectedGraph DirectedGraph::induced(std::span<const int> vertices) const {
  std::vector<int> relabel(static_cast<std::size_t>(num_vertices_) + 1, 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const int v = vertices[i];
    if (v < 1 || v > num_vertices_) throw DomainError("induced: vertex out of range");
    relabel[v] = static_cast<int>(i) + 1;
  }
  std::vector<Edge> edges;
  for (const auto& [u, w] : edges_) {
    if (relabel[u] && relabel[w]) edges.emplace_back(relabel[u], relabel[w]);
  }
  return DirectedGraph(static_cast<int>(vertices.size()), std::move(edges));
}

DirectedGraph DirectedGraph::disjoint_union(const DirectedGraph& other) const {
  auto edges = edges_;
  for (const auto& [u, w] : other.edges_) {
    edges.emplace_back(u + num_vertices_, w + num_vertices_);
  }
  return DirectedGraph(num_vertices_ + other.num_vertices_, std::move(edges));
}

std::int64_t inv_graphical(const Permutation& p, const DirectedGraph& graph) {
  if (static_cast<std::size_t>(graph.num_vertices()) != p.size()) {
    throw DomainError("inv_graphical: graph has " + std::to_string(graph.num_vertices()) +
                      " vertices but permutation has size " + std::to_string(p.size()));
  }
  std::int64_t count = 0;
  for (const auto& [u, w] : graph.edges()) {
    if (p[static_cast<std::size_t>(u - 1)] > p[static_cast<std::size_t>(w - 1)]) ++count;
  }
  return count;
}

DirectedGraph clockwise_tournament(int n) {
  if (n < 1) throw DomainError("clockwise_tournament needs n >= 1");
  const int size = 2 * n + 1;
  std::vector<DirectedGraph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(size) * n);
  for (int i = 0; i < size; ++i) {
    for (int j = 1; j <= n; ++j) edges.emplace_back(i + 1, (i + j) % size + 1);
  }
  return DirectedGraph(size, std::move(edges));
}

DirectedGraph oriented_path(int num_edges) {
  if (num_edges < 0) throw DomainError("path needs a nonnegative edge count");
  std::vector<DirectedGraph::Edge> edges;
  for (int i = 1; i <= num_edges; ++i) edges.emplace_back(i, i + 1);
  return DirectedGraph(num_edges + 1, std::move(edges));
}

DirectedGraph oriented_cycle(int num_edges) {
  if (num_edges < 2) throw DomainError("cycle needs at least 2 edges (no self-loops)");
  std::vector<DirectedGraph::Edge> edges;
  for (int i = 1; i < num_edges; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(num_edges, 1);
  return DirectedGraph(num_edges, std::move(edges));
}

namespace {

void require_params(std::span<const int> params, std::size_t count, GraphKind kind) {
  if (params.size() != count) {
    throw DomainError(to_string(kind) + " expects " + std::to_string(count) + " parameter(s)");
  }
  for (int p : params) {
    if (p < 1) throw DomainError(to_string(kind) + " parameters must be positive");
  }
}

void connect_blocks(std::vector<DirectedGraph::Edge>& edges, int from_start, int from_size, int to_start,
                    int to_size) {
  for (int a = 0; a < from_size; ++a) {
    for (int b = 0; b < to_size; ++b) edges.emplace_back(from_start + a, to_start + b);
  }
}

}  // namespace

DirectedGraph standard_graph(GraphKind kind, std::span<const int> params) {
  switch (kind) {
    case GraphKind::transitive_tournament: {
      require_params(params, 1, kind);
      std::vector<DirectedGraph::Edge> edges;
      for (int i = 1; i <= params[0]; ++i) {
        for (int j = i + 1; j <= params[0]; ++j) edges.emplace_back(i, j);
      }
      return DirectedGraph(params[0], std::move(edges));
    }
    case GraphKind::path:
      require_params(params, 1, kind);
      return oriented_path(params[0] - 1);
    case GraphKind::cycle:
      require_params(params, 1, kind);
      return oriented_cycle(params[0]);
    case GraphKind::complete_bipartite: {
      require_params(params, 2, kind);
      std::vector<DirectedGraph::Edge> edges;
      connect_blocks(edges, 1, params[0], params[0] + 1, params[1]);
      return DirectedGraph(params[0] + params[1], std::move(edges));
    }
    case GraphKind::cyclic_bipartite: {
      require_params(params, 4, kind);
      std::vector<DirectedGraph::Edge> edges;
      int start[4];
      int offset = 1;
      for (int b = 0; b < 4; ++b) {
        start[b] = offset;
        offset += params[b];
      }
      for (int b = 0; b < 4; ++b) {
        const int next = (b + 1) % 4;
        connect_blocks(edges, start[b], params[b], start[next], params[next]);
      }
      return DirectedGraph(offset - 1, std::move(edges));
    }
  }
  throw DomainError("unknown graph kind");
}

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::transitive_tournament:
      return "transitive_tournament";
    case GraphKind::path:
      return "path";
    case GraphKind::cycle:
      return "cycle";
    case GraphKind::complete_bipartite:
      return "complete_bipartite";
    case GraphKind::cyclic_bipartite:
      return "cyclic_bipartite";
  }
  return "unknown";
}

}  // namespace writhe
