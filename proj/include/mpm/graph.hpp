#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mpm/errors.hpp"

namespace mpm {

using Vertex = int;  // 1-based vertex id
using EdgeId = int;  // 0-based index into the edge list

inline constexpr Vertex kNoVertex = 0;
inline constexpr EdgeId kNoEdge = -1;

struct Edge {
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Membership flags indexed by vertex id (slot 0 unused).
using VertexSet = std::vector<char>;

/// Undirected simple graph with a priority in [1, n] per vertex (1 is highest).
/// Immutable after construction; all input validation happens in build().
class Graph {
 public:
  Graph() = default;

  // Throws GraphError on self-loops, duplicate edges, out-of-range ids,
  // out-of-range priorities, or a priority list whose length is not n.
  static Graph build(int vertex_count, std::vector<Edge> edges, std::vector<int> priorities);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  Vertex other_endpoint(EdgeId e, Vertex v) const {
    const Edge& ed = edges_[e];
    return ed.u == v ? ed.v : ed.u;
  }

  // Incident edge ids in ascending order.
  std::span<const EdgeId> incident_edges(Vertex v) const {
    return {adj_flat_.data() + adj_start_[v], adj_flat_.data() + adj_start_[v + 1]};
  }

  int degree(Vertex v) const { return adj_start_[v + 1] - adj_start_[v]; }
  int priority(Vertex v) const { return priority_[v]; }
  const std::vector<int>& priorities() const { return priority_; }

  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;

  // Side (0/1) per vertex from a 2-coloring, or nullopt if an odd cycle exists.
  std::optional<std::vector<char>> bipartition() const;

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && edges_ == o.edges_ && priority_ == o.priority_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> priority_;     // size n+1, slot 0 unused
  std::vector<EdgeId> adj_flat_;  // CSR adjacency
  std::vector<int> adj_start_;    // size n+2
};

/// Set of vertex-disjoint edges over a fixed Graph. Value type: copies are
/// independent, so distinct matchings may share one Graph across threads.
class Matching {
 public:
  Matching() = default;
  explicit Matching(const Graph& g);

  bool contains(EdgeId e) const { return in_matching_[e] != 0; }
  bool is_matched(Vertex v) const { return matched_edge_[v] != kNoEdge; }
  EdgeId matched_edge(Vertex v) const { return matched_edge_[v]; }
  std::optional<Vertex> mate(Vertex v) const {
    return is_matched(v) ? std::optional<Vertex>(mate_[v]) : std::nullopt;
  }

  int size() const { return size_; }
  std::vector<EdgeId> edge_ids() const;  // ascending

  // Endpoints must be free / the edge must be present; kept consistent or asserted.
  void add(const Graph& g, EdgeId e);
  void remove(const Graph& g, EdgeId e);

  // Full consistency walk; returns a description of the first problem found.
  std::optional<std::string> audit(const Graph& g) const;

  bool operator==(const Matching&) const = default;

 private:
  std::vector<char> in_matching_;    // per edge
  std::vector<EdgeId> matched_edge_; // per vertex, kNoEdge when free
  std::vector<Vertex> mate_;         // per vertex, valid when matched
  int size_ = 0;
};

struct MatchingCheck {
  bool valid = true;
  Vertex conflict = kNoVertex;  // first vertex covered twice, if any
};

// Checks that the edge ids form a matching. Throws GraphError on a bad index.
MatchingCheck is_valid_matching(const Graph& g, std::span<const EdgeId> edges);

// Builds a Matching from edge ids; throws GraphError if they conflict.
Matching make_matching(const Graph& g, std::span<const EdgeId> edges);

VertexSet make_vertex_set(const Graph& g, std::span<const Vertex> members);

}  // namespace mpm
