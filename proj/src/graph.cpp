#include "mpm/graph.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <utility>

namespace mpm {

Graph Graph::build(int vertex_count, std::vector<Edge> edges, std::vector<int> priorities) {
  if (vertex_count < 0)
    throw GraphError(GraphErrorKind::VertexOutOfRange, "negative vertex count");
  if (static_cast<int>(priorities.size()) != vertex_count)
    throw GraphError(GraphErrorKind::PriorityCountMismatch,
                     "expected " + std::to_string(vertex_count) + " priorities, got " +
                         std::to_string(priorities.size()));
  for (int i = 0; i < vertex_count; ++i) {
    if (priorities[i] < 1 || priorities[i] > vertex_count)
      throw GraphError(GraphErrorKind::PriorityOutOfRange,
                       "priority " + std::to_string(priorities[i]) + " of vertex " +
                           std::to_string(i + 1) + " outside [1, " +
                           std::to_string(vertex_count) + "]");
  }
  for (const Edge& e : edges) {
    if (e.u < 1 || e.u > vertex_count || e.v < 1 || e.v > vertex_count)
      throw GraphError(GraphErrorKind::VertexOutOfRange,
                       "edge endpoint outside [1, " + std::to_string(vertex_count) + "]");
    if (e.u == e.v)
      throw GraphError(GraphErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
  }
  {
    std::vector<std::pair<Vertex, Vertex>> keys;
    keys.reserve(edges.size());
    for (const Edge& e : edges) keys.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(keys.begin(), keys.end());
    auto dup = std::adjacent_find(keys.begin(), keys.end());
    if (dup != keys.end())
      throw GraphError(GraphErrorKind::DuplicateEdge,
                       "duplicate edge " + std::to_string(dup->first) + "-" +
                           std::to_string(dup->second));
  }

  Graph g;
  g.n_ = vertex_count;
  g.edges_ = std::move(edges);
  g.priority_.assign(vertex_count + 1, 0);
  for (int i = 0; i < vertex_count; ++i) g.priority_[i + 1] = priorities[i];

  g.adj_start_.assign(vertex_count + 2, 0);
  for (const Edge& e : g.edges_) {
    ++g.adj_start_[e.u + 1];
    ++g.adj_start_[e.v + 1];
  }
  for (int v = 1; v <= vertex_count; ++v) g.adj_start_[v + 1] += g.adj_start_[v];
  g.adj_flat_.assign(2 * g.edges_.size(), kNoEdge);
  std::vector<int> cursor(g.adj_start_.begin(), g.adj_start_.end());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    g.adj_flat_[cursor[g.edges_[e].u]++] = e;
    g.adj_flat_[cursor[g.edges_[e].v]++] = e;
  }
  return g;
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) return std::nullopt;
  for (EdgeId e : incident_edges(u))
    if (other_endpoint(e, u) == v) return e;
  return std::nullopt;
}

std::optional<std::vector<char>> Graph::bipartition() const {
  std::vector<char> side(n_ + 1, -1);
  std::deque<Vertex> queue;
  for (Vertex s = 1; s <= n_; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (EdgeId e : incident_edges(v)) {
        Vertex w = other_endpoint(e, v);
        if (side[w] == -1) {
          side[w] = side[v] ^ 1;
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

Matching::Matching(const Graph& g)
    : in_matching_(g.edge_count(), 0),
      matched_edge_(g.vertex_count() + 1, kNoEdge),
      mate_(g.vertex_count() + 1, kNoVertex) {}

std::vector<EdgeId> Matching::edge_ids() const {
  std::vector<EdgeId> out;
  out.reserve(size_);
  for (EdgeId e = 0; e < static_cast<EdgeId>(in_matching_.size()); ++e)
    if (in_matching_[e]) out.push_back(e);
  return out;
}

void Matching::add(const Graph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  assert(!in_matching_[e] && !is_matched(ed.u) && !is_matched(ed.v));
  in_matching_[e] = 1;
  matched_edge_[ed.u] = e;
  matched_edge_[ed.v] = e;
  mate_[ed.u] = ed.v;
  mate_[ed.v] = ed.u;
  ++size_;
}

void Matching::remove(const Graph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  assert(in_matching_[e]);
  in_matching_[e] = 0;
  matched_edge_[ed.u] = kNoEdge;
  matched_edge_[ed.v] = kNoEdge;
  mate_[ed.u] = kNoVertex;
  mate_[ed.v] = kNoVertex;
  --size_;
}

std::optional<std::string> Matching::audit(const Graph& g) const {
  if (static_cast<int>(in_matching_.size()) != g.edge_count() ||
      static_cast<int>(matched_edge_.size()) != g.vertex_count() + 1)
    return "matching sized for a different graph";
  int count = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!in_matching_[e]) continue;
    ++count;
    const Edge& ed = g.edge(e);
    if (matched_edge_[ed.u] != e || matched_edge_[ed.v] != e)
      return "edge " + std::to_string(e) + " in matching but endpoints disagree";
    if (mate_[ed.u] != ed.v || mate_[ed.v] != ed.u)
      return "mate pointers wrong across edge " + std::to_string(e);
  }
  if (count != size_) return "size counter out of sync";
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    EdgeId e = matched_edge_[v];
    if (e == kNoEdge) continue;
    if (e < 0 || e >= g.edge_count() || !in_matching_[e])
      return "vertex " + std::to_string(v) + " points at a non-matching edge";
    const Edge& ed = g.edge(e);
    if (ed.u != v && ed.v != v)
      return "vertex " + std::to_string(v) + " points at a non-incident edge";
  }
  return std::nullopt;
}

MatchingCheck is_valid_matching(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<char> covered(g.vertex_count() + 1, 0);
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.edge_count())
      throw GraphError(GraphErrorKind::EdgeIndexOutOfRange,
                       "edge index " + std::to_string(e) + " out of range");
    const Edge& ed = g.edge(e);
    if (covered[ed.u]) return {false, ed.u};
    if (covered[ed.v]) return {false, ed.v};
    covered[ed.u] = covered[ed.v] = 1;
  }
  return {};
}

Matching make_matching(const Graph& g, std::span<const EdgeId> edges) {
  MatchingCheck check = is_valid_matching(g, edges);
  if (!check.valid)
    throw GraphError(GraphErrorKind::DuplicateEdge,
                     "edges are not a matching: vertex " + std::to_string(check.conflict) +
                         " covered twice");
  Matching m(g);
  for (EdgeId e : edges) m.add(g, e);
  return m;
}

VertexSet make_vertex_set(const Graph& g, std::span<const Vertex> members) {
  VertexSet set(g.vertex_count() + 1, 0);
  for (Vertex v : members) {
    if (v < 1 || v > g.vertex_count())
      throw GraphError(GraphErrorKind::VertexOutOfRange,
                       "vertex " + std::to_string(v) + " out of range");
    set[v] = 1;
  }
  return set;
}

}  // namespace mpm
