#pragma once

#include <deque>
#include <optional>
#include <vector>

#include "mpm/augpath.hpp"
#include "mpm/graph.hpp"
#include "mpm/trace.hpp"

namespace mpm {

/// Single augmenting-path search on a bipartite graph: grows alternating trees
/// from every unmatched vertex of `targets` and returns a path that either
/// ends unmatched or ends at a matched vertex outside `targets`. One-shot:
/// construct, run() once, then inspect the final forest.
///
/// The caller is responsible for bipartiteness; find_set_augmenting_path
/// verifies it. Eligible edges form a FIFO queue seeded with the edges
/// incident to roots in ascending root order, ascending edge id within a root.
class BipartiteSearch {
 public:
  BipartiteSearch(const Graph& g, const Matching& m, const VertexSet& targets,
                  TraceSink* sink = nullptr);
  std::optional<AugPath> run();

  Label label(Vertex v) const { return label_[v]; }
  EdgeId parent_edge(Vertex v) const { return parent_edge_[v]; }
  Vertex parent(Vertex v) const;
  Vertex tree_root(Vertex v) const;  // v must be labeled
  const std::vector<Vertex>& roots() const { return roots_; }
  const Graph& graph() const { return g_; }
  const Matching& matching() const { return m_; }
  const VertexSet& targets() const { return targets_; }

 private:
  AugPath to_root(Vertex from) const;                 // root .. from order
  AugPath unmatched_endpoint_path(Vertex u, Vertex v, EdgeId e) const;
  AugPath cross_tree_path(Vertex u, Vertex v, EdgeId e) const;
  void emit(EdgeId e, Vertex u, Vertex v, StepKind kind);

  const Graph& g_;
  const Matching& m_;
  const VertexSet& targets_;
  TraceSink* sink_;
  std::vector<Label> label_;
  std::vector<EdgeId> parent_edge_;
  std::vector<Vertex> roots_;
  std::deque<EdgeId> queue_;
  int seq_ = 0;
};

// Checked entry point; throws NotBipartiteError when the graph has an odd cycle.
std::optional<AugPath> find_set_augmenting_path(const Graph& g, const Matching& m,
                                                const VertexSet& targets,
                                                TraceSink* sink = nullptr);

// After a failed search, verifies the five structural properties of the final
// forest (root shape, matched-edge shape, intra-tree edges, odd coverage of
// touched edges, even vertices confined to the target set). Returns the first
// violated property.
std::optional<InvariantViolation> check_failure_invariants(const BipartiteSearch& s);

}  // namespace mpm
