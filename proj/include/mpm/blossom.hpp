#pragma once

#include <deque>
#include <optional>
#include <vector>

#include "mpm/augpath.hpp"
#include "mpm/dsu.hpp"
#include "mpm/graph.hpp"
#include "mpm/trace.hpp"

namespace mpm {

inline constexpr int kNoBlossom = -1;

// Odd cycle contracted during a search. `cycle` lists the vertices that were
// outermost representatives when the cycle closed, base first and in cyclic
// order along the tree paths and the closing edge. `children` is parallel to
// `cycle`: the id of the blossom that representative was base of, or
// kNoBlossom for a plain vertex.
struct Blossom {
  int id = 0;
  Vertex base = kNoVertex;
  EdgeId bridge = kNoEdge;  // the even-even edge that closed the cycle
  std::vector<Vertex> cycle;
  std::vector<int> children;
};

/// One augmenting-path search at a fixed priority on a general graph. Grows
/// alternating trees from every unmatched vertex of that priority, shrinking
/// odd cycles into blossoms as they close. run() stops at the first path that
/// either ends unmatched or ends, after an even number of edges, at a matched
/// vertex of numerically larger priority. One-shot: construct, run() once,
/// then inspect the final structures.
///
/// Labels and parent edges are frozen at reach time; vertices swallowed by a
/// blossom keep them. The effective state of a vertex lives at outer(v), the
/// base of the outermost blossom holding it. Paths through blossoms are
/// recovered from the frozen labels plus one recorded bridge per cycle vertex
/// that turned even when its cycle closed.
class BlossomSearch {
 public:
  BlossomSearch(const Graph& g, const Matching& m, int priority, TraceSink* sink = nullptr);
  std::optional<AugPath> run();

  int priority() const { return priority_; }
  Vertex outer(Vertex v) const { return origin_[dsu_.find(v)]; }
  Label label(Vertex v) const { return label_[outer(v)]; }  // effective label
  Label raw_label(Vertex v) const { return label_[v]; }     // label at reach time
  bool in_blossom(Vertex v) const { return in_blossom_[v] != 0; }
  EdgeId parent_edge(Vertex v) const { return parent_edge_[v]; }
  Vertex tree_root(Vertex v) const;  // v must be reached
  const std::vector<Blossom>& blossoms() const { return blossoms_; }
  const std::vector<Vertex>& roots() const { return roots_; }
  const Graph& graph() const { return g_; }
  const Matching& matching() const { return m_; }

 private:
  struct Bridge {
    EdgeId edge = kNoEdge;
    Vertex side = kNoVertex;  // closing-edge endpoint under this cycle vertex
  };

  // Parent of a representative in the shrunken forest; kNoVertex at roots.
  Vertex rep_parent(Vertex r) const;
  // Meeting representative of the two chains, kNoVertex for distinct trees.
  Vertex nearest_common_ancestor(Vertex ra, Vertex rb);
  // Shrinks the cycle closed by e = (u, v), or returns a path if the cycle
  // holds a vertex worth finishing at.
  std::optional<AugPath> close_cycle(EdgeId e, Vertex u, Vertex v, Vertex anc);

  // Appends the edges of the alternating path from a up to ancestor b;
  // rev flips the appended order (b down to a).
  void trace_up(Vertex a, Vertex b, bool rev, std::vector<EdgeId>& out) const;
  AugPath expand_to_root(Vertex t) const;  // path root .. t
  void emit(EdgeId e, Vertex u, Vertex v, StepKind kind);

  const Graph& g_;
  const Matching& m_;
  int priority_;
  TraceSink* sink_;
  std::vector<Label> label_;
  std::vector<EdgeId> parent_edge_;
  mutable DisjointSets dsu_;
  std::vector<Vertex> origin_;      // per DSU root: base vertex of the class
  std::vector<char> in_blossom_;
  std::vector<Bridge> bridge_;      // per cycle vertex that turned even
  std::vector<int> rep_blossom_;    // per vertex: blossom it is base of
  std::vector<Blossom> blossoms_;
  std::vector<Vertex> roots_;
  std::deque<EdgeId> queue_;
  std::vector<char> nca_mark_;
  std::vector<Vertex> nca_touched_;
  int seq_ = 0;
};

std::optional<AugPath> find_augmenting_path(const Graph& g, const Matching& m, int priority,
                                            TraceSink* sink = nullptr);

// After a failed search, verifies the five structural properties of the final
// shrunken forest (root shape, matched-edge shape, blossom interiors, no
// even-even edge across classes, priority bound on even vertices).
std::optional<InvariantViolation> check_failure_invariants(const BlossomSearch& s);

}  // namespace mpm
