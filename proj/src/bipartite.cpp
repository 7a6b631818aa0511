#include "mpm/bipartite.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace mpm {

BipartiteSearch::BipartiteSearch(const Graph& g, const Matching& m, const VertexSet& targets,
                                 TraceSink* sink)
    : g_(g),
      m_(m),
      targets_(targets),
      sink_(sink),
      label_(g.vertex_count() + 1, Label::Unreached),
      parent_edge_(g.vertex_count() + 1, kNoEdge) {
  for (Vertex v = 1; v <= g_.vertex_count(); ++v) {
    if (!m_.is_matched(v) && targets_[v]) {
      label_[v] = Label::Even;
      roots_.push_back(v);
    }
  }
  for (Vertex r : roots_)
    for (EdgeId e : g_.incident_edges(r)) queue_.push_back(e);
}

Vertex BipartiteSearch::parent(Vertex v) const {
  EdgeId e = parent_edge_[v];
  return e == kNoEdge ? kNoVertex : g_.other_endpoint(e, v);
}

Vertex BipartiteSearch::tree_root(Vertex v) const {
  while (parent_edge_[v] != kNoEdge) v = g_.other_endpoint(parent_edge_[v], v);
  return v;
}

void BipartiteSearch::emit(EdgeId e, Vertex u, Vertex v, StepKind kind) {
  if (sink_) sink_->step(EdgeEvent{seq_++, e, u, v, kind}, *this);
}

AugPath BipartiteSearch::to_root(Vertex from) const {
  AugPath p;
  Vertex v = from;
  p.vertices.push_back(v);
  while (parent_edge_[v] != kNoEdge) {
    p.edges.push_back(parent_edge_[v]);
    v = g_.other_endpoint(parent_edge_[v], v);
    p.vertices.push_back(v);
  }
  std::reverse(p.vertices.begin(), p.vertices.end());
  std::reverse(p.edges.begin(), p.edges.end());
  return p;
}

AugPath BipartiteSearch::unmatched_endpoint_path(Vertex u, Vertex, EdgeId e) const {
  AugPath p = to_root(u);
  p.edges.push_back(e);
  p.vertices.push_back(g_.other_endpoint(e, u));
  return p;
}

AugPath BipartiteSearch::cross_tree_path(Vertex u, Vertex v, EdgeId e) const {
  AugPath left = to_root(u);
  AugPath right = to_root(v);
  left.edges.push_back(e);
  left.vertices.insert(left.vertices.end(), right.vertices.rbegin(), right.vertices.rend());
  left.edges.insert(left.edges.end(), right.edges.rbegin(), right.edges.rend());
  return left;
}

std::optional<AugPath> BipartiteSearch::run() {
  auto finish = [&](std::optional<AugPath> p) {
    if (sink_) sink_->search_finished(*this, p);
    return p;
  };
  while (!queue_.empty()) {
    EdgeId e = queue_.front();
    queue_.pop_front();
    Vertex a = g_.edge(e).u, b = g_.edge(e).v;
    Vertex u, v;
    if (label_[a] == Label::Even) {
      u = a;
      v = b;
    } else if (label_[b] == Label::Even) {
      u = b;
      v = a;
    } else {
      emit(e, a, b, StepKind::Ignore);
      continue;
    }
    switch (label_[v]) {
      case Label::Unreached: {
        if (m_.is_matched(v)) {
          Vertex w = *m_.mate(v);
          EdgeId me = m_.matched_edge(v);
          assert(label_[w] == Label::Unreached);
          label_[v] = Label::Odd;
          parent_edge_[v] = e;
          label_[w] = Label::Even;
          parent_edge_[w] = me;
          if (!targets_[w]) {
            emit(e, u, v, StepKind::EvenPath);
            return finish(to_root(w));
          }
          emit(e, u, v, StepKind::Grow);
          for (EdgeId f : g_.incident_edges(w))
            if (f != me) queue_.push_back(f);
        } else {
          emit(e, u, v, StepKind::OddPath);
          return finish(unmatched_endpoint_path(u, v, e));
        }
        break;
      }
      case Label::Even: {
        // Bipartiteness puts even vertices of one tree on one side, so an
        // even-even edge always joins two trees.
        if (tree_root(u) == tree_root(v))
          throw std::logic_error("even-even edge inside one tree of a bipartite graph");
        emit(e, u, v, StepKind::OddPath);
        return finish(cross_tree_path(u, v, e));
      }
      case Label::Odd:
        emit(e, u, v, StepKind::Ignore);
        break;
    }
  }
  return finish(std::nullopt);
}

std::optional<AugPath> find_set_augmenting_path(const Graph& g, const Matching& m,
                                                const VertexSet& targets, TraceSink* sink) {
  if (!g.bipartition()) throw NotBipartiteError("graph contains an odd cycle");
  return BipartiteSearch(g, m, targets, sink).run();
}

std::optional<InvariantViolation> check_failure_invariants(const BipartiteSearch& s) {
  const Graph& g = s.graph();
  const Matching& m = s.matching();
  const VertexSet& targets = s.targets();
  std::vector<char> is_root(g.vertex_count() + 1, 0);
  for (Vertex r : s.roots()) is_root[r] = 1;

  for (Vertex r : s.roots())
    if (m.is_matched(r) || !targets[r])
      return InvariantViolation{1, "bad root " + std::to_string(r)};
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    if (s.label(v) != Label::Unreached && !m.is_matched(v) && !is_root[v])
      return InvariantViolation{1, "second unmatched vertex " + std::to_string(v) + " in a tree"};

  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!m.contains(e)) continue;
    Vertex a = g.edge(e).u, b = g.edge(e).v;
    Label la = s.label(a), lb = s.label(b);
    if (la == Label::Unreached && lb == Label::Unreached) continue;
    Vertex even = la == Label::Even ? a : b;
    Vertex odd = g.other_endpoint(e, even);
    if (s.label(even) != Label::Even || s.label(odd) != Label::Odd ||
        s.parent_edge(even) != e)
      return InvariantViolation{2, "matching edge " + std::to_string(e) + " not odd->even"};
  }

  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Vertex a = g.edge(e).u, b = g.edge(e).v;
    Label la = s.label(a), lb = s.label(b);
    bool a_in = la != Label::Unreached, b_in = lb != Label::Unreached;
    if (a_in && b_in && s.tree_root(a) == s.tree_root(b)) {
      if (!((la == Label::Odd && lb == Label::Even) || (la == Label::Even && lb == Label::Odd)))
        return InvariantViolation{3, "intra-tree edge " + std::to_string(e) + " not odd-even"};
    }
    if ((a_in || b_in) && la != Label::Odd && lb != Label::Odd)
      return InvariantViolation{4, "edge " + std::to_string(e) + " touches a tree, no odd end"};
  }

  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    if (s.label(v) == Label::Even && !targets[v])
      return InvariantViolation{5, "even vertex " + std::to_string(v) + " outside target set"};
  return std::nullopt;
}

}  // namespace mpm
