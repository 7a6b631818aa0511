#include "mpm/blossom.hpp"

#include <algorithm>
#include <cassert>

namespace mpm {

BlossomSearch::BlossomSearch(const Graph& g, const Matching& m, int priority, TraceSink* sink)
    : g_(g),
      m_(m),
      priority_(priority),
      sink_(sink),
      label_(g.vertex_count() + 1, Label::Unreached),
      parent_edge_(g.vertex_count() + 1, kNoEdge),
      dsu_(g.vertex_count() + 1),
      origin_(g.vertex_count() + 1),
      in_blossom_(g.vertex_count() + 1, 0),
      bridge_(g.vertex_count() + 1),
      rep_blossom_(g.vertex_count() + 1, kNoBlossom),
      nca_mark_(g.vertex_count() + 1, 0) {
  for (Vertex v = 1; v <= g_.vertex_count(); ++v) origin_[v] = v;
  for (Vertex v = 1; v <= g_.vertex_count(); ++v) {
    if (!m_.is_matched(v) && g_.priority(v) == priority_) {
      label_[v] = Label::Even;
      roots_.push_back(v);
    }
  }
  for (Vertex r : roots_)
    for (EdgeId e : g_.incident_edges(r)) queue_.push_back(e);
}

Vertex BlossomSearch::rep_parent(Vertex r) const {
  EdgeId e = parent_edge_[r];
  return e == kNoEdge ? kNoVertex : outer(g_.other_endpoint(e, r));
}

Vertex BlossomSearch::tree_root(Vertex v) const {
  Vertex r = outer(v);
  for (Vertex p = rep_parent(r); p != kNoVertex; p = rep_parent(r)) r = p;
  return r;
}

Vertex BlossomSearch::nearest_common_ancestor(Vertex ra, Vertex rb) {
  Vertex result = kNoVertex;
  Vertex a = ra, b = rb;
  while (a != kNoVertex || b != kNoVertex) {
    if (a != kNoVertex) {
      if (nca_mark_[a]) {
        result = a;
        break;
      }
      nca_mark_[a] = 1;
      nca_touched_.push_back(a);
      a = rep_parent(a);
    }
    std::swap(a, b);  // advance the chains alternately
  }
  for (Vertex x : nca_touched_) nca_mark_[x] = 0;
  nca_touched_.clear();
  return result;
}

void BlossomSearch::emit(EdgeId e, Vertex u, Vertex v, StepKind kind) {
  if (sink_) sink_->step(EdgeEvent{seq_++, e, u, v, kind}, *this);
}

void BlossomSearch::trace_up(Vertex a, Vertex b, bool rev, std::vector<EdgeId>& out) const {
  if (a == b) return;
  if (label_[a] == Label::Even) {
    EdgeId me = parent_edge_[a];  // the matching edge of a
    assert(me != kNoEdge && me == m_.matched_edge(a));
    Vertex p = g_.other_endpoint(me, a);
    if (p == b) {  // odd target: the path ends on this matching edge
      out.push_back(me);
      return;
    }
    EdgeId pe = parent_edge_[p];
    assert(pe != kNoEdge);
    Vertex c = g_.other_endpoint(pe, p);
    if (rev) {
      trace_up(c, b, true, out);
      out.push_back(pe);
      out.push_back(me);
    } else {
      out.push_back(me);
      out.push_back(pe);
      trace_up(c, b, false, out);
    }
  } else {
    // a turned even inside a cycle: descend to the closing edge, cross it,
    // climb from the far endpoint.
    assert(label_[a] == Label::Odd && bridge_[a].edge != kNoEdge);
    EdgeId e = bridge_[a].edge;
    Vertex s = bridge_[a].side;
    Vertex t = g_.other_endpoint(e, s);
    if (rev) {
      trace_up(t, b, true, out);
      out.push_back(e);
      trace_up(s, a, false, out);
    } else {
      trace_up(s, a, true, out);
      out.push_back(e);
      trace_up(t, b, false, out);
    }
  }
}

AugPath BlossomSearch::expand_to_root(Vertex t) const {
  AugPath p;
  trace_up(t, tree_root(t), /*rev=*/true, p.edges);
  Vertex v = tree_root(t);
  p.vertices.push_back(v);
  for (EdgeId e : p.edges) {
    v = g_.other_endpoint(e, v);
    p.vertices.push_back(v);
  }
  assert(p.vertices.back() == t);
  return p;
}

std::optional<AugPath> BlossomSearch::close_cycle(EdgeId e, Vertex u, Vertex v, Vertex anc) {
  std::vector<Vertex> side_u, side_v;
  for (Vertex r = outer(u); r != anc; r = rep_parent(r)) side_u.push_back(r);
  for (Vertex r = outer(v); r != anc; r = rep_parent(r)) side_v.push_back(r);
  for (Vertex x : side_u)
    if (label_[x] == Label::Odd) bridge_[x] = Bridge{e, u};
  for (Vertex x : side_v)
    if (label_[x] == Label::Odd) bridge_[x] = Bridge{e, v};

  // A cycle vertex of larger priority number turns even now; stopping there
  // trades it for the root. Vertices already even were vetted when reached.
  for (const auto* side : {&side_u, &side_v})
    for (Vertex x : *side)
      if (label_[x] == Label::Odd && g_.priority(x) > priority_) {
        emit(e, u, v, StepKind::BlossomPath);
        return expand_to_root(x);
      }

  emit(e, u, v, StepKind::Blossom);
  Blossom b;
  b.id = static_cast<int>(blossoms_.size());
  b.base = anc;
  b.bridge = e;
  b.cycle.push_back(anc);
  b.cycle.insert(b.cycle.end(), side_u.rbegin(), side_u.rend());
  b.cycle.insert(b.cycle.end(), side_v.begin(), side_v.end());
  for (Vertex x : b.cycle) b.children.push_back(rep_blossom_[x]);

  for (Vertex x : b.cycle) {
    in_blossom_[x] = 1;
    dsu_.unite(anc, x);
  }
  origin_[dsu_.find(anc)] = anc;  // after the unions: the DSU root moved
  rep_blossom_[anc] = b.id;

  // Tree edges of a cycle vertex stay inside the cycle; everything else on a
  // vertex that just turned even becomes eligible.
  for (const auto* side : {&side_u, &side_v})
    for (Vertex x : *side)
      if (label_[x] == Label::Odd)
        for (EdgeId f : g_.incident_edges(x))
          if (f != parent_edge_[x] && f != m_.matched_edge(x)) queue_.push_back(f);

  blossoms_.push_back(std::move(b));
  if (sink_) sink_->blossom_formed(blossoms_.back(), *this);
  return std::nullopt;
}

std::optional<AugPath> BlossomSearch::run() {
  auto finish = [&](std::optional<AugPath> p) {
    if (sink_) sink_->search_finished(*this, p);
    return p;
  };
  while (!queue_.empty()) {
    EdgeId e = queue_.front();
    queue_.pop_front();
    Vertex a = g_.edge(e).u, b = g_.edge(e).v;
    Vertex ra = outer(a), rb = outer(b);
    if (ra == rb) {  // swallowed by one blossom since it was queued
      emit(e, a, b, StepKind::Ignore);
      continue;
    }
    Vertex u, v;
    if (label_[ra] == Label::Even) {
      u = a;
      v = b;
    } else if (label_[rb] == Label::Even) {
      u = b;
      v = a;
    } else {
      emit(e, a, b, StepKind::Ignore);  // defensive; queued edges keep an even end
      continue;
    }
    Vertex rv = outer(v);
    switch (label_[rv]) {
      case Label::Unreached: {
        if (m_.is_matched(v)) {
          Vertex w = *m_.mate(v);
          EdgeId me = m_.matched_edge(v);
          assert(label_[w] == Label::Unreached);
          label_[v] = Label::Odd;
          parent_edge_[v] = e;
          label_[w] = Label::Even;
          parent_edge_[w] = me;
          if (g_.priority(w) > priority_) {
            emit(e, u, v, StepKind::FoundPath);
            return finish(expand_to_root(w));
          }
          emit(e, u, v, StepKind::Grow);
          for (EdgeId f : g_.incident_edges(w))
            if (f != me) queue_.push_back(f);
        } else {
          emit(e, u, v, StepKind::FoundPath);
          AugPath p = expand_to_root(u);
          p.edges.push_back(e);
          p.vertices.push_back(v);
          return finish(p);
        }
        break;
      }
      case Label::Even: {
        Vertex anc = nearest_common_ancestor(outer(u), rv);
        if (anc == kNoVertex) {
          emit(e, u, v, StepKind::CrossPath);
          AugPath left = expand_to_root(u);
          AugPath right = expand_to_root(v);
          left.edges.push_back(e);
          left.vertices.insert(left.vertices.end(), right.vertices.rbegin(),
                               right.vertices.rend());
          left.edges.insert(left.edges.end(), right.edges.rbegin(), right.edges.rend());
          return finish(left);
        }
        if (auto p = close_cycle(e, u, v, anc)) return finish(std::move(p));
        break;
      }
      case Label::Odd:
        emit(e, u, v, StepKind::Ignore);
        break;
    }
  }
  return finish(std::nullopt);
}

std::optional<AugPath> find_augmenting_path(const Graph& g, const Matching& m, int priority,
                                            TraceSink* sink) {
  return BlossomSearch(g, m, priority, sink).run();
}

std::optional<InvariantViolation> check_failure_invariants(const BlossomSearch& s) {
  const Graph& g = s.graph();
  const Matching& m = s.matching();
  std::vector<char> is_root(g.vertex_count() + 1, 0);
  for (Vertex r : s.roots()) is_root[r] = 1;

  for (Vertex r : s.roots())
    if (m.is_matched(r) || g.priority(r) != s.priority())
      return InvariantViolation{1, "bad root " + std::to_string(r)};
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    if (s.raw_label(v) != Label::Unreached && !m.is_matched(v) && !is_root[v])
      return InvariantViolation{1, "second unmatched vertex " + std::to_string(v) + " in a tree"};

  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!m.contains(e)) continue;
    Vertex a = g.edge(e).u, b = g.edge(e).v;
    Label la = s.raw_label(a), lb = s.raw_label(b);
    if (la == Label::Unreached && lb == Label::Unreached) continue;
    Vertex even = la == Label::Even ? a : b;
    Vertex odd = g.other_endpoint(e, even);
    if (s.raw_label(even) != Label::Even || s.raw_label(odd) != Label::Odd ||
        s.parent_edge(even) != e)
      return InvariantViolation{2, "matching edge " + std::to_string(e) + " not odd->even"};
  }

  for (Vertex x = 1; x <= g.vertex_count(); ++x) {
    if (!s.in_blossom(x)) continue;
    if (s.label(x) != Label::Even)
      return InvariantViolation{3, "blossom vertex " + std::to_string(x) + " not even"};
    if (!m.is_matched(x) && m.is_matched(s.outer(x)))
      return InvariantViolation{3, "unmatched vertex " + std::to_string(x) +
                                       " inside a blossom with a matched base"};
  }

  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Vertex a = g.edge(e).u, b = g.edge(e).v;
    if (s.label(a) == Label::Even && s.label(b) == Label::Even && s.outer(a) != s.outer(b))
      return InvariantViolation{4, "even-even edge " + std::to_string(e) + " between classes"};
  }

  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    if (s.label(v) == Label::Even && g.priority(v) > s.priority())
      return InvariantViolation{5, "even vertex " + std::to_string(v) + " with priority " +
                                       std::to_string(g.priority(v))};
  return std::nullopt;
}

}  // namespace mpm
