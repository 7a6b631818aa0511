#include "mpm/augpath.hpp"

#include <stdexcept>
#include <vector>

namespace mpm {

std::optional<std::string> check_alternating_structure(const Graph& g, const Matching& m,
                                                       const AugPath& p) {
  const auto& vs = p.vertices;
  const auto& es = p.edges;
  if (vs.size() < 2) return "path needs at least two vertices";
  if (es.size() + 1 != vs.size()) return "edge count does not fit vertex count";
  std::vector<char> seen(g.vertex_count() + 1, 0);
  for (Vertex v : vs) {
    if (v < 1 || v > g.vertex_count()) return "vertex " + std::to_string(v) + " out of range";
    if (seen[v]) return "vertex " + std::to_string(v) + " repeated";
    seen[v] = 1;
  }
  for (size_t k = 0; k < es.size(); ++k) {
    EdgeId e = es[k];
    if (e < 0 || e >= g.edge_count()) return "edge id " + std::to_string(e) + " out of range";
    const Edge& ed = g.edge(e);
    if (!((ed.u == vs[k] && ed.v == vs[k + 1]) || (ed.v == vs[k] && ed.u == vs[k + 1])))
      return "edge " + std::to_string(e) + " does not join step " + std::to_string(k);
  }
  if (m.is_matched(vs.front())) return "first vertex is matched";
  for (size_t k = 0; k < es.size(); ++k) {
    bool want_matched = (k % 2 == 1);
    if (m.contains(es[k]) != want_matched)
      return "alternation breaks at edge position " + std::to_string(k);
  }
  // A matched endpoint must shed its old edge via the path itself.
  if (m.is_matched(vs.back()) != m.contains(es.back()))
    return "final vertex matchedness inconsistent with last edge";
  return std::nullopt;
}

std::optional<std::string> check_priority_path(const Graph& g, const Matching& m,
                                               const AugPath& p, int priority) {
  if (auto err = check_alternating_structure(g, m, p)) return err;
  if (g.priority(p.vertices.front()) != priority)
    return "first vertex priority " + std::to_string(g.priority(p.vertices.front())) +
           " != " + std::to_string(priority);
  Vertex last = p.vertices.back();
  if (m.is_matched(last) && g.priority(last) <= priority)
    return "matched final vertex has priority " + std::to_string(g.priority(last));
  return std::nullopt;
}

std::optional<std::string> check_set_path(const Graph& g, const Matching& m, const AugPath& p,
                                          const VertexSet& targets) {
  if (auto err = check_alternating_structure(g, m, p)) return err;
  if (!targets[p.vertices.front()]) return "first vertex outside the target set";
  Vertex last = p.vertices.back();
  if (m.is_matched(last) && targets[last]) return "matched final vertex inside the target set";
  return std::nullopt;
}

Matching augment(const Graph& g, Matching m, const AugPath& p) {
  if (auto err = check_alternating_structure(g, m, p))
    throw std::invalid_argument("refusing to augment: " + *err);
  for (EdgeId e : p.edges)
    if (m.contains(e)) m.remove(g, e);
  for (size_t k = 0; k < p.edges.size(); k += 2) m.add(g, p.edges[k]);
  return m;
}

}  // namespace mpm
