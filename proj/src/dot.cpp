#include "mpm/dot.hpp"

#include <fstream>
#include <ostream>
#include <vector>

namespace mpm {

namespace {

void write_vertex(std::ostream& out, const Graph& g, Vertex v, const BlossomSearch* s,
                  int depth) {
  std::string mark;
  if (s) {
    if (s->raw_label(v) == Label::Even) mark = "+";
    if (s->raw_label(v) == Label::Odd) mark = "-";
  }
  out << std::string(2 * depth, ' ') << 'v' << v << " [label=\"" << v << ':' << g.priority(v)
      << mark << "\"];\n";
}

void write_cluster(std::ostream& out, const BlossomSearch& s, int id, int depth) {
  const Blossom& b = s.blossoms()[id];
  std::string pad(2 * depth, ' ');
  out << pad << "subgraph cluster_b" << b.id << " {\n";
  out << pad << "  label=\"B" << b.id << "\";\n";
  for (size_t k = 0; k < b.cycle.size(); ++k) {
    if (b.children[k] == kNoBlossom)
      write_vertex(out, s.graph(), b.cycle[k], &s, depth + 1);
    else
      write_cluster(out, s, b.children[k], depth + 1);
  }
  out << pad << "}\n";
}

void write_edges(std::ostream& out, const Graph& g, const Matching& m) {
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << "  v" << g.edge(e).u << " -- v" << g.edge(e).v;
    if (m.contains(e)) out << " [style=bold]";
    out << ";\n";
  }
}

}  // namespace

void write_matching_dot(std::ostream& out, const Graph& g, const Matching& m) {
  out << "graph matching {\n  node [shape=circle];\n";
  for (Vertex v = 1; v <= g.vertex_count(); ++v) write_vertex(out, g, v, nullptr, 1);
  write_edges(out, g, m);
  out << "}\n";
}

void write_forest_dot(std::ostream& out, const BlossomSearch& s) {
  const Graph& g = s.graph();
  out << "graph forest {\n  node [shape=circle];\n";
  std::vector<char> nested(s.blossoms().size(), 0);
  for (const Blossom& b : s.blossoms())
    for (int child : b.children)
      if (child != kNoBlossom) nested[child] = 1;
  for (const Blossom& b : s.blossoms())
    if (!nested[b.id]) write_cluster(out, s, b.id, 1);
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    if (!s.in_blossom(v)) write_vertex(out, g, v, &s, 1);
  write_edges(out, g, s.matching());
  out << "}\n";
}

void DotForestSink::search_finished(const BlossomSearch& s, const std::optional<AugPath>&) {
  std::ofstream out(prefix_ + "-" + std::to_string(count_++) + ".dot");
  write_forest_dot(out, s);
}

}  // namespace mpm
