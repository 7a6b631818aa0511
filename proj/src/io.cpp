#include "mpm/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace mpm {

namespace {

// Line scanner: strips comments, splits tags, rejects trailing tokens.
struct LineReader {
  explicit LineReader(std::istream& s) : in(s) {}

  std::istream& in;
  int line_no = 0;
  std::istringstream tokens;

  bool next(std::string& tag) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      tokens.clear();
      tokens.str(line);
      if (tokens >> tag) return true;
    }
    return false;
  }

  template <typename T>
  T want(const std::string& usage) {
    T value;
    if (!(tokens >> value)) throw ParseError(line_no, "expected " + usage);
    return value;
  }

  void done() {
    std::string extra;
    if (tokens >> extra) throw ParseError(line_no, "unexpected token '" + extra + "'");
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(line_no, what); }
};

}  // namespace

Graph parse_graph(std::istream& in) {
  LineReader r{in};
  std::string tag;
  bool have_header = false;
  int n = 0;
  long long m = 0;
  std::vector<std::optional<int>> prio;
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;

  while (r.next(tag)) {
    if (tag == "p") {
      if (have_header) r.fail("duplicate header");
      if (r.want<std::string>("'p mpm <n> <m>'") != "mpm") r.fail("expected 'p mpm <n> <m>'");
      n = r.want<int>("vertex count");
      m = r.want<long long>("edge count");
      r.done();
      if (n < 0) r.fail("negative vertex count");
      if (m < 0) r.fail("negative edge count");
      have_header = true;
      prio.assign(n + 1, std::nullopt);
      edges.reserve(static_cast<size_t>(m));
    } else if (tag == "v") {
      if (!have_header) r.fail("'v' line before the 'p mpm' header");
      int id = r.want<int>("'v <id> <priority>'");
      int p = r.want<int>("'v <id> <priority>'");
      r.done();
      if (id < 1 || id > n) r.fail("vertex id " + std::to_string(id) + " out of 1.." +
                                   std::to_string(n));
      if (p < 1 || p > n) r.fail("priority " + std::to_string(p) + " out of 1.." +
                                 std::to_string(n));
      if (prio[id]) r.fail("second priority for vertex " + std::to_string(id));
      prio[id] = p;
    } else if (tag == "e") {
      if (!have_header) r.fail("'e' line before the 'p mpm' header");
      int u = r.want<int>("'e <u> <v>'");
      int v = r.want<int>("'e <u> <v>'");
      r.done();
      if (u < 1 || u > n || v < 1 || v > n) r.fail("endpoint out of 1.." + std::to_string(n));
      if (u == v) r.fail("self-loop at vertex " + std::to_string(u));
      if (!seen.insert(std::minmax(u, v)).second)
        r.fail("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
      if (static_cast<long long>(edges.size()) == m) r.fail("more edges than the header's m");
      edges.push_back(Edge{u, v});
    } else {
      r.fail("unknown line tag '" + tag + "'");
    }
  }
  if (!have_header) throw ParseError(0, "missing 'p mpm <n> <m>' header");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(0, "header promises " + std::to_string(m) + " edges, file has " +
                            std::to_string(edges.size()));

  std::vector<int> priorities(n);
  for (Vertex v = 1; v <= n; ++v) priorities[v - 1] = prio[v].value_or(n);
  return Graph::build(n, std::move(edges), std::move(priorities));
}

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Graph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_graph(in);
}

std::string render_graph(const Graph& g) {
  std::ostringstream out;
  out << "p mpm " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    out << "v " << v << ' ' << g.priority(v) << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

MatchingDoc parse_matching(std::istream& in) {
  LineReader r{in};
  std::string tag;
  MatchingDoc doc;
  bool have_score = false;
  while (r.next(tag)) {
    if (tag == "s") {
      if (have_score) r.fail("second score line");
      if (!doc.edges.empty()) r.fail("score line after an 'm' line");
      int d;
      while (r.tokens >> d) doc.score.push_back(d);
      if (!r.tokens.eof()) r.fail("non-numeric score digit");
      have_score = true;
    } else if (tag == "m") {
      if (!have_score) r.fail("'m' line before the score line");
      int u = r.want<int>("'m <u> <v>'");
      int v = r.want<int>("'m <u> <v>'");
      r.done();
      doc.edges.push_back(Edge{u, v});
    } else {
      r.fail("unknown line tag '" + tag + "'");
    }
  }
  if (!have_score) throw ParseError(0, "missing 's <digits>' score line");
  return doc;
}

MatchingDoc parse_matching_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_matching(in);
}

std::string render_matching(const Graph& g, const Matching& m) {
  std::ostringstream out;
  ScoreVector score = priority_score(g, m);
  out << 's';
  for (int d : score.digits()) out << ' ' << d;
  out << '\n';
  for (EdgeId e : m.edge_ids()) out << "m " << g.edge(e).u << ' ' << g.edge(e).v << '\n';
  return out.str();
}

std::optional<std::string> verify_matching_doc(const Graph& g, const MatchingDoc& doc,
                                               Matching* out) {
  std::vector<EdgeId> ids;
  for (const Edge& e : doc.edges) {
    if (e.u < 1 || e.u > g.vertex_count() || e.v < 1 || e.v > g.vertex_count())
      return "endpoint out of range in edge " + std::to_string(e.u) + "-" + std::to_string(e.v);
    auto id = g.find_edge(e.u, e.v);
    if (!id) return "graph has no edge " + std::to_string(e.u) + "-" + std::to_string(e.v);
    ids.push_back(*id);
  }
  MatchingCheck check = is_valid_matching(g, ids);
  if (!check.valid)
    return "vertex " + std::to_string(check.conflict) + " is matched more than once";
  Matching m = make_matching(g, ids);
  if (static_cast<int>(doc.score.size()) != g.vertex_count())
    return "score line has " + std::to_string(doc.score.size()) + " digits, expected " +
           std::to_string(g.vertex_count());
  ScoreVector actual = priority_score(g, m);
  if (ScoreVector(doc.score) != actual)
    return "score line says " + ScoreVector(doc.score).render() + ", matching scores " +
           actual.render();
  if (out) *out = std::move(m);
  return std::nullopt;
}

VertexSet parse_vertex_set(std::istream& in, const Graph& g) {
  LineReader r{in};
  VertexSet set(g.vertex_count() + 1, 0);
  std::string tok;
  while (r.next(tok)) {
    do {
      int v;
      std::istringstream one(tok);
      if (!(one >> v) || !one.eof()) r.fail("expected a vertex id, got '" + tok + "'");
      if (v < 1 || v > g.vertex_count())
        r.fail("vertex id " + std::to_string(v) + " out of 1.." +
               std::to_string(g.vertex_count()));
      set[v] = 1;
    } while (r.tokens >> tok);
  }
  return set;
}

VertexSet parse_vertex_set_file(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_vertex_set(in, g);
}

PrioritySpec PrioritySpec::parse(const std::string& text) {
  auto list_of = [&](const std::string& body) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(body);
    while (std::getline(in, cur, ',')) parts.push_back(cur);
    return parts;
  };
  auto as_int = [&](const std::string& s, const char* what) {
    std::istringstream in(s);
    int v;
    if (!(in >> v) || !in.eof() || v < 1)
      throw ParseError(0, std::string("bad ") + what + " '" + s + "' in priority spec");
    return v;
  };

  PrioritySpec spec;
  if (text == "uniform") return spec;
  if (text == "distinct") {
    spec.kind = Kind::Distinct;
    return spec;
  }
  if (text.starts_with("uniform:")) {
    spec.kind = Kind::UniformList;
    for (const std::string& part : list_of(text.substr(8)))
      spec.values.push_back(as_int(part, "priority"));
    if (spec.values.empty()) throw ParseError(0, "empty priority list in '" + text + "'");
    return spec;
  }
  if (text.starts_with("weights:")) {
    spec.kind = Kind::Weights;
    for (const std::string& part : list_of(text.substr(8))) {
      auto eq = part.find('=');
      if (eq == std::string::npos)
        throw ParseError(0, "expected <priority>=<weight>, got '" + part + "'");
      spec.weights.emplace_back(as_int(part.substr(0, eq), "priority"),
                                as_int(part.substr(eq + 1), "weight"));
    }
    if (spec.weights.empty()) throw ParseError(0, "empty weight list in '" + text + "'");
    return spec;
  }
  throw ParseError(0, "unknown priority spec '" + text + "'");
}

std::string PrioritySpec::to_string() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::Uniform: return "uniform";
    case Kind::Distinct: return "distinct";
    case Kind::UniformList:
      out << "uniform:";
      for (size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
      return out.str();
    case Kind::Weights:
      out << "weights:";
      for (size_t i = 0; i < weights.size(); ++i)
        out << (i ? "," : "") << weights[i].first << '=' << weights[i].second;
      return out.str();
  }
  return "?";
}

std::uint64_t Rng::bounded(std::uint64_t n) {
  if (n < 2) return 0;
  std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t limit = max - max % n;  // multiple of n; reject the tail above it
  std::uint64_t x;
  do {
    x = gen_();
  } while (x >= limit);
  return x % n;
}

namespace {

std::vector<int> random_priorities(int n, const PrioritySpec& spec, Rng& rng) {
  std::vector<int> prio(n);
  switch (spec.kind) {
    case PrioritySpec::Kind::Uniform:
      for (int& p : prio) p = 1 + static_cast<int>(rng.bounded(n));
      break;
    case PrioritySpec::Kind::UniformList:
      for (int v : spec.values)
        if (v > n) throw Error("priority " + std::to_string(v) + " exceeds n");
      for (int& p : prio) p = spec.values[rng.bounded(spec.values.size())];
      break;
    case PrioritySpec::Kind::Weights: {
      long long total = 0;
      for (auto [v, w] : spec.weights) {
        if (v > n) throw Error("priority " + std::to_string(v) + " exceeds n");
        total += w;
      }
      for (int& p : prio) {
        long long pick = static_cast<long long>(rng.bounded(total));
        for (auto [v, w] : spec.weights) {
          pick -= w;
          if (pick < 0) {
            p = v;
            break;
          }
        }
      }
      break;
    }
    case PrioritySpec::Kind::Distinct: {
      for (int i = 0; i < n; ++i) prio[i] = i + 1;
      for (int i = n - 1; i > 0; --i)
        std::swap(prio[i], prio[rng.bounded(static_cast<std::uint64_t>(i) + 1)]);
      break;
    }
  }
  return prio;
}

}  // namespace

Graph generate_random(int n, int m, std::uint64_t seed, const PrioritySpec& spec) {
  if (n < 0) throw Error("negative vertex count");
  long long total = static_cast<long long>(n) * (n - 1) / 2;
  if (m < 0 || m > total)
    throw Error("cannot fit " + std::to_string(m) + " edges in a simple graph on " +
                std::to_string(n) + " vertices");
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(m);
  if (2LL * m <= total) {
    std::set<std::pair<Vertex, Vertex>> seen;
    while (static_cast<int>(edges.size()) < m) {
      Vertex u = 1 + static_cast<int>(rng.bounded(n));
      Vertex v = 1 + static_cast<int>(rng.bounded(n));
      if (u == v) continue;
      auto key = std::minmax(u, v);
      if (!seen.insert(key).second) continue;
      edges.push_back(Edge{key.first, key.second});
    }
  } else {
    std::vector<Edge> all;
    all.reserve(static_cast<size_t>(total));
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = u + 1; v <= n; ++v) all.push_back(Edge{u, v});
    for (int i = 0; i < m; ++i) {
      auto j = i + rng.bounded(all.size() - i);
      std::swap(all[i], all[j]);
      edges.push_back(all[i]);
    }
  }
  return Graph::build(n, std::move(edges), random_priorities(n, spec, rng));
}

}  // namespace mpm
