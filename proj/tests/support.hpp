#pragma once
// Fixtures and helpers shared by the test binaries.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mpm/augpath.hpp"
#include "mpm/bipartite.hpp"
#include "mpm/blossom.hpp"
#include "mpm/graph.hpp"
#include "mpm/io.hpp"
#include "mpm/trace.hpp"

namespace testutil {

using namespace mpm;

struct Instance {
  Graph g;
  Matching m;
  VertexSet targets;  // empty when the fixture has no target set
};

// --- tiny named graphs ------------------------------------------------------

inline Graph triangle_graph() {
  return Graph::build(3, {{1, 2}, {2, 3}, {1, 3}}, {1, 1, 1});
}

// 3-vertex path with a low-priority middle vertex.
inline Graph path3_graph() {
  return Graph::build(3, {{1, 2}, {2, 3}}, {1, 2, 1});
}

// K(1,3): high-priority leaves around a center of priority 2.
inline Graph claw_graph() {
  return Graph::build(4, {{1, 2}, {1, 3}, {1, 4}}, {2, 1, 1, 1});
}

inline Graph cycle5_graph() {
  return Graph::build(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}},
                      {1, 1, 1, 1, 1});
}

inline Graph two_edge_graph() {
  return Graph::build(4, {{1, 2}, {3, 4}}, {1, 1, 1, 1});
}

// Four disjoint edges plus two isolated vertices, priorities spread out so
// every score digit is distinguishable.
inline Graph spread_graph() {
  return Graph::build(10, {{1, 2}, {3, 4}, {5, 6}, {7, 8}},
                      {1, 1, 2, 3, 4, 8, 2, 5, 10, 10});
}

// --- bipartite search fixtures ---------------------------------------------
//
// Layout (vertex ids in parentheses):
//
//   a(1)   g(6)            targets = {a, d, f, g, j}
//   |  \    |              matching = bd, cf, hj, kn
//   b(2) c(3) h(7)
//   |  X |    |
//   d(4) f(5) j(9)
//        |    |
//        i(8) k(10)
//             |
//             n(11)
//
// Trees grow from a and g; the in-tree edge bf gets ignored, then fi closes
// an odd-length path a-c-f-i.

inline Instance bipartite_odd_fixture() {
  Graph g = Graph::build(11,
                         {{1, 2},    // 0 ab
                          {1, 3},    // 1 ac
                          {2, 4},    // 2 bd
                          {2, 5},    // 3 bf
                          {3, 5},    // 4 cf
                          {5, 8},    // 5 fi
                          {6, 7},    // 6 gh
                          {7, 9},    // 7 hj
                          {9, 10},   // 8 jk
                          {10, 11},  // 9 kn
                         },
                         std::vector<int>(11, 1));
  Matching m = make_matching(g, std::vector<EdgeId>{2, 4, 7, 9});
  VertexSet s = make_vertex_set(g, std::vector<Vertex>{1, 4, 5, 6, 9});
  return {std::move(g), std::move(m), std::move(s)};
}

// Same shape without the fi edge: the search instead leaves the target set at
// n and returns the even-length path g-h-j-k-n.
inline Instance bipartite_even_fixture() {
  Graph g = Graph::build(11,
                         {{1, 2},    // 0 ab
                          {1, 3},    // 1 ac
                          {2, 4},    // 2 bd
                          {2, 5},    // 3 bf
                          {3, 5},    // 4 cf
                          {6, 7},    // 5 gh
                          {7, 9},    // 6 hj
                          {9, 10},   // 7 jk
                          {10, 11},  // 8 kn
                         },
                         std::vector<int>(11, 1));
  Matching m = make_matching(g, std::vector<EdgeId>{2, 4, 6, 8});
  VertexSet s = make_vertex_set(g, std::vector<Vertex>{1, 4, 5, 6, 9});
  return {std::move(g), std::move(m), std::move(s)};
}

// --- blossom search fixtures -----------------------------------------------
//
// Shared 12-vertex core (edge ids for the 14-edge variant):
//
//        a(1)                 h(8)
//        |0                   |9
//        b(2)                 i(9)
//        |1                   |10
//        c(3)                 j(10)
//      2/  \3              11/  \12
//     d(4)  f(6)          k(11)  m(12)
//     4|  5\ |7             \13 /
//     e(5)--g(7)             km
//          6
//        g-k = edge 8
//
// matching = bc, de, fg, ij, km; unmatched roots a and h. The search shrinks
// the 3-cycle j-k-m, then the 5-cycle c-d-e-g-f, then crosses the two trees
// on g-k: path a-b-c-f-g-k-m-j-i-h.

inline Instance two_blossom_fixture(int low_priority_vertex = 0) {
  std::vector<int> prio(12, 1);
  if (low_priority_vertex != 0) prio[low_priority_vertex - 1] = 2;
  Graph g = Graph::build(12,
                         {{1, 2},    // 0 ab
                          {2, 3},    // 1 bc
                          {3, 4},    // 2 cd
                          {3, 6},    // 3 cf
                          {4, 5},    // 4 de
                          {4, 7},    // 5 dg
                          {5, 7},    // 6 eg
                          {6, 7},    // 7 fg
                          {7, 11},   // 8 gk
                          {8, 9},    // 9 hi
                          {9, 10},   // 10 ij
                          {10, 11},  // 11 jk
                          {10, 12},  // 12 jm
                          {11, 12},  // 13 km
                         },
                         std::move(prio));
  Matching m = make_matching(g, std::vector<EdgeId>{1, 4, 7, 10, 13});
  return {std::move(g), std::move(m), {}};
}

// The core plus an f-h edge. The extra adjacency lets the cross edge g-k wait:
// after the j-k-m cycle shrinks, the trees meet on e-g instead and the path
// runs a-b-c-d-e-g-f-h before the 5-cycle ever closes.
inline Instance one_blossom_fixture() {
  Graph g = Graph::build(12,
                         {{1, 2},    // 0 ab
                          {2, 3},    // 1 bc
                          {3, 4},    // 2 cd
                          {3, 6},    // 3 cf
                          {4, 5},    // 4 de
                          {4, 7},    // 5 dg
                          {5, 7},    // 6 eg
                          {6, 7},    // 7 fg
                          {7, 11},   // 8 gk
                          {8, 9},    // 9 hi
                          {6, 8},    // 10 fh
                          {9, 10},   // 11 ij
                          {10, 11},  // 12 jk
                          {10, 12},  // 13 jm
                          {11, 12},  // 14 km
                         },
                         std::vector<int>(12, 1));
  Matching m = make_matching(g, std::vector<EdgeId>{1, 4, 7, 11, 14});
  return {std::move(g), std::move(m), {}};
}

// --- randomized instances ---------------------------------------------------

// n in [2, max_n], both sides nonempty, edge count uniform over the possible
// range (forced positive when at_least_one_edge). Priorities are all 1.
struct BipartiteInstance {
  Graph g;
  std::vector<char> side;  // size n + 1
};

inline BipartiteInstance random_bipartite(Rng& rng, int max_n, bool at_least_one_edge) {
  int n = 2 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(max_n) - 1));
  std::vector<char> side(n + 1, 0);
  side[2] = 1;
  for (Vertex v = 3; v <= n; ++v) side[v] = static_cast<char>(rng.bounded(2));
  std::vector<Edge> pairs;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (side[u] != side[v]) pairs.push_back({u, v});
  auto total = static_cast<std::uint64_t>(pairs.size());
  std::uint64_t m = at_least_one_edge ? 1 + rng.bounded(total) : rng.bounded(total + 1);
  for (std::uint64_t i = 0; i < m; ++i) {
    auto j = i + rng.bounded(total - i);
    std::swap(pairs[i], pairs[j]);
  }
  pairs.resize(m);
  return {Graph::build(n, std::move(pairs), std::vector<int>(n, 1)), std::move(side)};
}

inline VertexSet random_subset(Rng& rng, const Graph& g) {
  VertexSet s(g.vertex_count() + 1, 0);
  for (Vertex v = 1; v <= g.vertex_count(); ++v) s[v] = static_cast<char>(rng.bounded(2));
  return s;
}

// Greedy matching over a shuffled edge order, each available edge tossed in
// with probability 1/2; covers everything from empty to maximal.
inline Matching random_matching(Rng& rng, const Graph& g) {
  std::vector<EdgeId> order(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) order[e] = e;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    auto j = i + rng.bounded(order.size() - i);
    std::swap(order[i], order[j]);
  }
  Matching m(g);
  for (EdgeId e : order) {
    const Edge& ed = g.edge(e);
    if (!m.is_matched(ed.u) && !m.is_matched(ed.v) && rng.bounded(2) == 0) m.add(g, e);
  }
  return m;
}

// --- misc -------------------------------------------------------------------

inline bool is_maximal(const Graph& g, const Matching& m) {
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (!m.is_matched(ed.u) && !m.is_matched(ed.v)) return false;
  }
  return true;
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Captures the raw step stream of each search for exact-run assertions.
class RecordingSink : public TraceSink {
 public:
  std::vector<EdgeEvent> events;
  std::vector<Blossom> blossoms;
  std::vector<std::optional<AugPath>> outcomes;

  void step(const EdgeEvent& ev, const BlossomSearch&) override { events.push_back(ev); }
  void step(const EdgeEvent& ev, const BipartiteSearch&) override { events.push_back(ev); }
  void blossom_formed(const Blossom& b, const BlossomSearch&) override {
    blossoms.push_back(b);
  }
  void search_finished(const BlossomSearch&, const std::optional<AugPath>& p) override {
    outcomes.push_back(p);
  }
  void search_finished(const BipartiteSearch&, const std::optional<AugPath>& p) override {
    outcomes.push_back(p);
  }
};

// Validates every finished search: a returned path must satisfy the endpoint
// and alternation contract, a failed search must satisfy the five forest
// invariants. Problems accumulate as strings for the caller to assert empty.
class AuditSink : public TraceSink {
 public:
  void search_finished(const BlossomSearch& s, const std::optional<AugPath>& p) override {
    if (p) {
      ++paths_;
      if (auto err = check_priority_path(s.graph(), s.matching(), *p, s.priority()))
        problems_.push_back("blossom path: " + *err);
    } else {
      ++failures_;
      if (auto err = check_failure_invariants(s))
        problems_.push_back("blossom property " + std::to_string(err->property) + ": " +
                            err->detail);
    }
  }
  void search_finished(const BipartiteSearch& s, const std::optional<AugPath>& p) override {
    if (p) {
      ++paths_;
      if (auto err = check_set_path(s.graph(), s.matching(), *p, s.targets()))
        problems_.push_back("bipartite path: " + *err);
    } else {
      ++failures_;
      if (auto err = check_failure_invariants(s))
        problems_.push_back("bipartite property " + std::to_string(err->property) + ": " +
                            err->detail);
    }
  }

  long long paths() const { return paths_; }
  long long failures() const { return failures_; }
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  long long paths_ = 0;
  long long failures_ = 0;
  std::vector<std::string> problems_;
};

}  // namespace testutil
