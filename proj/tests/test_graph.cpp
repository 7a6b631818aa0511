#include <doctest.h>

#include <algorithm>
#include <vector>

#include "mpm/graph.hpp"
#include "support.hpp"

using namespace mpm;

TEST_CASE("build rejects malformed input with the right error kind") {
  auto kind_of = [](auto fn) {
    try {
      fn();
    } catch (const GraphError& e) {
      return e.kind();
    }
    FAIL("expected GraphError");
    return GraphErrorKind::SelfLoop;
  };

  CHECK(kind_of([] { Graph::build(3, {{2, 2}}, {1, 1, 1}); }) == GraphErrorKind::SelfLoop);
  CHECK(kind_of([] { Graph::build(3, {{1, 2}, {2, 1}}, {1, 1, 1}); }) ==
        GraphErrorKind::DuplicateEdge);
  CHECK(kind_of([] { Graph::build(3, {{1, 4}}, {1, 1, 1}); }) ==
        GraphErrorKind::VertexOutOfRange);
  CHECK(kind_of([] { Graph::build(3, {{0, 2}}, {1, 1, 1}); }) ==
        GraphErrorKind::VertexOutOfRange);
  CHECK(kind_of([] { Graph::build(3, {{1, 2}}, {1, 4, 1}); }) ==
        GraphErrorKind::PriorityOutOfRange);
  CHECK(kind_of([] { Graph::build(3, {{1, 2}}, {1, 0, 1}); }) ==
        GraphErrorKind::PriorityOutOfRange);
  CHECK(kind_of([] { Graph::build(3, {{1, 2}}, {1, 1}); }) ==
        GraphErrorKind::PriorityCountMismatch);
}

TEST_CASE("adjacency, degrees and edge lookup") {
  Graph g = testutil::two_blossom_fixture().g;
  CHECK(g.vertex_count() == 12);
  CHECK(g.edge_count() == 14);

  auto inc = g.incident_edges(7);  // vertex g in the fixture diagram
  std::vector<EdgeId> got(inc.begin(), inc.end());
  CHECK(got == std::vector<EdgeId>{5, 6, 7, 8});
  CHECK(g.degree(7) == 4);
  CHECK(g.degree(1) == 1);
  CHECK(std::is_sorted(got.begin(), got.end()));

  CHECK(g.other_endpoint(8, 7) == 11);
  CHECK(g.other_endpoint(8, 11) == 7);

  CHECK(g.find_edge(10, 12) == EdgeId{12});
  CHECK(g.find_edge(12, 10) == EdgeId{12});  // order-insensitive
  CHECK(!g.find_edge(1, 12).has_value());
}

TEST_CASE("bipartition exists exactly when there is no odd cycle") {
  auto side = testutil::bipartite_odd_fixture().g.bipartition();
  REQUIRE(side.has_value());
  Graph g = testutil::bipartite_odd_fixture().g;
  for (const Edge& e : g.edges()) CHECK((*side)[e.u] != (*side)[e.v]);

  CHECK(!testutil::triangle_graph().bipartition().has_value());
  CHECK(!testutil::cycle5_graph().bipartition().has_value());
  CHECK(testutil::two_edge_graph().bipartition().has_value());
}

TEST_CASE("matching bookkeeping stays consistent through add and remove") {
  Graph g = testutil::cycle5_graph();
  Matching m(g);
  CHECK(m.size() == 0);
  CHECK(!m.audit(g).has_value());

  m.add(g, 1);  // 2-3
  m.add(g, 3);  // 4-5
  CHECK(m.size() == 2);
  CHECK(m.contains(1));
  CHECK(m.is_matched(2));
  CHECK(m.mate(2) == Vertex{3});
  CHECK(m.mate(3) == Vertex{2});
  CHECK(!m.is_matched(1));
  CHECK(!m.mate(1).has_value());
  CHECK(m.matched_edge(4) == EdgeId{3});
  CHECK(m.edge_ids() == std::vector<EdgeId>{1, 3});
  CHECK(!m.audit(g).has_value());

  m.remove(g, 1);
  CHECK(m.size() == 1);
  CHECK(!m.is_matched(2));
  CHECK(!m.is_matched(3));
  CHECK(m.edge_ids() == std::vector<EdgeId>{3});
  CHECK(!m.audit(g).has_value());
}

TEST_CASE("is_valid_matching flags the first doubly covered vertex") {
  Graph g = testutil::triangle_graph();
  CHECK(is_valid_matching(g, std::vector<EdgeId>{0}).valid);
  CHECK(is_valid_matching(g, std::vector<EdgeId>{}).valid);

  auto bad = is_valid_matching(g, std::vector<EdgeId>{0, 1});  // share vertex 2
  CHECK(!bad.valid);
  CHECK(bad.conflict == Vertex{2});

  CHECK_THROWS_AS((void)is_valid_matching(g, std::vector<EdgeId>{5}), GraphError);
  CHECK_THROWS_AS((void)make_matching(g, std::vector<EdgeId>{0, 1}), GraphError);
}

TEST_CASE("make_vertex_set marks exactly the listed vertices") {
  Graph g = testutil::cycle5_graph();
  VertexSet s = make_vertex_set(g, std::vector<Vertex>{2, 5});
  CHECK(static_cast<int>(s.size()) == g.vertex_count() + 1);
  CHECK(s[2]);
  CHECK(s[5]);
  CHECK(!s[1]);
  CHECK(!s[3]);
}
