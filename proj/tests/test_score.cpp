#include <doctest.h>

#include <compare>
#include <stdexcept>
#include <vector>

#include "mpm/oracle.hpp"
#include "mpm/score.hpp"
#include "support.hpp"

using namespace mpm;

TEST_CASE("digits count matched vertices per priority") {
  Graph g = testutil::spread_graph();
  Matching m = make_matching(g, std::vector<EdgeId>{0, 1, 2});

  ScoreVector s = priority_score(g, m);
  CHECK(s.length() == 10);
  CHECK(s.digits().size() == 10u);
  CHECK(s.digit(1) == 2);  // vertices 1 and 2
  CHECK(s.digit(2) == 1);  // vertex 3
  CHECK(s.digit(3) == 1);
  CHECK(s.digit(4) == 1);
  CHECK(s.digit(5) == 0);
  CHECK(s.digit(8) == 1);  // vertex 6
  CHECK(s.digit(10) == 0);
  CHECK(s == ScoreVector({2, 1, 1, 1, 0, 0, 0, 1, 0, 0}));
  CHECK(s.render() == "2 1 1 1 0 0 0 1 0 0");
  CHECK(s.render_compact() == std::string("2111000100"));

  // Adding the 7-8 edge raises the priority-2 and priority-5 digits.
  m.add(g, 3);
  ScoreVector t = priority_score(g, m);
  CHECK(t == ScoreVector({2, 2, 1, 1, 1, 0, 0, 1, 0, 0}));
  CHECK(compare(t, s) == std::strong_ordering::greater);
}

TEST_CASE("comparison is lexicographic with the most significant digit first") {
  CHECK(compare(ScoreVector({1, 0}), ScoreVector({0, 9})) == std::strong_ordering::greater);
  CHECK(compare(ScoreVector({0, 9}), ScoreVector({1, 0})) == std::strong_ordering::less);
  CHECK(compare(ScoreVector({2, 3}), ScoreVector({2, 3})) == std::strong_ordering::equal);
  CHECK(compare(ScoreVector({2, 0, 1}), ScoreVector({2, 1, 0})) == std::strong_ordering::less);
  CHECK_THROWS_AS((void)compare(ScoreVector({1}), ScoreVector({1, 0})), std::invalid_argument);
}

TEST_CASE("prefix slices the leading digits") {
  ScoreVector s({3, 1, 4, 1});
  CHECK(s.prefix(0) == ScoreVector(std::vector<int>{}));
  CHECK(s.prefix(2) == ScoreVector({3, 1}));
  CHECK(s.prefix(4) == s);
  CHECK_THROWS(s.prefix(5));
  CHECK_THROWS(s.prefix(-1));
}

TEST_CASE("render_compact bails out on multi-character digits") {
  CHECK(ScoreVector({0, 9}).render_compact() == std::string("09"));
  CHECK(!ScoreVector({10, 0}).render_compact().has_value());
}

TEST_CASE("adding an edge never lowers the score") {
  // Over every matching of a few small graphs, each one-edge extension must
  // compare strictly greater: digits only accumulate.
  for (const Graph& g : {testutil::triangle_graph(), testutil::spread_graph(),
                         testutil::cycle5_graph(), testutil::claw_graph()}) {
    for_each_matching(g, {}, [&](const Matching& m) {
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (m.is_matched(ed.u) || m.is_matched(ed.v)) continue;
        Matching bigger = m;
        bigger.add(g, e);
        CHECK(compare(priority_score(g, bigger), priority_score(g, m)) ==
              std::strong_ordering::greater);
      }
    });
  }
}
