#include "mpm/oracle.hpp"

#include <string>

namespace mpm {

namespace {

struct Enumerator {
  const Graph& g;
  const EnumerationBudget& budget;
  const std::function<void(const Matching&)>& visit;
  Matching current;
  long long seen = 0;

  void recurse(EdgeId e) {
    if (e == g.edge_count()) {
      if (++seen > budget.max_matchings)
        throw BudgetError("more than " + std::to_string(budget.max_matchings) + " matchings");
      visit(current);
      return;
    }
    recurse(e + 1);
    const Edge& ed = g.edge(e);
    if (!current.is_matched(ed.u) && !current.is_matched(ed.v)) {
      current.add(g, e);
      recurse(e + 1);
      current.remove(g, e);
    }
  }
};

}  // namespace

void for_each_matching(const Graph& g, const EnumerationBudget& budget,
                       const std::function<void(const Matching&)>& visit) {
  if (g.vertex_count() > budget.max_vertices)
    throw BudgetError("graph has " + std::to_string(g.vertex_count()) +
                      " vertices, budget allows " + std::to_string(budget.max_vertices));
  if (g.edge_count() > budget.max_edges)
    throw BudgetError("graph has " + std::to_string(g.edge_count()) +
                      " edges, budget allows " + std::to_string(budget.max_edges));
  Enumerator en{g, budget, visit, Matching(g), 0};
  en.recurse(0);
}

long long count_matchings(const Graph& g, const EnumerationBudget& budget) {
  long long count = 0;
  for_each_matching(g, budget, [&](const Matching&) { ++count; });
  return count;
}

int max_matching_size(const Graph& g, const EnumerationBudget& budget) {
  int best = 0;
  for_each_matching(g, budget, [&](const Matching& m) { best = std::max(best, m.size()); });
  return best;
}

ScoreVector best_score(const Graph& g, const EnumerationBudget& budget) {
  ScoreVector best = ScoreVector::zeros(g.vertex_count());
  for_each_matching(g, budget, [&](const Matching& m) {
    ScoreVector s = priority_score(g, m);
    if (compare(s, best) > 0) best = std::move(s);
  });
  return best;
}

bool score_improvable(const Graph& g, const Matching& m, int place,
                      const EnumerationBudget& budget) {
  ScoreVector base = priority_score(g, m);
  ScoreVector prefix = base.prefix(place - 1);
  int digit = base.digit(place);
  bool found = false;
  for_each_matching(g, budget, [&](const Matching& cand) {
    if (found) return;
    ScoreVector s = priority_score(g, cand);
    found = s.prefix(place - 1) == prefix && s.digit(place) > digit;
  });
  return found;
}

}  // namespace mpm
