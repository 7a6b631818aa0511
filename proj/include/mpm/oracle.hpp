#pragma once

#include <functional>

#include "mpm/errors.hpp"
#include "mpm/graph.hpp"
#include "mpm/score.hpp"

namespace mpm {

// Caps for exhaustive matching enumeration; BudgetError past any of them.
struct EnumerationBudget {
  int max_vertices = 12;
  int max_edges = 20;
  long long max_matchings = 1LL << 22;
};

// Visits every matching of g exactly once, the empty one included.
void for_each_matching(const Graph& g, const EnumerationBudget& budget,
                       const std::function<void(const Matching&)>& visit);

long long count_matchings(const Graph& g, const EnumerationBudget& budget = {});

int max_matching_size(const Graph& g, const EnumerationBudget& budget = {});

// Lexicographic maximum of priority_score over all matchings.
ScoreVector best_score(const Graph& g, const EnumerationBudget& budget = {});

// Whether some matching keeps the first `place - 1` digits of m's score and
// beats it at digit `place`. A failed search at that priority promises "no".
bool score_improvable(const Graph& g, const Matching& m, int place,
                      const EnumerationBudget& budget = {});

}  // namespace mpm
