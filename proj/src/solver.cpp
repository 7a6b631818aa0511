#include "mpm/solver.hpp"

#include <algorithm>
#include <vector>

#include "mpm/augpath.hpp"
#include "mpm/bipartite.hpp"
#include "mpm/blossom.hpp"

namespace mpm {

namespace {

using Clock = std::chrono::steady_clock;

}  // namespace

SolveReport max_priority_matching(const Graph& g, Matching m, TraceSink* sink) {
  auto t0 = Clock::now();
  SolveReport rep;
  std::vector<int> present(g.priorities().begin() + 1, g.priorities().end());
  std::sort(present.begin(), present.end());
  present.erase(std::unique(present.begin(), present.end()), present.end());

  for (int p : present) {
    ++rep.priorities_probed;
    for (;;) {
      if (sink) sink->search_started(p, g, m);
      BlossomSearch search(g, m, p, sink);
      auto path = search.run();
      ++rep.searches;
      rep.blossoms_formed += static_cast<int>(search.blossoms().size());
      if (!path) break;
      ++rep.augmentations;
      ++rep.augmentations_by_priority[p];
      m = augment(g, std::move(m), *path);
      if (sink) sink->augmented(p, *path, m);
    }
  }
  rep.matching = std::move(m);
  rep.score = priority_score(g, rep.matching);
  rep.elapsed = Clock::now() - t0;
  return rep;
}

SolveReport max_priority_matching(const Graph& g, TraceSink* sink) {
  return max_priority_matching(g, Matching(g), sink);
}

Graph encode_two_priority(const Graph& g, const VertexSet& targets) {
  int low = std::min(2, g.vertex_count());
  std::vector<int> prio(g.vertex_count());
  for (Vertex v = 1; v <= g.vertex_count(); ++v) prio[v - 1] = targets[v] ? 1 : low;
  return Graph::build(g.vertex_count(), g.edges(), std::move(prio));
}

SolveReport two_priority_matching(const Graph& g, const VertexSet& targets, TraceSink* sink) {
  return max_priority_matching(encode_two_priority(g, targets), sink);
}

SolveReport max_size_matching(const Graph& g, TraceSink* sink) {
  VertexSet all(g.vertex_count() + 1, 1);
  all[0] = 0;
  return max_priority_matching(encode_two_priority(g, all), sink);
}

SolveReport two_priority_matching_bipartite(const Graph& g, const VertexSet& targets,
                                            TraceSink* sink) {
  if (!g.bipartition()) throw NotBipartiteError("graph contains an odd cycle");
  auto t0 = Clock::now();
  SolveReport rep;
  Matching m(g);
  VertexSet all(g.vertex_count() + 1, 1);
  all[0] = 0;

  int phase = 0;
  for (const VertexSet* set : {&targets, static_cast<const VertexSet*>(&all)}) {
    ++phase;
    ++rep.priorities_probed;
    for (;;) {
      if (sink) sink->search_started(phase, g, m);
      BipartiteSearch search(g, m, *set, sink);
      auto path = search.run();
      ++rep.searches;
      if (!path) break;
      ++rep.augmentations;
      ++rep.augmentations_by_priority[phase];
      m = augment(g, std::move(m), *path);
      if (sink) sink->augmented(phase, *path, m);
    }
  }
  rep.score = priority_score(encode_two_priority(g, targets), m);
  rep.matching = std::move(m);
  rep.elapsed = Clock::now() - t0;
  return rep;
}

}  // namespace mpm
