#pragma once

#include <chrono>
#include <map>
#include <optional>

#include "mpm/graph.hpp"
#include "mpm/score.hpp"
#include "mpm/trace.hpp"

namespace mpm {

struct SolveReport {
  Matching matching;
  ScoreVector score;  // over the priorities the solve ran with
  int searches = 0;
  int augmentations = 0;
  int priorities_probed = 0;  // always searches == augmentations + priorities_probed
  int blossoms_formed = 0;
  std::map<int, int> augmentations_by_priority;
  std::chrono::duration<double> elapsed{};
};

// Sweeps the priority values present in g in ascending order; at each value,
// augments until a search fails before moving on. The result maximizes the
// score lexicographically and is a maximum-size matching.
SolveReport max_priority_matching(const Graph& g, TraceSink* sink = nullptr);
SolveReport max_priority_matching(const Graph& g, Matching start, TraceSink* sink = nullptr);

// Same graph with priorities replaced by 1 inside `targets`, min(2, n) outside.
Graph encode_two_priority(const Graph& g, const VertexSet& targets);

// Full solve on the two-priority encoding. The reported score is over the
// encoded priorities; the matching applies to g unchanged.
SolveReport two_priority_matching(const Graph& g, const VertexSet& targets,
                                  TraceSink* sink = nullptr);

// Full solve with every priority forced to 1, i.e. a maximum-size matching.
SolveReport max_size_matching(const Graph& g, TraceSink* sink = nullptr);

// Two-phase driver for bipartite graphs: first covers as much of `targets` as
// possible, then extends to maximum size without uncovering any of it. Throws
// NotBipartiteError when g has an odd cycle. Scores match two_priority_matching.
SolveReport two_priority_matching_bipartite(const Graph& g, const VertexSet& targets,
                                            TraceSink* sink = nullptr);

}  // namespace mpm
