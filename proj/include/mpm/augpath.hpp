#pragma once

#include <optional>
#include <string>

#include "mpm/graph.hpp"
#include "mpm/trace.hpp"

namespace mpm {

// First failed property (numbered 1..5) reported by the post-search invariant
// checks of either engine.
struct InvariantViolation {
  int property = 0;
  std::string detail;
};

// Structural validity: consecutive vertices joined by the listed edges, no
// repeated vertex, strict alternation against m starting unmatched, and the
// last vertex's matchedness consistent with the final edge. Returns a
// description of the first problem, or nullopt when sound.
std::optional<std::string> check_alternating_structure(const Graph& g, const Matching& m,
                                                       const AugPath& p);

// Structure plus the endpoint contract for an augmenting path at `priority`:
// the first vertex is unmatched with that exact priority, and a matched final
// vertex must have a numerically larger (i.e. lower) priority.
std::optional<std::string> check_priority_path(const Graph& g, const Matching& m,
                                               const AugPath& p, int priority);

// Structure plus the two-class endpoint contract: the first vertex is an
// unmatched member of `targets`, and a matched final vertex lies outside it.
std::optional<std::string> check_set_path(const Graph& g, const Matching& m, const AugPath& p,
                                          const VertexSet& targets);

// Toggles every path edge's membership in m. Re-validates the structure first
// and throws std::invalid_argument if it does not hold.
Matching augment(const Graph& g, Matching m, const AugPath& p);

}  // namespace mpm
