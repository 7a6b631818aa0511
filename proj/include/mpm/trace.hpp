#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mpm/graph.hpp"

namespace mpm {

enum class Label : std::uint8_t { Unreached, Even, Odd };

// Outcome of processing one eligible edge. Grow extends a tree; FoundPath,
// CrossPath and BlossomPath end the search with a path; Blossom shrinks an odd
// cycle; OddPath/EvenPath are the path flavors of the bipartite engine; Ignore
// covers odd, stale and intra-blossom endpoints.
enum class StepKind : std::uint8_t {
  Grow,
  FoundPath,
  OddPath,
  EvenPath,
  CrossPath,
  Blossom,
  BlossomPath,
  Ignore,
};

std::string_view to_string(StepKind k);
std::string_view to_string(Label l);

struct EdgeEvent {
  int sequence = 0;
  EdgeId edge = kNoEdge;
  Vertex u = kNoVertex;  // endpoint on the even side when one was selected
  Vertex v = kNoVertex;
  StepKind kind = StepKind::Ignore;
};

// Alternating path in the original graph; edges[k] joins vertices[k] and
// vertices[k+1]. The first vertex is always unmatched.
struct AugPath {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
};

struct Blossom;
class BlossomSearch;
class BipartiteSearch;

// Observer for searches and solves. All hooks default to no-ops; the search
// objects stay alive for inspection during their callbacks.
class TraceSink {
 public:
  virtual ~TraceSink() = default;
  virtual void search_started(int /*priority*/, const Graph&, const Matching&) {}
  virtual void step(const EdgeEvent&, const BlossomSearch&) {}
  virtual void step(const EdgeEvent&, const BipartiteSearch&) {}
  virtual void blossom_formed(const Blossom&, const BlossomSearch&) {}
  virtual void search_finished(const BlossomSearch&, const std::optional<AugPath>&) {}
  virtual void search_finished(const BipartiteSearch&, const std::optional<AugPath>&) {}
  virtual void augmented(int /*priority*/, const AugPath&, const Matching& /*updated*/) {}
};

std::string format_event(const EdgeEvent& ev);
std::string format_blossom(const Blossom& b);
std::string format_path(const AugPath& p);

// Sink that renders every hook as one key=value text line.
class TextTraceSink : public TraceSink {
 public:
  explicit TextTraceSink(std::ostream& out) : out_(out) {}
  void search_started(int priority, const Graph&, const Matching&) override;
  void step(const EdgeEvent&, const BlossomSearch&) override;
  void step(const EdgeEvent&, const BipartiteSearch&) override;
  void blossom_formed(const Blossom&, const BlossomSearch&) override;
  void search_finished(const BlossomSearch&, const std::optional<AugPath>&) override;
  void search_finished(const BipartiteSearch&, const std::optional<AugPath>&) override;
  void augmented(int priority, const AugPath&, const Matching& updated) override;

 private:
  std::ostream& out_;
};

}  // namespace mpm
