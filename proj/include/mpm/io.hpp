#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mpm/graph.hpp"
#include "mpm/score.hpp"

namespace mpm {

/// Graph text format. Lines, with `#` starting a comment anywhere:
///   p mpm <n> <m>      header, first
///   v <id> <priority>  optional, at most once per vertex; others default to n
///   e <u> <v>          exactly m of these
Graph parse_graph(std::istream& in);
Graph parse_graph_text(const std::string& text);
Graph parse_graph_file(const std::string& path);  // ParseError/Error

// Canonical text: header, a v line per vertex, e lines in edge-id order.
std::string render_graph(const Graph& g);

/// Matching text format: one `s <d1> .. <dn>` score line, then `m <u> <v>`
/// lines, one per matched edge.
struct MatchingDoc {
  std::vector<int> score;
  std::vector<Edge> edges;
};

MatchingDoc parse_matching(std::istream& in);
MatchingDoc parse_matching_file(const std::string& path);
std::string render_matching(const Graph& g, const Matching& m);

// Semantic check of a document against its graph: edges must exist, form a
// matching, and the score line must equal the recomputed score. Returns the
// first problem, or nullopt (with the matching in *out) when sound.
std::optional<std::string> verify_matching_doc(const Graph& g, const MatchingDoc& doc,
                                               Matching* out = nullptr);

// Whitespace-separated vertex ids, `#` comments; duplicates tolerated.
VertexSet parse_vertex_set(std::istream& in, const Graph& g);
VertexSet parse_vertex_set_file(const std::string& path, const Graph& g);

/// How generated vertices get priorities:
///   uniform            uniform over [1, n]
///   uniform:a,b,..     uniform over the listed values
///   weights:p=w,..     listed values with integer weights
///   distinct           a random permutation of 1..n
struct PrioritySpec {
  enum class Kind { Uniform, UniformList, Weights, Distinct };
  Kind kind = Kind::Uniform;
  std::vector<int> values;
  std::vector<std::pair<int, int>> weights;

  static PrioritySpec parse(const std::string& text);  // ParseError, line 0
  std::string to_string() const;
};

// mt19937_64 with a rejection-sampled bound, identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t bounded(std::uint64_t n);  // uniform over [0, n)

 private:
  std::mt19937_64 gen_;
};

// Random simple graph: n vertices, exactly m edges, priorities per spec.
// Identical output for identical arguments on any platform.
Graph generate_random(int n, int m, std::uint64_t seed, const PrioritySpec& spec = {});

}  // namespace mpm
