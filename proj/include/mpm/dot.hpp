#pragma once

#include <iosfwd>
#include <string>

#include "mpm/blossom.hpp"
#include "mpm/graph.hpp"
#include "mpm/trace.hpp"

namespace mpm {

// Graphviz rendering: vertices labeled "id:priority", matched edges bold.
void write_matching_dot(std::ostream& out, const Graph& g, const Matching& m);

// Final forest of one search: even vertices marked "+", odd "-", unreached
// bare; blossoms drawn as nested clusters.
void write_forest_dot(std::ostream& out, const BlossomSearch& s);

// Writes <prefix>-<k>.dot with the forest of the k-th search (0-based).
class DotForestSink : public TraceSink {
 public:
  explicit DotForestSink(std::string prefix) : prefix_(std::move(prefix)) {}
  void search_finished(const BlossomSearch& s, const std::optional<AugPath>&) override;
  int files_written() const { return count_; }

 private:
  std::string prefix_;
  int count_ = 0;
};

}  // namespace mpm
