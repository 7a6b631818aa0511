#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mpm/graph.hpp"

namespace mpm {

/// Priority score of a matching: digit k counts matched vertices of priority k.
/// Scores order lexicographically, most significant digit first (priority 1).
class ScoreVector {
 public:
  ScoreVector() = default;
  explicit ScoreVector(std::vector<int> digits) : digits_(std::move(digits)) {}
  static ScoreVector zeros(int n) { return ScoreVector(std::vector<int>(n, 0)); }

  int length() const { return static_cast<int>(digits_.size()); }
  int digit(int place) const;  // place in [1, length]
  std::span<const int> digits() const { return digits_; }

  // First `places` digits; 0 yields the empty prefix. Throws out of [0, length].
  ScoreVector prefix(int places) const;

  std::string render() const;  // digits separated by single spaces
  // No-separator form, only meaningful while every digit fits one character.
  std::optional<std::string> render_compact() const;

  friend bool operator==(const ScoreVector&, const ScoreVector&) = default;

 private:
  std::vector<int> digits_;
};

// Lexicographic comparison; throws std::invalid_argument on length mismatch.
std::strong_ordering compare(const ScoreVector& a, const ScoreVector& b);

ScoreVector priority_score(const Graph& g, const Matching& m);

}  // namespace mpm
