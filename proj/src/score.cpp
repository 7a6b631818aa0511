#include "mpm/score.hpp"

#include <algorithm>
#include <stdexcept>

namespace mpm {

int ScoreVector::digit(int place) const {
  if (place < 1 || place > length())
    throw std::invalid_argument("score digit " + std::to_string(place) + " out of range");
  return digits_[place - 1];
}

ScoreVector ScoreVector::prefix(int places) const {
  if (places < 0 || places > length())
    throw std::invalid_argument("score prefix length " + std::to_string(places) +
                                " out of range");
  return ScoreVector(std::vector<int>(digits_.begin(), digits_.begin() + places));
}

std::string ScoreVector::render() const {
  std::string out;
  for (int i = 0; i < length(); ++i) {
    if (i) out += ' ';
    out += std::to_string(digits_[i]);
  }
  return out;
}

std::optional<std::string> ScoreVector::render_compact() const {
  std::string out;
  for (int d : digits_) {
    if (d < 0 || d > 9) return std::nullopt;
    out += static_cast<char>('0' + d);
  }
  return out;
}

std::strong_ordering compare(const ScoreVector& a, const ScoreVector& b) {
  if (a.length() != b.length())
    throw std::invalid_argument("comparing scores of lengths " + std::to_string(a.length()) +
                                " and " + std::to_string(b.length()));
  return std::lexicographical_compare_three_way(a.digits().begin(), a.digits().end(),
                                               b.digits().begin(), b.digits().end());
}

ScoreVector priority_score(const Graph& g, const Matching& m) {
  std::vector<int> digits(g.vertex_count(), 0);
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    if (m.is_matched(v)) ++digits[g.priority(v) - 1];
  return ScoreVector(std::move(digits));
}

}  // namespace mpm
