#include "mpm/trace.hpp"

#include <ostream>
#include <sstream>

#include "mpm/blossom.hpp"

namespace mpm {

std::string_view to_string(StepKind k) {
  switch (k) {
    case StepKind::Grow: return "grow";
    case StepKind::FoundPath: return "found-path";
    case StepKind::OddPath: return "odd-path";
    case StepKind::EvenPath: return "even-path";
    case StepKind::CrossPath: return "cross-path";
    case StepKind::Blossom: return "blossom";
    case StepKind::BlossomPath: return "blossom-path";
    case StepKind::Ignore: return "ignore";
  }
  return "?";
}

std::string_view to_string(Label l) {
  switch (l) {
    case Label::Unreached: return "unreached";
    case Label::Even: return "even";
    case Label::Odd: return "odd";
  }
  return "?";
}

namespace {

template <typename T>
void join(std::ostringstream& out, const std::vector<T>& xs) {
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ',';
    out << xs[i];
  }
}

}  // namespace

std::string format_event(const EdgeEvent& ev) {
  std::ostringstream out;
  out << "step=" << ev.sequence << " kind=" << to_string(ev.kind) << " edge=" << ev.edge
      << " u=" << ev.u << " v=" << ev.v;
  return out.str();
}

std::string format_blossom(const Blossom& b) {
  std::ostringstream out;
  out << "blossom=" << b.id << " base=" << b.base << " bridge=" << b.bridge << " cycle=";
  join(out, b.cycle);
  return out.str();
}

std::string format_path(const AugPath& p) {
  std::ostringstream out;
  out << "path=";
  join(out, p.vertices);
  out << " edges=";
  join(out, p.edges);
  return out.str();
}

void TextTraceSink::search_started(int priority, const Graph&, const Matching& m) {
  out_ << "search priority=" << priority << " matching-size=" << m.size() << '\n';
}

void TextTraceSink::step(const EdgeEvent& ev, const BlossomSearch&) {
  out_ << format_event(ev) << '\n';
}

void TextTraceSink::step(const EdgeEvent& ev, const BipartiteSearch&) {
  out_ << format_event(ev) << '\n';
}

void TextTraceSink::blossom_formed(const Blossom& b, const BlossomSearch&) {
  out_ << format_blossom(b) << '\n';
}

void TextTraceSink::search_finished(const BlossomSearch&, const std::optional<AugPath>& p) {
  if (p)
    out_ << "result " << format_path(*p) << '\n';
  else
    out_ << "result none\n";
}

void TextTraceSink::search_finished(const BipartiteSearch&, const std::optional<AugPath>& p) {
  if (p)
    out_ << "result " << format_path(*p) << '\n';
  else
    out_ << "result none\n";
}

void TextTraceSink::augmented(int priority, const AugPath&, const Matching& updated) {
  out_ << "augmented priority=" << priority << " matching-size=" << updated.size() << '\n';
}

}  // namespace mpm
