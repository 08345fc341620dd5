#include "spinchain/program.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <set>
#include <sstream>
#include <vector>

#include "spinchain/error.hpp"
#include "spinchain/format.hpp"

namespace spinchain {

namespace {

double degrees_to_radians(double deg) { return deg / 180.0 * std::numbers::pi; }
double radians_to_degrees(double rad) { return rad / std::numbers::pi * 180.0; }

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

class LineParser {
 public:
  LineParser(int line, std::optional<int> n) : line_(line), n_(n) {}

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, msg); }

  double number(std::string_view word, const char* what) const {
    const std::string s(word);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
      fail(std::string("non-numeric ") + what + " '" + s + "'");
    }
    return v;
  }

  int index(std::string_view word, const char* what) const {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
    if (ec != std::errc() || ptr != word.data() + word.size()) {
      fail(std::string("malformed ") + what + " '" + std::string(word) + "'");
    }
    return v;
  }

  int spin(std::string_view word) {
    const int k = index(word, "spin index");
    if (k < 1 || (n_ && k > *n_)) fail("spin index " + std::to_string(k) + " out of range");
    max_spin_ = std::max(max_spin_, k);
    return k;
  }

  int coupling(std::string_view word) {
    const int c = index(word, "coupling index");
    if (c < 1 || (n_ && c > *n_ - 1)) fail("coupling index " + std::to_string(c) + " out of range");
    max_spin_ = std::max(max_spin_, c + 1);
    return c;
  }

  template <class F>
  std::vector<int> list(std::string_view word, F&& item, const char* what) {
    if (word.empty()) fail(std::string("empty ") + what + " list");
    std::vector<int> out;
    std::set<int> seen;
    std::size_t start = 0;
    while (true) {
      const auto comma = word.find(',', start);
      const auto piece = word.substr(start, comma == std::string_view::npos ? word.npos : comma - start);
      if (piece.empty()) fail(std::string("malformed ") + what + " list '" + std::string(word) + "'");
      const int v = item(piece);
      if (!seen.insert(v).second) fail(std::string("duplicate entry in ") + what + " list");
      out.push_back(v);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return out;
  }

  Axis axis(std::string_view word) const {
    auto a = parse_axis(word);
    if (!a) fail("unknown axis '" + std::string(word) + "'");
    return *a;
  }

  SequenceEvent event(const std::vector<std::string_view>& w) {
    const auto& head = w.front();
    if (head == "pulse") {
      if (w.size() != 4) fail("pulse expects: pulse <targets> <axis> <angle_deg>");
      Targets t;
      if (w[1] == "all") {
        t = Targets::every();
      } else {
        t = Targets::of(list(w[1], [this](std::string_view s) { return spin(s); }, "target"));
      }
      const Axis a = axis(w[2]);
      return HardPulse{std::move(t), a, degrees_to_radians(number(w[3], "angle"))};
    }
    if (head == "delay") {
      if (w.size() != 2 && w.size() != 3) fail("delay expects: delay <seconds> [only=<couplings>]");
      const double d = number(w[1], "duration");
      if (d < 0) fail("negative duration");
      CouplingDelay out{d, std::nullopt};
      if (w.size() == 3) {
        if (!w[2].starts_with("only=")) fail("unknown delay option '" + std::string(w[2]) + "'");
        const auto items = w[2].substr(5);
        // "only=" with nothing after it is a pure wait with every coupling off.
        out.active = items.empty() ? std::vector<int>{}
                                   : list(items, [this](std::string_view s) { return coupling(s); },
                                          "coupling");
      }
      return out;
    }
    if (head == "effpair") {
      if (w.size() != 5 && w.size() != 6) {
        fail("effpair expects: effpair <a> <b> <axis> <angle_deg> [dur=<seconds>]");
      }
      EffectivePair e;
      e.a = spin(w[1]);
      e.b = spin(w[2]);
      if (e.a == e.b) fail("effpair needs two distinct spins");
      e.axis = axis(w[3]);
      e.angle = degrees_to_radians(number(w[4], "angle"));
      if (w.size() == 6) {
        if (!w[5].starts_with("dur=")) fail("unknown effpair option '" + std::string(w[5]) + "'");
        e.duration = number(w[5].substr(4), "duration");
        if (e.duration < 0) fail("negative duration");
      }
      return e;
    }
    fail("unknown directive '" + std::string(head) + "'");
  }

  int max_spin() const { return max_spin_; }
  void set_line(int line) { line_ = line; }

 private:
  int line_;
  std::optional<int> n_;
  int max_spin_ = 0;
};

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

PulseSequence parse_sequence(std::string_view text, std::optional<int> n) {
  PulseSequence seq;
  LineParser parser(0, n);
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto words = split_words(line);
    if (words.empty()) continue;
    parser.set_line(line_no);
    seq.events.push_back(parser.event(words));
  }
  seq.n = n ? *n : parser.max_spin();
  return seq;
}

std::string format_event(const SequenceEvent& event) {
  if (const auto* p = std::get_if<HardPulse>(&event)) {
    return "pulse " + (p->targets.all ? std::string("all") : join(p->targets.spins)) + " " +
           axis_char(p->axis) + " " + format_number(radians_to_degrees(p->angle));
  }
  if (const auto* d = std::get_if<CouplingDelay>(&event)) {
    std::string s = "delay " + format_number(d->duration);
    if (d->active) s += " only=" + join(*d->active);
    return s;
  }
  const auto& e = std::get<EffectivePair>(event);
  return "effpair " + std::to_string(e.a) + " " + std::to_string(e.b) + " " + axis_char(e.axis) +
         " " + format_number(radians_to_degrees(e.angle)) + " dur=" + format_number(e.duration);
}

std::string format_sequence(const PulseSequence& seq) {
  std::string out;
  for (const auto& e : seq.events) out += format_event(e) + "\n";
  return out;
}

}  // namespace spinchain
