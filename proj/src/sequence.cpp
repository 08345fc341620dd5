#include "spinchain/sequence.hpp"

#include <algorithm>

namespace spinchain {

double event_duration(const SequenceEvent& e) {
  return std::visit(
      [](const auto& ev) -> double {
        using T = std::decay_t<decltype(ev)>;
        if constexpr (std::is_same_v<T, HardPulse>) {
          return 0.0;
        } else {
          return ev.duration;
        }
      },
      e);
}

double PulseSequence::total_duration() const {
  double t = 0.0;
  for (const auto& e : events) t += event_duration(e);
  return t;
}

PulseSequence& PulseSequence::pulse(Targets t, Axis axis, double angle) {
  events.emplace_back(HardPulse{std::move(t), axis, angle});
  return *this;
}

PulseSequence& PulseSequence::pulse(int spin, Axis axis, double angle) {
  return pulse(Targets::of({spin}), axis, angle);
}

PulseSequence& PulseSequence::delay(double seconds) {
  events.emplace_back(CouplingDelay{seconds, std::nullopt});
  return *this;
}

PulseSequence& PulseSequence::delay(double seconds, std::vector<int> active) {
  events.emplace_back(CouplingDelay{seconds, std::move(active)});
  return *this;
}

PulseSequence& PulseSequence::pair(int a, int b, Axis axis, double angle, double seconds) {
  events.emplace_back(EffectivePair{a, b, axis, angle, seconds});
  return *this;
}

PulseSequence mirror_sequence(const PulseSequence& seq) {
  const int n = seq.n;
  PulseSequence out{seq.name + " (mirrored)", n, {}};
  for (const auto& e : seq.events) {
    if (const auto* p = std::get_if<HardPulse>(&e)) {
      HardPulse m = *p;
      for (int& k : m.targets.spins) k = n + 1 - k;
      out.events.emplace_back(m);
    } else if (const auto* d = std::get_if<CouplingDelay>(&e)) {
      CouplingDelay m = *d;
      if (m.active) {
        for (int& c : *m.active) c = n - c;
        std::sort(m.active->begin(), m.active->end());
      }
      out.events.emplace_back(m);
    } else {
      EffectivePair m = std::get<EffectivePair>(e);
      m.a = n + 1 - m.a;
      m.b = n + 1 - m.b;
      out.events.emplace_back(m);
    }
  }
  return out;
}

}  // namespace spinchain
