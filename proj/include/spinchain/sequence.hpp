#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spinchain/pauli.hpp"

namespace spinchain {

// Either every spin or an explicit list of 1-based positions.
struct Targets {
  bool all = false;
  std::vector<int> spins;

  static Targets every() { return {true, {}}; }
  static Targets of(std::vector<int> s) { return {false, std::move(s)}; }

  friend bool operator==(const Targets&, const Targets&) = default;
};

// Idealized zero-duration rotation with propagator
// exp(-i * angle * sum_{k in targets} I_{k axis}).
struct HardPulse {
  Targets targets;
  Axis axis = Axis::X;
  double angle = 0.0;  // radians

  friend bool operator==(const HardPulse&, const HardPulse&) = default;
};

// Free evolution under the coupling Hamiltonian. When `active` is set only
// the listed couplings (1-based) evolve.
struct CouplingDelay {
  double duration = 0.0;  // seconds
  std::optional<std::vector<int>> active;

  friend bool operator==(const CouplingDelay&, const CouplingDelay&) = default;
};

// Effective pair evolution with propagator exp(-i * angle * 2 I_{a axis} I_{b axis}).
// The duration is bookkeeping only.
struct EffectivePair {
  int a = 1;
  int b = 2;
  Axis axis = Axis::X;
  double angle = 0.0;     // radians
  double duration = 0.0;  // seconds

  friend bool operator==(const EffectivePair&, const EffectivePair&) = default;
};

using SequenceEvent = std::variant<HardPulse, CouplingDelay, EffectivePair>;

double event_duration(const SequenceEvent& e);

struct PulseSequence {
  std::string name;
  int n = 0;
  std::vector<SequenceEvent> events;

  double total_duration() const;

  PulseSequence& pulse(Targets t, Axis axis, double angle);
  PulseSequence& pulse(int spin, Axis axis, double angle);
  PulseSequence& delay(double seconds);
  PulseSequence& delay(double seconds, std::vector<int> active);
  PulseSequence& pair(int a, int b, Axis axis, double angle, double seconds);

  friend bool operator==(const PulseSequence& x, const PulseSequence& y) {
    return x.n == y.n && x.events == y.events;
  }
};

// Reflects spin k -> n + 1 - k and coupling c -> n - c.
PulseSequence mirror_sequence(const PulseSequence& seq);

}  // namespace spinchain
