#pragma once

// Seeded random pulse sequences for property tests and the acceptance run.

#include <algorithm>
#include <numbers>
#include <random>

#include "spinchain/chain.hpp"
#include "spinchain/sequence.hpp"

namespace testgen {

inline spinchain::Axis random_axis(std::mt19937& rng) {
  return spinchain::kAxes[std::uniform_int_distribution<int>(0, 2)(rng)];
}

inline std::vector<int> random_subset(std::mt19937& rng, int lo, int hi) {
  std::vector<int> out;
  std::bernoulli_distribution pick(0.5);
  for (int i = lo; i <= hi; ++i)
    if (pick(rng)) out.push_back(i);
  if (out.empty()) out.push_back(std::uniform_int_distribution<int>(lo, hi)(rng));
  return out;
}

// Angles and durations are drawn on grids so that the 12-digit text form
// round-trips exactly; `arbitrary` switches to continuous values.
inline spinchain::PulseSequence random_sequence(std::mt19937& rng, int n, int max_events,
                                                bool arbitrary = false) {
  using namespace spinchain;
  PulseSequence seq{"random", n, {}};
  const int count = std::uniform_int_distribution<int>(0, max_events)(rng);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto angle = [&] {
    if (arbitrary) return (unit(rng) * 4 - 2) * std::numbers::pi;
    return std::uniform_int_distribution<int>(-8, 8)(rng) * 45.0 / 180.0 * std::numbers::pi;
  };
  const auto duration = [&] {
    if (arbitrary) return unit(rng);
    return std::uniform_int_distribution<int>(0, 64)(rng) / 64.0;
  };
  for (int i = 0; i < count; ++i) {
    switch (kind(rng)) {
      case 0:
        if (unit(rng) < 0.3) {
          seq.pulse(Targets::every(), random_axis(rng), angle());
        } else {
          seq.pulse(Targets::of(random_subset(rng, 1, n)), random_axis(rng), angle());
        }
        break;
      case 1:
        if (n >= 2 && unit(rng) < 0.4) {
          seq.delay(duration(), random_subset(rng, 1, n - 1));
        } else {
          seq.delay(duration());
        }
        break;
      default: {
        if (n < 2) break;
        const int a = std::uniform_int_distribution<int>(1, n)(rng);
        int b = std::uniform_int_distribution<int>(1, n - 1)(rng);
        if (b >= a) ++b;
        seq.pair(a, b, random_axis(rng), angle(), duration());
      }
    }
  }
  return seq;
}

inline spinchain::ChainSpec random_chain(std::mt19937& rng, int n, double lo, double hi) {
  std::uniform_real_distribution<double> j(lo, hi);
  std::vector<double> c;
  for (int i = 1; i < n; ++i) c.push_back(j(rng));
  return spinchain::ChainSpec(n, std::move(c));
}

}  // namespace testgen
