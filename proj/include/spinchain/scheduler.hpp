#pragma once

#include <string>
#include <vector>

#include "spinchain/builders.hpp"
#include "spinchain/chain.hpp"
#include "spinchain/dense.hpp"
#include "spinchain/rational.hpp"
#include "spinchain/sequence.hpp"

namespace spinchain {

// Timing for one coupling interval of the soliton transfer. Each active
// coupling c must accumulate an effective ZZ evolution time of 1 / (2 J_c);
// every other coupling accumulates zero.
struct StepBudget {
  int step = 0;  // 1 .. n + 1
  std::string label;
  std::vector<int> active;       // contiguous coupling indices
  std::vector<Rational> targets;  // parallel to active
  Rational interval;             // seconds
};

struct EchoFlip {
  Rational time;  // seconds from the start of the interval
  int spin = 0;

  friend bool operator==(const EchoFlip&, const EchoFlip&) = default;
};

struct CouplingAudit {
  int coupling = 0;
  bool active = false;
  Rational target;
  Rational accumulated;
};

// pi_x flips on individual spins inside one interval. The sign profile of
// spin m is s_m(t) = (-1)^(number of its flips at or before t), and coupling
// (m, m+1) accumulates the integral of s_m s_{m+1}.
struct EchoSchedule {
  Rational interval;
  std::vector<EchoFlip> flips;  // sorted by (time, spin)
  std::vector<CouplingAudit> audit;

  bool frame_restored() const;
  bool areas_exact() const;
};

// Couplings that act on the soliton during step 1 .. n + 1.
std::vector<int> soliton_window(int step, int n);

// Interval for propagation step k (1 <= k <= n - 3), which uses couplings
// k, k+1, k+2: 1 / (2 min J).
Rational soliton_step_time(int k, const ChainSpec& chain);

StepBudget step_budget(int step, const ChainSpec& chain);

struct SolitonTimes {
  Rational encode;
  Rational propagate;
  Rational decode;
  Rational total;
};

SolitonTimes soliton_total_times(const ChainSpec& chain);

// Exact signed integral of s_m s_{m+1} over the interval, m = coupling.
Rational signed_area(const std::vector<EchoFlip>& flips, int coupling, const Rational& interval);

EchoSchedule build_echo_schedule(const StepBudget& budget, const ChainSpec& chain);

// Delays (all couplings on) interleaved with 180 degree x pulses.
std::vector<SequenceEvent> schedule_events(const EchoSchedule& schedule);

struct UnequalSoliton {
  NamedSequence named;
  std::vector<StepBudget> budgets;
  std::vector<EchoSchedule> schedules;
  SolitonTimes times;
};

UnequalSoliton build_soliton_unequal(const ChainSpec& chain);

// Same pulses as the soliton, with each interval replaced by the ideal
// propagator exp(-i pi sum_{c active} I_cz I_(c+1)z) (as one delay per active
// coupling with only that coupling on). Durations here are not physical.
PulseSequence ideal_scaled_sequence(const ChainSpec& chain);

// max over alpha of |U_s A U_s^dagger - U_i A U_i^dagger| for A = I_1alpha,
// comparing the echo-scheduled and ideal sequences on the dense oracle.
double scheduled_vs_ideal_residual(const UnequalSoliton& built, const ChainSpec& chain,
                                   int max_spins = kDefaultOracleMaxSpins);

}  // namespace spinchain
