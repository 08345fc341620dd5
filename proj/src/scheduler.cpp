#include "spinchain/scheduler.hpp"

#include <algorithm>
#include <map>
#include <numbers>
#include <set>

#include "spinchain/error.hpp"

namespace spinchain {

namespace {

using FlipSet = std::set<Rational>;

Rational half_over(double j_hz) { return Rational(1) / (2 * Rational(j_hz)); }

Rational window_time(const ChainSpec& chain, const std::vector<int>& couplings) {
  double jmin = chain.coupling(couplings.front());
  for (int c : couplings) jmin = std::min(jmin, chain.coupling(c));
  return half_over(jmin);
}

// Profile of a spin relative to its neighbour so that the coupling between
// them accumulates `target` over `interval`: same sign until u, opposite
// after, with u = (interval + target) / 2. The trailing flip at the interval
// end restores the frame.
FlipSet gate(const Rational& target, const Rational& interval) {
  if (target == interval) return {};
  return {(interval + target) / 2, interval};
}

FlipSet toggle(FlipSet base, const FlipSet& other) {
  for (const auto& t : other) {
    if (!base.erase(t)) base.insert(t);
  }
  return base;
}

}  // namespace

bool EchoSchedule::frame_restored() const {
  std::map<int, int> count;
  for (const auto& f : flips) ++count[f.spin];
  return std::all_of(count.begin(), count.end(), [](const auto& kv) { return kv.second % 2 == 0; });
}

bool EchoSchedule::areas_exact() const {
  return std::all_of(audit.begin(), audit.end(), [this](const CouplingAudit& a) {
    return a.accumulated == a.target && signed_area(flips, a.coupling, interval) == a.target;
  });
}

std::vector<int> soliton_window(int step, int n) {
  if (n < 3) throw UnsupportedLengthError("soliton transfer needs at least 3 spins");
  if (step < 1 || step > n + 1) {
    throw IndexError("soliton step " + std::to_string(step) + " outside 1.." + std::to_string(n + 1));
  }
  if (step == 1) return {1};
  if (step == 2) return {1, 2};
  if (step <= n - 1) return {step - 2, step - 1, step};
  if (step == n) return {n - 2, n - 1};
  return {n - 1};
}

Rational soliton_step_time(int k, const ChainSpec& chain) {
  const int n = chain.n();
  if (k < 1 || k > n - 3) {
    throw IndexError("propagation step " + std::to_string(k) + " outside 1.." +
                     std::to_string(n - 3));
  }
  return window_time(chain, {k, k + 1, k + 2});
}

StepBudget step_budget(int step, const ChainSpec& chain) {
  const int n = chain.n();
  StepBudget b;
  b.step = step;
  b.active = soliton_window(step, n);
  if (step == 1) {
    b.label = "U1";
  } else if (step == 2) {
    b.label = "U2";
  } else if (step <= n) {
    b.label = "ULambda";
  } else {
    b.label = "U" + std::to_string(n + 1);
  }
  for (int c : b.active) b.targets.push_back(half_over(chain.coupling(c)));
  b.interval = *std::max_element(b.targets.begin(), b.targets.end());
  return b;
}

SolitonTimes soliton_total_times(const ChainSpec& chain) {
  const int n = chain.n();
  if (n < 3) throw UnsupportedLengthError("soliton transfer needs at least 3 spins");
  const auto j = [&](int c) { return chain.coupling(c); };
  SolitonTimes t;
  t.encode = half_over(j(1)) + half_over(std::min(j(1), j(2)));
  t.propagate = 0;
  for (int k = 1; k <= n - 3; ++k) t.propagate += soliton_step_time(k, chain);
  t.decode = half_over(std::min(j(n - 2), j(n - 1))) + half_over(j(n - 1));
  t.total = t.encode + t.propagate + t.decode;
  return t;
}

Rational signed_area(const std::vector<EchoFlip>& flips, int coupling, const Rational& interval) {
  std::vector<Rational> times;
  for (const auto& f : flips) {
    if (f.spin == coupling || f.spin == coupling + 1) times.push_back(f.time);
  }
  std::sort(times.begin(), times.end());
  Rational area = 0, prev = 0;
  int sign = 1;
  for (const auto& t : times) {
    area += sign * (t - prev);
    prev = t;
    sign = -sign;
  }
  area += sign * (interval - prev);
  return area;
}

EchoSchedule build_echo_schedule(const StepBudget& budget, const ChainSpec& chain) {
  const int n = chain.n();
  if (budget.active.empty()) throw ScheduleError("step has no active couplings");
  if (budget.active.size() != budget.targets.size()) {
    throw ScheduleError("active couplings and targets differ in length");
  }
  for (std::size_t i = 0; i < budget.active.size(); ++i) {
    const int c = budget.active[i];
    if (c < 1 || c > n - 1) throw ScheduleError("coupling " + std::to_string(c) + " outside chain");
    if (i > 0 && c != budget.active[i - 1] + 1) throw ScheduleError("active window not contiguous");
    if (budget.targets[i] < 0) throw ScheduleError("negative target time");
    if (budget.targets[i] > budget.interval) {
      throw ScheduleError("target time for coupling " + std::to_string(c) +
                          " exceeds the interval");
    }
  }

  std::map<int, Rational> target;  // every coupling; spectators are 0
  for (int c = 1; c < n; ++c) target[c] = 0;
  for (std::size_t i = 0; i < budget.active.size(); ++i) target[budget.active[i]] = budget.targets[i];

  // Anchor on the slowest active coupling; its left spin is never flipped.
  const auto slowest = std::max_element(budget.targets.begin(), budget.targets.end());
  const int anchor = budget.active[static_cast<std::size_t>(slowest - budget.targets.begin())];

  std::vector<FlipSet> profile(static_cast<std::size_t>(n + 1));
  for (int m = anchor + 1; m <= n; ++m) {
    profile[static_cast<std::size_t>(m)] =
        toggle(profile[static_cast<std::size_t>(m - 1)], gate(target[m - 1], budget.interval));
  }
  for (int m = anchor - 1; m >= 1; --m) {
    profile[static_cast<std::size_t>(m)] =
        toggle(profile[static_cast<std::size_t>(m + 1)], gate(target[m], budget.interval));
  }

  EchoSchedule s;
  s.interval = budget.interval;
  for (int m = 1; m <= n; ++m) {
    for (const auto& t : profile[static_cast<std::size_t>(m)]) s.flips.push_back({t, m});
  }
  std::sort(s.flips.begin(), s.flips.end(), [](const EchoFlip& a, const EchoFlip& b) {
    return a.time != b.time ? a.time < b.time : a.spin < b.spin;
  });
  for (int c = 1; c < n; ++c) {
    const bool active = std::find(budget.active.begin(), budget.active.end(), c) != budget.active.end();
    s.audit.push_back({c, active, target[c], signed_area(s.flips, c, s.interval)});
  }
  if (!s.areas_exact() || !s.frame_restored()) {
    throw ScheduleError("echo construction failed its own audit");
  }
  return s;
}

std::vector<SequenceEvent> schedule_events(const EchoSchedule& schedule) {
  std::vector<SequenceEvent> events;
  Rational prev = 0;
  std::size_t i = 0;
  while (i < schedule.flips.size()) {
    const Rational t = schedule.flips[i].time;
    if (t > prev) events.emplace_back(CouplingDelay{to_double(t - prev), std::nullopt});
    std::vector<int> spins;
    while (i < schedule.flips.size() && schedule.flips[i].time == t) spins.push_back(schedule.flips[i++].spin);
    events.emplace_back(HardPulse{Targets::of(std::move(spins)), Axis::X, std::numbers::pi});
    prev = t;
  }
  if (schedule.interval > prev) {
    events.emplace_back(CouplingDelay{to_double(schedule.interval - prev), std::nullopt});
  }
  return events;
}

UnequalSoliton build_soliton_unequal(const ChainSpec& chain) {
  const int n = chain.n();
  if (n < 3) throw UnsupportedLengthError("soliton transfer needs at least 3 spins");
  const auto skel = soliton_skeleton(n);

  UnequalSoliton out;
  out.times = soliton_total_times(chain);
  auto& named = out.named;
  named.kind = SequenceKind::Soliton;
  named.n = n;
  named.sequence = PulseSequence{"soliton-scheduled", n, {}};
  named.nominal = Surd3(out.times.total);
  auto& events = named.sequence->events;

  for (int step = 1; step <= n + 1; ++step) {
    const auto s = static_cast<std::size_t>(step - 1);
    for (const auto& p : skel.pre[s]) events.emplace_back(p);
    out.budgets.push_back(step_budget(step, chain));
    out.schedules.push_back(build_echo_schedule(out.budgets.back(), chain));
    for (auto& e : schedule_events(out.schedules.back())) events.push_back(std::move(e));
    if (step == n + 1) {
      for (const auto& p : skel.post) events.emplace_back(p);
    }
    named.block_ends.push_back(events.size());
    named.block_labels.push_back(skel.labels[s]);
  }
  normalize_signs(named, chain, 1, n);
  return out;
}

PulseSequence ideal_scaled_sequence(const ChainSpec& chain) {
  const int n = chain.n();
  const auto skel = soliton_skeleton(n);
  PulseSequence seq{"soliton-ideal", n, {}};
  for (int step = 1; step <= n + 1; ++step) {
    const auto s = static_cast<std::size_t>(step - 1);
    for (const auto& p : skel.pre[s]) seq.events.emplace_back(p);
    for (int c : soliton_window(step, n)) seq.delay(to_double(half_over(chain.coupling(c))), {c});
    if (step == n + 1) {
      for (const auto& p : skel.post) seq.events.emplace_back(p);
    }
  }
  return seq;
}

double scheduled_vs_ideal_residual(const UnequalSoliton& built, const ChainSpec& chain,
                                   int max_spins) {
  const auto u_sched = dense_propagator(*built.named.sequence, chain, max_spins);
  auto ideal = ideal_scaled_sequence(chain);
  for (const auto& fix : built.named.sign_corrections) ideal.events.emplace_back(fix);
  const auto u_ideal = dense_propagator(ideal, chain, max_spins);
  double worst = 0.0;
  for (Axis a : kAxes) {
    const auto op = to_dense(OperatorSum(spin_operator(1, a, chain.n())));
    worst = std::max(worst, conjugate(u_sched, op).max_norm_diff(conjugate(u_ideal, op)));
  }
  return worst;
}

}  // namespace spinchain
