#include "spinchain/engine.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "spinchain/error.hpp"

namespace spinchain {

namespace {

using Terms = std::vector<PauliString>;

Terms to_terms(const OperatorSum& a) {
  Terms out;
  out.reserve(a.size());
  for (const auto& [l, c] : a.terms()) out.push_back({l, c});
  return out;
}

OperatorSum collect(int n, const Terms& terms) {
  OperatorSum out(n);
  for (const auto& t : terms) out.accumulate(t.letters, t.coeff);
  out.prune();
  return out;
}

void check_position(int k, int n) {
  if (k < 1 || k > n) {
    throw IndexError("spin index " + std::to_string(k) + " outside 1.." + std::to_string(n));
  }
}

// Expands every term through one unit-string conjugation without collecting.
void expand_unit(Terms& terms, const Letters& h, double cos2, double sin2) {
  const PauliString hs{h, Complex{0.0, -sin2}};
  Terms next;
  next.reserve(terms.size() * 2);
  for (auto& t : terms) {
    if (commutes(h, t.letters)) {
      next.push_back(std::move(t));
      continue;
    }
    next.push_back(multiply(hs, t));
    t.coeff *= cos2;
    next.push_back(std::move(t));
  }
  terms.swap(next);
}

Letters zz(int n, int k) {
  Letters h(static_cast<std::size_t>(n), PauliLetter::I);
  h[static_cast<std::size_t>(k - 1)] = PauliLetter::Z;
  h[static_cast<std::size_t>(k)] = PauliLetter::Z;
  return h;
}

Axis third_axis(Axis a, Axis b) {
  return static_cast<Axis>(6 - static_cast<int>(a) - static_cast<int>(b));
}

std::vector<int> target_list(const Targets& targets, int n) {
  if (targets.all) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) all[static_cast<std::size_t>(k - 1)] = k;
    return all;
  }
  std::set<int> seen;
  for (int k : targets.spins) {
    check_position(k, n);
    if (!seen.insert(k).second) {
      throw ArgumentError("spin " + std::to_string(k) + " listed twice in pulse targets");
    }
  }
  return targets.spins;
}

}  // namespace

OperatorSum conjugate_unit_string(const OperatorSum& a, const Letters& h, double two_phi) {
  auto terms = to_terms(a);
  expand_unit(terms, h, std::cos(two_phi), std::sin(two_phi));
  return collect(a.n(), terms);
}

OperatorSum rotate(const OperatorSum& a, const Targets& targets, Axis axis, double angle) {
  const int n = a.n();
  const auto spins = target_list(targets, n);
  const double c = std::cos(angle), s = std::sin(angle);
  const auto alpha = letter_of(axis);

  Terms terms = to_terms(a);
  for (int k : spins) {
    const auto pos = static_cast<std::size_t>(k - 1);
    Terms next;
    next.reserve(terms.size());
    for (auto& t : terms) {
      const auto beta = t.letters[pos];
      if (beta == PauliLetter::I || beta == alpha) {
        next.push_back(std::move(t));
        continue;
      }
      const Axis b = static_cast<Axis>(beta);
      const Axis g = third_axis(axis, b);
      PauliString mixed = t;
      mixed.letters[pos] = letter_of(g);
      mixed.coeff *= s * levi_civita(axis, b, g);
      t.coeff *= c;
      next.push_back(std::move(t));
      next.push_back(std::move(mixed));
    }
    terms.swap(next);
  }
  return collect(n, terms);
}

OperatorSum evolve_coupling(const OperatorSum& a, int k, double j_hz, double t) {
  if (t < 0.0) throw ArgumentError("negative evolution time");
  if (k < 1 || k > a.n() - 1) {
    throw IndexError("coupling index " + std::to_string(k) + " outside 1.." +
                     std::to_string(a.n() - 1));
  }
  // exp(-i 2 pi J t I_z I_z) = exp(-i (pi J t / 2) Z Z), so 2 phi = pi J t.
  return conjugate_unit_string(a, zz(a.n(), k), std::numbers::pi * j_hz * t);
}

OperatorSum evolve_effective(const OperatorSum& a, int spin_a, int spin_b, Axis axis,
                             double angle) {
  check_position(spin_a, a.n());
  check_position(spin_b, a.n());
  if (spin_a == spin_b) throw ArgumentError("effective pair needs two distinct spins");
  Letters h(static_cast<std::size_t>(a.n()), PauliLetter::I);
  h[static_cast<std::size_t>(spin_a - 1)] = letter_of(axis);
  h[static_cast<std::size_t>(spin_b - 1)] = letter_of(axis);
  // angle * 2 I I = (angle / 2) sigma sigma.
  return conjugate_unit_string(a, h, angle);
}

OperatorSum apply_event(const OperatorSum& a, const SequenceEvent& event, const ChainSpec& chain) {
  if (a.n() != chain.n()) throw DimensionError("operator and chain lengths differ");
  if (const auto* p = std::get_if<HardPulse>(&event)) {
    return rotate(a, p->targets, p->axis, p->angle);
  }
  if (const auto* e = std::get_if<EffectivePair>(&event)) {
    return evolve_effective(a, e->a, e->b, e->axis, e->angle);
  }
  const auto& d = std::get<CouplingDelay>(event);
  if (d.duration < 0.0) throw ArgumentError("negative delay");
  std::vector<int> active;
  if (d.active) {
    active = *d.active;
  } else {
    for (int c = 1; c < chain.n(); ++c) active.push_back(c);
  }
  // ZZ terms commute, so one collection at the end of the delay suffices.
  Terms terms = to_terms(a);
  for (int c : active) {
    const double angle = std::numbers::pi * chain.coupling(c) * d.duration;
    if (angle == 0.0) continue;
    expand_unit(terms, zz(chain.n(), c), std::cos(angle), std::sin(angle));
  }
  return collect(a.n(), terms);
}

OperatorSum apply_sequence(const OperatorSum& a, const PulseSequence& seq, const ChainSpec& chain) {
  if (seq.n != chain.n()) {
    throw DimensionError("sequence built for " + std::to_string(seq.n) + " spins, chain has " +
                         std::to_string(chain.n()));
  }
  OperatorSum out = a;
  for (const auto& e : seq.events) out = apply_event(out, e, chain);
  return out;
}

}  // namespace spinchain
