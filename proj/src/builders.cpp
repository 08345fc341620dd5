#include "spinchain/builders.hpp"

#include <cmath>
#include <numbers>

#include "spinchain/engine.hpp"
#include "spinchain/error.hpp"

namespace spinchain {

namespace {

constexpr double kQuarter = std::numbers::pi / 2;

void require_length(int n, int min, const char* what) {
  if (n < min) {
    throw UnsupportedLengthError(std::string(what) + " needs at least " + std::to_string(min) +
                                 " spins, got " + std::to_string(n));
  }
}

void require_coupling(double j_hz) {
  if (!(j_hz > 0.0) || !std::isfinite(j_hz)) throw ArgumentError("coupling must be positive");
}

void end_block(NamedSequence& named, std::string label) {
  named.block_ends.push_back(named.sequence->events.size());
  named.block_labels.push_back(std::move(label));
}

// Sign of the real part when the overlap is a unit-magnitude real; 0 otherwise.
int unit_sign(Complex ov) {
  if (std::abs(std::abs(ov) - 1.0) > 1e-9 || std::abs(ov.imag()) > 1e-9) return 0;
  return ov.real() > 0 ? 1 : -1;
}

}  // namespace

std::string kind_name(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::Soliton: return "soliton";
    case SequenceKind::IsotropicChain: return "isotropic";
    case SequenceKind::ConcatenatedInept: return "inept";
    case SequenceKind::IndirectSwapTimingOnly: return "swap13";
  }
  return "unknown";
}

SolitonSkeleton soliton_skeleton(int n) {
  require_length(n, 3, "soliton transfer");
  SolitonSkeleton s;
  s.pre.push_back({HardPulse{Targets::of({1}), Axis::X, kQuarter},
                   HardPulse{Targets::of({1}), Axis::Y, -kQuarter}});
  s.labels.push_back("U1");
  s.pre.push_back({HardPulse{Targets::of({1}), Axis::X, kQuarter},
                   HardPulse{Targets::of({2}), Axis::Y, kQuarter}});
  s.labels.push_back("U2");
  for (int k = 0; k < n - 2; ++k) {
    s.pre.push_back({HardPulse{Targets::every(), Axis::Y, kQuarter}});
    s.labels.push_back("ULambda");
  }
  s.pre.push_back({HardPulse{Targets::of({n}), Axis::X, -kQuarter},
                   HardPulse{Targets::of({n - 1}), Axis::Y, kQuarter}});
  s.labels.push_back("U" + std::to_string(n + 1));
  s.post.push_back(HardPulse{Targets::of({n}), Axis::X, -kQuarter});
  return s;
}

NamedSequence build_soliton(int n, double j_hz) {
  require_length(n, 3, "soliton transfer");
  require_coupling(j_hz);
  const double delta = 1.0 / (2.0 * j_hz);
  const auto skel = soliton_skeleton(n);

  NamedSequence named;
  named.kind = SequenceKind::Soliton;
  named.n = n;
  named.sequence = PulseSequence{"soliton", n, {}};
  named.nominal = Surd3(Rational(n + 1) / (2 * Rational(j_hz)));
  auto& seq = *named.sequence;
  for (std::size_t s = 0; s < skel.pre.size(); ++s) {
    for (const auto& p : skel.pre[s]) seq.events.emplace_back(p);
    seq.delay(delta);
    if (s + 1 == skel.pre.size()) {
      for (const auto& p : skel.post) seq.events.emplace_back(p);
    }
    end_block(named, skel.labels[s]);
  }
  normalize_signs(named, ChainSpec::uniform(n, j_hz), 1, n);
  return named;
}

NamedSequence build_isotropic_chain(int n, double j_hz) {
  require_length(n, 2, "isotropic chain transfer");
  require_coupling(j_hz);
  const double delta = 1.0 / (2.0 * j_hz);

  NamedSequence named;
  named.kind = SequenceKind::IsotropicChain;
  named.n = n;
  named.sequence = PulseSequence{"isotropic", n, {}};
  named.nominal = Surd3(Rational(3 * (n - 1)) / (2 * Rational(j_hz)));
  auto& seq = *named.sequence;
  for (int k = 1; k < n; ++k) {
    for (Axis a : kAxes) {
      // 2 pi J I I for 1/(2J) is exp(-i (pi/2) 2 I I).
      seq.pair(k, k + 1, a, kQuarter, delta);
      end_block(named, "iso" + std::to_string(k) + axis_char(a));
    }
  }
  normalize_signs(named, ChainSpec::uniform(n, j_hz), 1, n);
  return named;
}

NamedSequence build_inept(int n, double j_hz) {
  require_length(n, 2, "INEPT transfer");
  require_coupling(j_hz);
  const double delta = 1.0 / (2.0 * j_hz);

  NamedSequence named;
  named.kind = SequenceKind::ConcatenatedInept;
  named.n = n;
  named.sequence = PulseSequence{"inept", n, {}};
  named.nominal = Surd3(Rational(n) / (2 * Rational(j_hz)));
  auto& seq = *named.sequence;
  // I1x -> 2 I1y I2z; then each (90x all, delay) moves the antiphase pair
  // 2 I(k)y I(k+1)z one spin up. The final (90x all, delay) refocuses
  // 2 I(n-1)z I(n)y into I(n)x.
  seq.delay(delta);
  end_block(named, "inept1");
  for (int k = 2; k < n; ++k) {
    seq.pulse(Targets::every(), Axis::X, kQuarter);
    seq.delay(delta);
    end_block(named, "inept" + std::to_string(k));
  }
  seq.pulse(Targets::every(), Axis::X, kQuarter);
  seq.delay(delta);
  end_block(named, "refocus");
  normalize_signs(named, ChainSpec::uniform(n, j_hz), 1, n, true);
  return named;
}

Surd3 indirect_swap_timing(int n) {
  require_length(n, 3, "indirect SWAP transfer");
  const Surd3 swap13(0, Rational(3, 2));  // 3 sqrt(3) / 2
  if (n % 2 == 1) return swap13 * Rational((n - 1) / 2);
  return swap13 * Rational((n - 2) / 2) + Surd3(Rational(3, 2));
}

NamedSequence build_indirect_swap(int n, double j_hz) {
  require_coupling(j_hz);
  NamedSequence named;
  named.kind = SequenceKind::IndirectSwapTimingOnly;
  named.n = n;
  named.nominal = indirect_swap_timing(n) / Rational(j_hz);
  return named;
}

std::optional<HardPulse> sign_fix(int target, int sx, int sy, int sz) {
  const auto flip = [&](Axis a) {
    return HardPulse{Targets::of({target}), a, std::numbers::pi};
  };
  // A pi rotation about one axis keeps that component and negates the others.
  if (sx < 0 && sy < 0 && sz >= 0) return flip(Axis::Z);
  if (sx < 0 && sz < 0 && sy >= 0) return flip(Axis::Y);
  if (sy < 0 && sz < 0 && sx >= 0) return flip(Axis::X);
  if (sx < 0 && sy == 0 && sz == 0) return flip(Axis::Z);
  if (sx < 0 || sy < 0 || sz < 0) {
    throw ArgumentError("component signs are not reachable by a local rotation");
  }
  return std::nullopt;
}

void normalize_signs(NamedSequence& named, const ChainSpec& chain, int source, int target,
                     bool x_only) {
  if (!named.sequence) return;
  int signs[3] = {0, 0, 0};
  for (int i = 0; i < 3; ++i) {
    if (x_only && i > 0) break;
    const Axis a = kAxes[i];
    const auto out = apply_sequence(OperatorSum(spin_operator(source, a, chain.n())),
                                    *named.sequence, chain);
    if (out.empty()) continue;
    signs[i] = unit_sign(overlap(out, OperatorSum(spin_operator(target, a, chain.n()))));
  }
  if (auto fix = sign_fix(target, signs[0], signs[1], signs[2])) {
    named.sequence->events.emplace_back(*fix);
    named.sign_corrections.push_back(*fix);
    if (!named.block_ends.empty()) named.block_ends.back() = named.sequence->events.size();
  }
}

Rational delta_units(const PulseSequence& seq, double delta) {
  Rational units = 0;
  const Rational d(delta);
  for (const auto& e : seq.events) units += Rational(event_duration(e)) / d;
  return units;
}

}  // namespace spinchain
