#include "spinchain/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "spinchain/engine.hpp"
#include "spinchain/error.hpp"
#include "spinchain/format.hpp"

namespace spinchain {

namespace {

OperatorSum component(int k, Axis a, int n) { return OperatorSum(spin_operator(k, a, n)); }

void check_spin(int k, int n) {
  if (k < 1 || k > n) throw IndexError("spin " + std::to_string(k) + " outside chain");
}

Complex safe_overlap(const OperatorSum& a, const OperatorSum& b) {
  if (a.empty() || b.empty()) return 0.0;
  return overlap(a, b);
}

}  // namespace

bool TransferReport::component_success(Axis a, double tol) const {
  const auto i = static_cast<std::size_t>(static_cast<int>(a) - 1);
  return std::abs(std::abs(component_overlaps[i]) - 1.0) <= tol;
}

bool TransferReport::success(double tol) const {
  return std::all_of(std::begin(kAxes), std::end(kAxes),
                     [&](Axis a) { return component_success(a, tol); });
}

TransferReport transfer_report(const PulseSequence& seq, const ChainSpec& chain, int source,
                               int target, const TransferOptions& options) {
  const int n = chain.n();
  check_spin(source, n);
  check_spin(target, n);
  TransferReport r;
  r.source = source;
  r.target = target;
  r.duration = seq.total_duration();

  std::optional<DenseOperator> u;
  if (options.backend != Backend::Heisenberg) {
    u = dense_propagator(seq, chain, options.oracle_max_spins);
  }
  double residual = 0.0;
  for (int i = 0; i < 3; ++i) {
    const Axis a = kAxes[i];
    const auto src = component(source, a, n);
    const auto dst = component(target, a, n);
    if (options.backend == Backend::Dense) {
      r.component_overlaps[i] = dense_overlap(conjugate(*u, to_dense(src)), to_dense(dst));
      continue;
    }
    const auto evolved = apply_sequence(src, seq, chain);
    r.component_overlaps[i] = safe_overlap(evolved, dst);
    if (u) {
      residual = std::max(residual, to_dense(evolved).max_norm_diff(conjugate(*u, to_dense(src))));
    }
  }
  if (options.backend == Backend::Both) r.backend_residual = residual;
  return r;
}

TransferReport transfer_report(const NamedSequence& named, const ChainSpec& chain, int source,
                               int target, const TransferOptions& options) {
  if (!named.sequence) {
    throw ArgumentError("'" + kind_name(named.kind) + "' is a timing model without dynamics");
  }
  auto r = transfer_report(*named.sequence, chain, source, target, options);
  r.sign_corrections = named.sign_corrections;
  return r;
}

DominantTerm dominant_term(const OperatorSum& a) {
  DominantTerm d;
  const OperatorSum::TermMap::value_type* best = nullptr;
  for (const auto& kv : a.terms()) {
    if (!best || std::abs(kv.second) > std::abs(best->second) + 1e-12 ||
        (std::abs(std::abs(kv.second) - std::abs(best->second)) <= 1e-12 &&
         display_less(kv.first, best->first))) {
      best = &kv;
    }
  }
  if (!best) return d;
  for (std::size_t i = 0; i < best->first.size(); ++i) {
    if (best->first[i] == PauliLetter::I) continue;
    d.positions.push_back(static_cast<int>(i + 1));
    d.axes.push_back(static_cast<Axis>(best->first[i]));
  }
  d.weight = static_cast<int>(d.positions.size());
  d.coeff = best->second;
  return d;
}

std::vector<Snapshot> stroboscopic_track(const NamedSequence& named, const ChainSpec& chain,
                                         const OperatorSum& a) {
  if (!named.sequence) throw ArgumentError("timing-only sequence has no dynamics to track");
  const auto& events = named.sequence->events;
  if (named.sequence->n != chain.n()) throw DimensionError("sequence and chain lengths differ");

  std::vector<std::size_t> ends = named.block_ends;
  std::vector<std::string> labels = named.block_labels;
  if (ends.empty()) {
    for (std::size_t i = 0; i < events.size(); ++i) {
      if (event_duration(events[i]) > 0.0) {
        ends.push_back(i + 1);
        labels.push_back("t" + std::to_string(ends.size()));
      }
    }
    if (!events.empty() && (ends.empty() || ends.back() != events.size())) {
      ends.push_back(events.size());
      labels.push_back("end");
    }
  }

  std::vector<Snapshot> out;
  OperatorSum op = a;
  out.push_back({0.0, "start", op, dominant_term(op)});
  double t = 0.0;
  std::size_t next = 0;
  for (std::size_t b = 0; b < ends.size(); ++b) {
    for (; next < ends[b]; ++next) {
      op = apply_event(op, events[next], chain);
      t += event_duration(events[next]);
    }
    out.push_back({t, labels[b], op, dominant_term(op)});
  }
  return out;
}

NamedSequence slice_blocks(const NamedSequence& named, std::size_t first, std::size_t last) {
  if (!named.sequence) throw ArgumentError("timing-only sequence has no blocks");
  if (first > last || last > named.block_ends.size()) throw IndexError("block range out of bounds");
  NamedSequence out;
  out.kind = named.kind;
  out.n = named.n;
  out.sequence = PulseSequence{named.sequence->name, named.n, {}};
  const std::size_t begin = first == 0 ? 0 : named.block_ends[first - 1];
  for (std::size_t b = first; b < last; ++b) {
    const std::size_t start = b == 0 ? 0 : named.block_ends[b - 1];
    for (std::size_t i = start; i < named.block_ends[b]; ++i) {
      out.sequence->events.push_back(named.sequence->events[i]);
    }
    out.block_ends.push_back(named.block_ends[b] - begin);
    out.block_labels.push_back(named.block_labels[b]);
  }
  Rational total = 0;
  for (const auto& e : out.sequence->events) total += Rational(event_duration(e));
  out.nominal = Surd3(total);
  return out;
}

TimingRow timing_row(int n) {
  if (n < 3) throw UnsupportedLengthError("timing table starts at n = 3");
  TimingRow r;
  r.n = n;
  const Rational steps(n - 1);
  r.tau_conv = Surd3(Rational(3 * (n - 1), 2));
  r.tau_swap = indirect_swap_timing(n);
  r.tau_soliton = Surd3(Rational(n + 1, 2));
  r.step_conv = r.tau_conv / steps;
  r.step_swap = r.tau_swap / steps;
  r.step_soliton = r.tau_soliton / steps;
  r.ratio = r.tau_soliton.a / r.tau_conv.a;
  return r;
}

std::vector<TimingRow> timing_table(int n_max) {
  if (n_max < 3) throw ArgumentError("n_max must be at least 3");
  std::vector<TimingRow> rows;
  for (int n = 3; n <= n_max; ++n) rows.push_back(timing_row(n));
  return rows;
}

std::string timing_csv(const std::vector<TimingRow>& rows, double j_hz) {
  std::string out = "n,tau_conv,tau_swap,tau_soliton,step_conv,step_swap,step_soliton,ratio\n";
  const auto sec = [&](const Surd3& s) { return format_number(s.value() / j_hz); };
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + sec(r.tau_conv) + "," + sec(r.tau_swap) + "," +
           sec(r.tau_soliton) + "," + sec(r.step_conv) + "," + sec(r.step_swap) + "," +
           sec(r.step_soliton) + "," + format_number(to_double(r.ratio)) + "\n";
  }
  return out;
}

bool ExchangeCandidate::forward_ok(double tol) const {
  return std::all_of(forward.begin(), forward.end(),
                     [&](Complex z) { return std::abs(std::abs(z) - 1.0) <= tol; });
}

bool ExchangeCandidate::reverse_ok(double tol) const {
  return std::all_of(reverse.begin(), reverse.end(),
                     [&](Complex z) { return std::abs(std::abs(z) - 1.0) <= tol; });
}

namespace {

PulseSequence interleaved_exchange(int n, double j_hz) {
  const auto fwd = soliton_skeleton(n);
  PulseSequence seq{"soliton-exchange-interleaved", n, {}};
  const auto mirror = [n](const std::vector<HardPulse>& pulses) {
    PulseSequence tmp{"", n, {}};
    for (const auto& p : pulses) tmp.events.emplace_back(p);
    std::vector<HardPulse> out;
    for (const auto& e : mirror_sequence(tmp).events) out.push_back(std::get<HardPulse>(e));
    return out;
  };
  for (std::size_t s = 0; s < fwd.pre.size(); ++s) {
    const auto& a = fwd.pre[s];
    const auto b = mirror(a);
    for (const auto& p : a) seq.events.emplace_back(p);
    // Shared non-selective pulses are applied once.
    if (b != a) {
      for (const auto& p : b) seq.events.emplace_back(p);
    }
    seq.delay(1.0 / (2.0 * j_hz));
  }
  for (const auto& p : fwd.post) seq.events.emplace_back(p);
  for (const auto& p : mirror(fwd.post)) seq.events.emplace_back(p);
  return seq;
}

ExchangeCandidate evaluate(std::string name, const PulseSequence& seq, const ChainSpec& chain,
                           int oracle_max_spins) {
  const int n = chain.n();
  ExchangeCandidate c;
  c.name = std::move(name);
  c.duration = seq.total_duration();
  for (int i = 0; i < 3; ++i) {
    const Axis a = kAxes[i];
    c.forward[i] = safe_overlap(apply_sequence(component(1, a, n), seq, chain), component(n, a, n));
    c.reverse[i] = safe_overlap(apply_sequence(component(n, a, n), seq, chain), component(1, a, n));
  }
  for (int k = 2; k < n; ++k) {
    const auto z = component(k, Axis::Z, n);
    c.interior.push_back(safe_overlap(apply_sequence(z, seq, chain), z));
  }
  if (n <= oracle_max_spins) {
    double worst = 0.0;
    for (Axis a : kAxes) {
      worst = std::max(worst, backend_agreement(seq, chain, component(1, a, n), oracle_max_spins));
      worst = std::max(worst, backend_agreement(seq, chain, component(n, a, n), oracle_max_spins));
    }
    c.backend_residual = worst;
  }
  return c;
}

}  // namespace

ExchangeReport exchange_experiment(const ChainSpec& chain, int oracle_max_spins) {
  const int n = chain.n();
  if (n < 3) throw UnsupportedLengthError("exchange experiment needs at least 3 spins");
  if (!chain.is_uniform()) throw ArgumentError("exchange experiment needs equal couplings");
  require_oracle_size(n, oracle_max_spins);
  const double j = chain.coupling(1);

  ExchangeReport report;
  report.n = n;
  report.j_hz = j;
  const auto forward = *build_soliton(n, j).sequence;
  report.candidates.push_back(evaluate("forward", forward, chain, oracle_max_spins));

  PulseSequence composed = forward;
  composed.name = "soliton-exchange-mirror-composed";
  for (const auto& e : mirror_sequence(forward).events) composed.events.push_back(e);
  report.candidates.push_back(evaluate("mirror_composed", composed, chain, oracle_max_spins));

  report.candidates.push_back(
      evaluate("interleaved", interleaved_exchange(n, j), chain, oracle_max_spins));
  return report;
}

}  // namespace spinchain
