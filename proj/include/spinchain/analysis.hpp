#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "spinchain/builders.hpp"
#include "spinchain/chain.hpp"
#include "spinchain/dense.hpp"
#include "spinchain/pauli.hpp"
#include "spinchain/rational.hpp"

namespace spinchain {

enum class Backend { Heisenberg, Dense, Both };

inline constexpr double kTransferTolerance = 1e-9;

struct TransferOptions {
  Backend backend = Backend::Heisenberg;
  int oracle_max_spins = kDefaultOracleMaxSpins;
};

struct TransferReport {
  int source = 1;
  int target = 1;
  // Overlap of the evolved I_source,alpha with I_target,alpha for x, y, z.
  std::array<Complex, 3> component_overlaps{};
  double duration = 0.0;
  std::optional<double> backend_residual;
  std::vector<HardPulse> sign_corrections;

  bool component_success(Axis a, double tol = kTransferTolerance) const;
  bool success(double tol = kTransferTolerance) const;
};

TransferReport transfer_report(const PulseSequence& seq, const ChainSpec& chain, int source,
                               int target, const TransferOptions& options = {});
TransferReport transfer_report(const NamedSequence& named, const ChainSpec& chain, int source,
                               int target, const TransferOptions& options = {});

struct DominantTerm {
  std::vector<int> positions;
  std::vector<Axis> axes;
  int weight = 0;
  Complex coeff;
};

struct Snapshot {
  double time = 0.0;
  std::string label;
  OperatorSum op;
  DominantTerm dominant;
};

DominantTerm dominant_term(const OperatorSum& a);

// Snapshot of the start operator, then one after every block boundary. For
// sequences without block marks, a boundary follows each timed event.
std::vector<Snapshot> stroboscopic_track(const NamedSequence& named, const ChainSpec& chain,
                                         const OperatorSum& a);

// Blocks [first, last) of a built sequence, keeping labels.
NamedSequence slice_blocks(const NamedSequence& named, std::size_t first, std::size_t last);

// Totals and per-step averages, all in units of 1/J.
struct TimingRow {
  int n = 0;
  Surd3 tau_conv;
  Surd3 tau_swap;
  Surd3 tau_soliton;
  Surd3 step_conv;
  Surd3 step_swap;
  Surd3 step_soliton;
  Rational ratio;  // tau_soliton / tau_conv
};

TimingRow timing_row(int n);
std::vector<TimingRow> timing_table(int n_max);

// CSV in seconds for coupling j_hz. Columns:
// n,tau_conv,tau_swap,tau_soliton,step_conv,step_swap,step_soliton,ratio
std::string timing_csv(const std::vector<TimingRow>& rows, double j_hz);

struct ExchangeCandidate {
  std::string name;
  double duration = 0.0;
  std::array<Complex, 3> forward{};  // I_1alpha -> I_nalpha
  std::array<Complex, 3> reverse{};  // I_nalpha -> I_1alpha
  // Overlap of the evolved I_kz with itself for interior spins k = 2 .. n-1.
  std::vector<Complex> interior;
  std::optional<double> backend_residual;

  bool forward_ok(double tol = kTransferTolerance) const;
  bool reverse_ok(double tol = kTransferTolerance) const;
};

struct ExchangeReport {
  int n = 0;
  double j_hz = 0.0;
  std::vector<ExchangeCandidate> candidates;
};

// Candidate sequences for simultaneous 1 <-> n exchange on an equal-coupling
// chain: the forward soliton alone, forward followed by its mirror image, and
// the time-shared interleaving of both.
ExchangeReport exchange_experiment(const ChainSpec& chain,
                                   int oracle_max_spins = kDefaultOracleMaxSpins);

}  // namespace spinchain
