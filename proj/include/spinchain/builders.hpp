#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinchain/chain.hpp"
#include "spinchain/rational.hpp"
#include "spinchain/sequence.hpp"

namespace spinchain {

enum class SequenceKind { Soliton, IsotropicChain, ConcatenatedInept, IndirectSwapTimingOnly };

std::string kind_name(SequenceKind kind);

struct NamedSequence {
  SequenceKind kind = SequenceKind::Soliton;
  int n = 0;
  // Absent for timing-only kinds.
  std::optional<PulseSequence> sequence;
  // Exact nominal duration in seconds.
  Surd3 nominal;
  // Event index one past the end of each stroboscopic block, with a label
  // per block ("U1", "ULambda", ...).
  std::vector<std::size_t> block_ends;
  std::vector<std::string> block_labels;
  // Zero-duration rotations appended to normalize transfer signs.
  std::vector<HardPulse> sign_corrections;

  double nominal_duration() const { return nominal.value(); }
};

// Pulses of the soliton transfer, step by step. Step s (0-based) applies
// pre[s] then one coupling interval; post follows the last interval.
//   U1      = delay . exp(+i pi/2 I1y) . exp(-i pi/2 I1x)
//   U2      = delay . exp(-i pi/2 (I1x + I2y))
//   ULambda = delay . exp(-i pi/2 Fy)                        (n - 2 times)
//   U(n+1)  = exp(+i pi/2 Inx) . delay . exp(+i pi/2 (Inx - I(n-1)y))
struct SolitonSkeleton {
  std::vector<std::vector<HardPulse>> pre;
  std::vector<HardPulse> post;
  std::vector<std::string> labels;
};

SolitonSkeleton soliton_skeleton(int n);

// Encode / propagate / decode transfer of I1- to In- in (n + 1) delays of
// 1 / (2J). Requires n >= 3.
NamedSequence build_soliton(int n, double j_hz = 1.0);

// n - 1 selective isotropic mixing steps, each three effective-Hamiltonian
// periods (XX, YY, ZZ) of 1 / (2J). Requires n >= 2.
NamedSequence build_isotropic_chain(int n, double j_hz = 1.0);

// Concatenated INEPT transfer of I1x to Inx in n delays of 1 / (2J); only the
// x component is carried. Requires n >= 2.
NamedSequence build_inept(int n, double j_hz = 1.0);

// Duration of the indirect SWAP(k, k+2) strategy in units of 1/J, with a
// final isotropic step for even n. Requires n >= 3.
Surd3 indirect_swap_timing(int n);
NamedSequence build_indirect_swap(int n, double j_hz = 1.0);

// Rotation on the target spin that flips the observed component signs back to
// +1, or nullopt when none is needed. signs holds the real signs of the x, y, z
// overlaps; pass 0 for components that are not carried.
std::optional<HardPulse> sign_fix(int target, int sx, int sy, int sz);

// Measures the source -> target component overlaps and appends sign_fix() when
// needed. With x_only set, only the x component is considered.
void normalize_signs(NamedSequence& named, const ChainSpec& chain, int source, int target,
                     bool x_only = false);

// Sum of event durations divided by delta, exactly.
Rational delta_units(const PulseSequence& seq, double delta);

}  // namespace spinchain
