#pragma once

#include "spinchain/chain.hpp"
#include "spinchain/pauli.hpp"
#include "spinchain/sequence.hpp"

namespace spinchain {

// All evolution here is conjugation A -> U A U^dagger with U = exp(-i G).
//
// Rotation convention: U = exp(-i * angle * sum I_{k axis}) maps
//   I_beta -> cos(angle) I_beta + eps(axis, beta, gamma) sin(angle) I_gamma,
// so a +90 degree y rotation takes I_z to +I_x.

// Conjugation by exp(-i phi h) for a Pauli string h with h^2 = 1, where
// two_phi = 2 phi:  P -> P if [h, P] = 0, else cos(2 phi) P - i sin(2 phi) h P.
OperatorSum conjugate_unit_string(const OperatorSum& a, const Letters& h, double two_phi);

OperatorSum rotate(const OperatorSum& a, const Targets& targets, Axis axis, double angle);

// Evolution under 2 pi J I_{kz} I_{k+1,z} for t seconds.
OperatorSum evolve_coupling(const OperatorSum& a, int k, double j_hz, double t);

// Conjugation by exp(-i * angle * 2 I_{a axis} I_{b axis}).
OperatorSum evolve_effective(const OperatorSum& a, int spin_a, int spin_b, Axis axis,
                             double angle);

OperatorSum apply_event(const OperatorSum& a, const SequenceEvent& event, const ChainSpec& chain);

// Folds the events left to right; the first event acts first.
OperatorSum apply_sequence(const OperatorSum& a, const PulseSequence& seq, const ChainSpec& chain);

}  // namespace spinchain
