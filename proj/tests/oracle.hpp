#pragma once

// Independent reference built from Kronecker products and a general matrix
// exponential. Shares no code with the library's dense backend.

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#include <complex>
#include <numbers>
#include <variant>

#include "spinchain/chain.hpp"
#include "spinchain/pauli.hpp"
#include "spinchain/sequence.hpp"

namespace oracle {

using Mat = Eigen::MatrixXcd;
using C = std::complex<double>;

inline Mat sigma(spinchain::PauliLetter l) {
  Mat m(2, 2);
  switch (l) {
    case spinchain::PauliLetter::I: m << 1, 0, 0, 1; break;
    case spinchain::PauliLetter::X: m << 0, 1, 1, 0; break;
    case spinchain::PauliLetter::Y: m << 0, C(0, -1), C(0, 1), 0; break;
    case spinchain::PauliLetter::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Spin 1 is the leftmost factor.
inline Mat string_matrix(const spinchain::Letters& letters) {
  Mat m = Mat::Identity(1, 1);
  for (auto l : letters) m = kron(m, sigma(l));
  return m;
}

inline Mat matrix(const spinchain::OperatorSum& a) {
  const auto dim = Eigen::Index{1} << a.n();
  Mat m = Mat::Zero(dim, dim);
  for (const auto& [letters, c] : a.terms()) m += c * string_matrix(letters);
  return m;
}

// I_{k axis} = sigma / 2
inline Mat spin(int k, spinchain::Axis axis, int n) {
  return matrix(spinchain::OperatorSum(spinchain::spin_operator(k, axis, n)));
}

inline Mat generator(const spinchain::SequenceEvent& e, const spinchain::ChainSpec& chain) {
  using namespace spinchain;
  const int n = chain.n();
  const auto dim = Eigen::Index{1} << n;
  Mat g = Mat::Zero(dim, dim);
  if (const auto* p = std::get_if<HardPulse>(&e)) {
    if (p->targets.all) {
      for (int k = 1; k <= n; ++k) g += p->angle * spin(k, p->axis, n);
    } else {
      for (int k : p->targets.spins) g += p->angle * spin(k, p->axis, n);
    }
  } else if (const auto* d = std::get_if<CouplingDelay>(&e)) {
    for (int c = 1; c < n; ++c) {
      if (d->active && std::find(d->active->begin(), d->active->end(), c) == d->active->end()) continue;
      g += 2 * std::numbers::pi * chain.coupling(c) * d->duration * spin(c, Axis::Z, n) *
           spin(c + 1, Axis::Z, n);
    }
  } else {
    const auto& q = std::get<EffectivePair>(e);
    g += q.angle * 2.0 * spin(q.a, q.axis, n) * spin(q.b, q.axis, n);
  }
  return g;
}

inline Mat propagator(const spinchain::PulseSequence& seq, const spinchain::ChainSpec& chain) {
  const auto dim = Eigen::Index{1} << chain.n();
  Mat u = Mat::Identity(dim, dim);
  for (const auto& e : seq.events) {
    const Mat g = generator(e, chain);
    const Mat step = (C(0, -1) * g).exp();
    u = step * u;
  }
  return u;
}

inline Mat evolve(const spinchain::OperatorSum& a, const spinchain::PulseSequence& seq,
                  const spinchain::ChainSpec& chain) {
  const Mat u = propagator(seq, chain);
  return u * matrix(a) * u.adjoint();
}

inline double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

inline C overlap(const Mat& a, const Mat& b) {
  const C num = (b.adjoint() * a).trace();
  return num / std::sqrt((a.adjoint() * a).trace().real() * (b.adjoint() * b).trace().real());
}

}  // namespace oracle
