#include "spinchain/dense.hpp"

#include <cmath>
#include <numbers>

#include "spinchain/engine.hpp"
#include "spinchain/error.hpp"

namespace spinchain {

namespace kp = kernels::parallel;
using kernels::Mat2;
using kernels::Mat4;

namespace {

// Pauli matrices indexed by PauliLetter.
const Complex kSigma[4][2][2] = {
    {{1.0, 0.0}, {0.0, 1.0}},
    {{0.0, 1.0}, {1.0, 0.0}},
    {{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}},
    {{1.0, 0.0}, {0.0, -1.0}},
};

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 c{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c.m[i][j] = a.m[i / 2][j / 2] * b.m[i % 2][j % 2];
  return c;
}

Mat4 mul(const Mat4& a, const Mat4& b) {
  Mat4 c{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) c.m[i][j] += a.m[i][k] * b.m[k][j];
  return c;
}

Mat4 dagger(const Mat4& a) {
  Mat4 c{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c.m[i][j] = std::conj(a.m[j][i]);
  return c;
}

// B with B Z B^dagger = sigma_axis.
Mat2 basis_change(Axis axis) {
  switch (axis) {
    case Axis::X: return rotation_matrix(Axis::Y, std::numbers::pi / 2);
    case Axis::Y: return rotation_matrix(Axis::X, -std::numbers::pi / 2);
    case Axis::Z: return Mat2{{{1.0, 0.0}, {0.0, 1.0}}};
  }
  return {};
}

}  // namespace

DenseOperator::DenseOperator(int spins)
    : spins_(spins), dim_(std::size_t{1} << spins), data_(dim_ * dim_) {
  if (spins < 1 || spins > 20) throw ResourceError("dense operator size out of range");
}

DenseOperator DenseOperator::identity(int spins) {
  DenseOperator u(spins);
  for (std::size_t i = 0; i < u.dim_; ++i) u(i, i) = 1.0;
  return u;
}

DenseOperator DenseOperator::adjoint() const {
  DenseOperator out(spins_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

double DenseOperator::max_norm_diff(const DenseOperator& other) const {
  if (other.dim_ != dim_) throw DimensionError("dense operator size mismatch");
  return kp::max_abs_diff(data_, other.data_);
}

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim_ != b.dim_) throw DimensionError("dense operator size mismatch");
  DenseOperator c(a.spins_);
  kp::matmul(a.data_, b.data_, c.data_, a.dim_);
  return c;
}

int spin_bit(int spin, int n) { return n - spin; }

Mat2 rotation_matrix(Axis axis, double angle) {
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  const auto& sig = kSigma[static_cast<int>(axis)];
  Mat2 g{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g.m[i][j] = (i == j ? c : 0.0) - Complex{0.0, s} * sig[i][j];
  return g;
}

Mat4 pair_matrix(Axis axis, double angle) {
  // angle * 2 I I = (angle / 2) Z Z in the rotated basis.
  Mat4 diag{};
  for (int idx = 0; idx < 4; ++idx) {
    const double za = (idx & 2) ? -1.0 : 1.0, zb = (idx & 1) ? -1.0 : 1.0;
    diag.m[idx][idx] = std::exp(Complex{0.0, -angle / 2 * za * zb});
  }
  const Mat2 b = basis_change(axis);
  const Mat4 bb = kron(b, b);
  return mul(mul(bb, diag), dagger(bb));
}

DenseOperator to_dense(const OperatorSum& a) {
  const int n = a.n();
  DenseOperator out(n);
  const auto dim = static_cast<std::int64_t>(out.dim());
  for (const auto& [letters, coeff] : a.terms()) {
    std::int64_t flip = 0;
    for (int k = 1; k <= n; ++k) {
      const auto l = letters[static_cast<std::size_t>(k - 1)];
      if (l == PauliLetter::X || l == PauliLetter::Y) flip |= std::int64_t{1} << spin_bit(k, n);
    }
    const Complex c = coeff;
    const auto* lp = letters.data();
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < dim; ++i) {
      const std::int64_t j = i ^ flip;
      Complex v = c;
      for (int k = 1; k <= n; ++k) {
        const int bit = spin_bit(k, n);
        v *= kSigma[static_cast<int>(lp[k - 1])][(i >> bit) & 1][(j >> bit) & 1];
      }
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) += v;
    }
  }
  return out;
}

void apply_event_left(DenseOperator& u, const SequenceEvent& event, const ChainSpec& chain) {
  const int n = chain.n();
  if (u.spins() != n) throw DimensionError("propagator and chain lengths differ");
  if (const auto* p = std::get_if<HardPulse>(&event)) {
    const Mat2 g = rotation_matrix(p->axis, p->angle);
    if (p->targets.all) {
      for (int k = 1; k <= n; ++k) kp::apply_left_1q(u.data(), u.dim(), spin_bit(k, n), g);
    } else {
      for (int k : p->targets.spins) {
        if (k < 1 || k > n) throw IndexError("pulse target outside chain");
        kp::apply_left_1q(u.data(), u.dim(), spin_bit(k, n), g);
      }
    }
    return;
  }
  if (const auto* e = std::get_if<EffectivePair>(&event)) {
    if (e->a < 1 || e->a > n || e->b < 1 || e->b > n) throw IndexError("pair spin outside chain");
    if (e->a == e->b) throw ArgumentError("effective pair needs two distinct spins");
    kp::apply_left_2q(u.data(), u.dim(), spin_bit(e->a, n), spin_bit(e->b, n),
                      pair_matrix(e->axis, e->angle));
    return;
  }
  const auto& d = std::get<CouplingDelay>(event);
  std::vector<int> active;
  if (d.active) {
    active = *d.active;
  } else {
    for (int c = 1; c < n; ++c) active.push_back(c);
  }
  // Diagonal: exp(-i t sum_c 2 pi J_c z_c z_{c+1} / 4).
  std::vector<Complex> phases(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) {
    double theta = 0.0;
    for (int c : active) {
      const double zc = (i >> spin_bit(c, n)) & 1 ? -1.0 : 1.0;
      const double zn = (i >> spin_bit(c + 1, n)) & 1 ? -1.0 : 1.0;
      theta += std::numbers::pi / 2 * chain.coupling(c) * d.duration * zc * zn;
    }
    phases[i] = std::exp(Complex{0.0, -theta});
  }
  kp::scale_rows(u.data(), u.dim(), phases);
}

void require_oracle_size(int n, int max_spins) {
  if (n > max_spins) {
    throw ResourceError("dense oracle limited to " + std::to_string(max_spins) + " spins, chain has " +
                        std::to_string(n));
  }
}

DenseOperator dense_propagator(const PulseSequence& seq, const ChainSpec& chain, int max_spins) {
  require_oracle_size(chain.n(), max_spins);
  if (seq.n != chain.n()) throw DimensionError("sequence and chain lengths differ");
  DenseOperator u = DenseOperator::identity(chain.n());
  for (const auto& e : seq.events) apply_event_left(u, e, chain);
  return u;
}

DenseOperator conjugate(const DenseOperator& u, const DenseOperator& a) {
  if (u.dim() != a.dim()) throw DimensionError("dense operator size mismatch");
  DenseOperator ua = u * a;
  DenseOperator out(u.spins());
  kp::matmul_adjoint(ua.data(), u.data(), out.data(), u.dim());
  return out;
}

double unitarity_defect(const DenseOperator& u) {
  const DenseOperator id = DenseOperator::identity(u.spins());
  return (u.adjoint() * u).max_norm_diff(id);
}

Complex dense_overlap(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim() != b.dim()) throw DimensionError("dense operator size mismatch");
  Complex dot{};
  double na = 0.0, nb = 0.0;
  const auto da = a.data(), db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) {
    dot += std::conj(db[i]) * da[i];
    na += std::norm(da[i]);
    nb += std::norm(db[i]);
  }
  if (na == 0.0 || nb == 0.0) throw UndefinedOverlapError("overlap with the zero operator");
  return dot / std::sqrt(na * nb);
}

double backend_agreement(const PulseSequence& seq, const ChainSpec& chain, const OperatorSum& a,
                         int max_spins) {
  require_oracle_size(chain.n(), max_spins);
  const DenseOperator u = dense_propagator(seq, chain, max_spins);
  const DenseOperator heisenberg = to_dense(apply_sequence(a, seq, chain));
  return heisenberg.max_norm_diff(conjugate(u, to_dense(a)));
}

}  // namespace spinchain
