#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spinchain/chain.hpp"
#include "spinchain/kernels.hpp"
#include "spinchain/pauli.hpp"
#include "spinchain/sequence.hpp"

namespace spinchain {

inline constexpr int kDefaultOracleMaxSpins = 12;

// 2^n x 2^n complex matrix, row-major. Spin k (1-based) is basis bit n - k,
// i.e. spin 1 is the leftmost Kronecker factor.
class DenseOperator {
 public:
  explicit DenseOperator(int spins);

  static DenseOperator identity(int spins);

  int spins() const { return spins_; }
  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  std::span<Complex> data() { return data_; }
  std::span<const Complex> data() const { return data_; }

  DenseOperator adjoint() const;
  double max_norm_diff(const DenseOperator& other) const;

  friend DenseOperator operator*(const DenseOperator& a, const DenseOperator& b);

 private:
  int spins_;
  std::size_t dim_;
  std::vector<Complex> data_;
};

int spin_bit(int spin, int n);

// exp(-i * angle * sigma_axis / 2)
kernels::Mat2 rotation_matrix(Axis axis, double angle);

// exp(-i * angle * 2 I_axis (x) I_axis), built from the diagonal ZZ phase by a
// single-spin change of basis.
kernels::Mat4 pair_matrix(Axis axis, double angle);

DenseOperator to_dense(const OperatorSum& a);

// U <- U_event * U
void apply_event_left(DenseOperator& u, const SequenceEvent& event, const ChainSpec& chain);

// Ordered product of event propagators; the first event is the rightmost
// factor. Throws ResourceError when the chain exceeds max_spins.
DenseOperator dense_propagator(const PulseSequence& seq, const ChainSpec& chain,
                               int max_spins = kDefaultOracleMaxSpins);

// U A U^dagger
DenseOperator conjugate(const DenseOperator& u, const DenseOperator& a);

// max |U^dagger U - 1|
double unitarity_defect(const DenseOperator& u);

// Tr(B^dagger A) / sqrt(Tr(A^dagger A) Tr(B^dagger B))
Complex dense_overlap(const DenseOperator& a, const DenseOperator& b);

// Max-norm distance between the Heisenberg-engine result and the oracle's
// U A U^dagger.
double backend_agreement(const PulseSequence& seq, const ChainSpec& chain, const OperatorSum& a,
                         int max_spins = kDefaultOracleMaxSpins);

void require_oracle_size(int n, int max_spins);

}  // namespace spinchain
