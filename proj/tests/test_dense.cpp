#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "random_programs.hpp"
#include "spinchain/dense.hpp"
#include "spinchain/error.hpp"
#include "spinchain/kernels.hpp"

using namespace spinchain;
namespace ks = kernels::serial;
namespace kp = kernels::parallel;

namespace {

std::vector<Complex> random_matrix(std::mt19937& rng, std::size_t dim) {
  std::normal_distribution<double> g;
  std::vector<Complex> m(dim * dim);
  for (auto& z : m) z = {g(rng), g(rng)};
  return m;
}

template <class M>
M random_gate(std::mt19937& rng, int size) {
  std::normal_distribution<double> g;
  M out{};
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) out.m[i][j] = {g(rng), g(rng)};
  return out;
}

oracle::Mat to_eigen(const DenseOperator& d) {
  oracle::Mat m(d.dim(), d.dim());
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = 0; j < d.dim(); ++j) m(i, j) = d(i, j);
  return m;
}

}  // namespace

TEST_CASE("parallel kernels match the serial reference") {
  std::mt19937 rng(5);
  for (int spins = 1; spins <= 6; ++spins) {
    const std::size_t dim = std::size_t{1} << spins;
    const auto a = random_matrix(rng, dim);
    const auto b = random_matrix(rng, dim);
    std::vector<Complex> cs(dim * dim), cp(dim * dim);

    ks::matmul(a, b, cs, dim);
    kp::matmul(a, b, cp, dim);
    CHECK(ks::max_abs_diff(cs, cp) < 1e-12);

    ks::matmul_adjoint(a, b, cs, dim);
    kp::matmul_adjoint(a, b, cp, dim);
    CHECK(ks::max_abs_diff(cs, cp) < 1e-12);

    for (int bit = 0; bit < spins; ++bit) {
      const auto g = random_gate<kernels::Mat2>(rng, 2);
      auto ms = a, mp = a;
      ks::apply_left_1q(ms, dim, bit, g);
      kp::apply_left_1q(mp, dim, bit, g);
      CHECK(ks::max_abs_diff(ms, mp) < 1e-12);
    }
    for (int first = 0; first < spins; ++first) {
      for (int second = 0; second < spins; ++second) {
        if (first == second) continue;
        const auto g = random_gate<kernels::Mat4>(rng, 4);
        auto ms = a, mp = a;
        ks::apply_left_2q(ms, dim, first, second, g);
        kp::apply_left_2q(mp, dim, first, second, g);
        CHECK(ks::max_abs_diff(ms, mp) < 1e-12);
      }
    }
    std::vector<Complex> phases(dim);
    for (std::size_t i = 0; i < dim; ++i) phases[i] = std::polar(1.0, 0.3 * static_cast<double>(i));
    auto ms = a, mp = a;
    ks::scale_rows(ms, dim, phases);
    kp::scale_rows(mp, dim, phases);
    CHECK(ks::max_abs_diff(ms, mp) == 0.0);
    CHECK(kp::max_abs_diff(a, b) == ks::max_abs_diff(a, b));
  }
}

TEST_CASE("serial kernels agree with plain matrix products") {
  std::mt19937 rng(9);
  const std::size_t dim = 8;
  const auto a = random_matrix(rng, dim);
  const auto b = random_matrix(rng, dim);
  std::vector<Complex> c(dim * dim);
  ks::matmul_adjoint(a, b, c, dim);
  oracle::Mat ea(dim, dim), eb(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      ea(i, j) = a[i * dim + j];
      eb(i, j) = b[i * dim + j];
    }
  const oracle::Mat expect = ea * eb.adjoint();
  double worst = 0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) worst = std::max(worst, std::abs(c[i * dim + j] - expect(i, j)));
  CHECK(worst < 1e-12);
}

TEST_CASE("to_dense matches Kronecker products") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> letter(0, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 5;
    OperatorSum a(n);
    for (int t = 0; t < 4; ++t) {
      Letters l(n);
      for (auto& x : l) x = static_cast<PauliLetter>(letter(rng));
      a.accumulate(l, {0.5 * t - 1, 0.25 * t});
    }
    a.prune();
    CHECK(oracle::max_abs(to_eigen(to_dense(a)) - oracle::matrix(a)) < 1e-15);
  }
}

TEST_CASE("dense propagator equals the product of matrix exponentials") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 4;
    const auto chain = testgen::random_chain(rng, n, 0.5, 2.0);
    const auto seq = testgen::random_sequence(rng, n, 10, true);
    const auto u = dense_propagator(seq, chain);
    CHECK(oracle::max_abs(to_eigen(u) - oracle::propagator(seq, chain)) < 1e-11);
    CHECK(unitarity_defect(u) < 1e-12);
  }
}

TEST_CASE("oracle size cap") {
  PulseSequence seq{"", 5, {}};
  CHECK_THROWS_AS(dense_propagator(seq, ChainSpec::uniform(5, 1.0), 4), ResourceError);
  CHECK_NOTHROW(dense_propagator(seq, ChainSpec::uniform(5, 1.0), 5));
}

TEST_CASE("dense overlap") {
  const auto x = to_dense(OperatorSum(spin_operator(1, Axis::X, 2)));
  const auto y = to_dense(OperatorSum(spin_operator(1, Axis::Y, 2)));
  CHECK(std::abs(dense_overlap(x, x) - 1.0) < 1e-15);
  CHECK(std::abs(dense_overlap(x, y)) < 1e-15);
}
