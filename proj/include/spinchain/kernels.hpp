#pragma once

#include <complex>
#include <cstddef>
#include <span>

// Dense row-major complex matrix kernels behind the oracle backend. The
// `parallel` variants use OpenMP; `serial` is the reference the tests and the
// benchmark compare against.
namespace spinchain::kernels {

using Complex = std::complex<double>;

struct Mat2 {
  Complex m[2][2];
};

// Local basis index is 2 * bit(first) + bit(second).
struct Mat4 {
  Complex m[4][4];
};

namespace serial {

// M <- G * M with G acting on basis bit `bit`.
void apply_left_1q(std::span<Complex> m, std::size_t dim, int bit, const Mat2& g);
// M <- G * M with G acting on bits (first, second).
void apply_left_2q(std::span<Complex> m, std::size_t dim, int first, int second, const Mat4& g);
// Row i scaled by phases[i]; a left product with a diagonal matrix.
void scale_rows(std::span<Complex> m, std::size_t dim, std::span<const Complex> phases);
// C = A B
void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
            std::size_t dim);
// C = A B^dagger
void matmul_adjoint(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
                    std::size_t dim);
double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace serial

namespace parallel {

void apply_left_1q(std::span<Complex> m, std::size_t dim, int bit, const Mat2& g);
void apply_left_2q(std::span<Complex> m, std::size_t dim, int first, int second, const Mat4& g);
void scale_rows(std::span<Complex> m, std::size_t dim, std::span<const Complex> phases);
void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
            std::size_t dim);
void matmul_adjoint(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
                    std::size_t dim);
double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace parallel

}  // namespace spinchain::kernels
