#include <algorithm>
#include <cmath>
#include <cstdint>

#include "spinchain/kernels.hpp"

namespace spinchain::kernels::parallel {

// Loop indices are signed for OpenMP; dim never exceeds 2^oracle_max_spins.
using Index = std::int64_t;

void apply_left_1q(std::span<Complex> m, std::size_t dim, int bit, const Mat2& g) {
  const Index mask = Index{1} << bit;
  const Index half = static_cast<Index>(dim) / 2;
  const Index d = static_cast<Index>(dim);
  Complex* data = m.data();
#pragma omp parallel for schedule(static)
  for (Index p = 0; p < half; ++p) {
    // p enumerates indices with `bit` cleared.
    const Index i0 = ((p >> bit) << (bit + 1)) | (p & (mask - 1));
    Complex* r0 = data + i0 * d;
    Complex* r1 = data + (i0 | mask) * d;
    for (Index j = 0; j < d; ++j) {
      const Complex a = r0[j], b = r1[j];
      r0[j] = g.m[0][0] * a + g.m[0][1] * b;
      r1[j] = g.m[1][0] * a + g.m[1][1] * b;
    }
  }
}

void apply_left_2q(std::span<Complex> m, std::size_t dim, int first, int second, const Mat4& g) {
  const Index mf = Index{1} << first, ms = Index{1} << second;
  const Index d = static_cast<Index>(dim);
  Complex* data = m.data();
#pragma omp parallel for schedule(static)
  for (Index base = 0; base < d; ++base) {
    if (base & (mf | ms)) continue;
    const Index idx[4] = {base, base | ms, base | mf, base | mf | ms};
    Complex* rows[4];
    for (int r = 0; r < 4; ++r) rows[r] = data + idx[r] * d;
    for (Index j = 0; j < d; ++j) {
      Complex v[4];
      for (int r = 0; r < 4; ++r) v[r] = rows[r][j];
      for (int r = 0; r < 4; ++r) {
        rows[r][j] = g.m[r][0] * v[0] + g.m[r][1] * v[1] + g.m[r][2] * v[2] + g.m[r][3] * v[3];
      }
    }
  }
}

void scale_rows(std::span<Complex> m, std::size_t dim, std::span<const Complex> phases) {
  const Index d = static_cast<Index>(dim);
  Complex* data = m.data();
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < d; ++i) {
    const Complex ph = phases[static_cast<std::size_t>(i)];
    for (Index j = 0; j < d; ++j) data[i * d + j] *= ph;
  }
}

void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
            std::size_t dim) {
  const Index d = static_cast<Index>(dim);
  const Complex* pa = a.data();
  const Complex* pb = b.data();
  Complex* pc = c.data();
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < d; ++i) {
    Complex* ci = pc + i * d;
    std::fill(ci, ci + d, Complex{});
    for (Index k = 0; k < d; ++k) {
      const Complex aik = pa[i * d + k];
      if (aik == Complex{}) continue;
      const Complex* bk = pb + k * d;
      for (Index j = 0; j < d; ++j) ci[j] += aik * bk[j];
    }
  }
}

void matmul_adjoint(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
                    std::size_t dim) {
  const Index d = static_cast<Index>(dim);
  const Complex* pa = a.data();
  const Complex* pb = b.data();
  Complex* pc = c.data();
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      Complex s{};
      for (Index k = 0; k < d; ++k) s += pa[i * d + k] * std::conj(pb[j * d + k]);
      pc[i * d + j] = s;
    }
  }
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  const Index size = static_cast<Index>(a.size());
  double worst = 0.0;
#pragma omp parallel for reduction(max : worst) schedule(static)
  for (Index i = 0; i < size; ++i) {
    worst = std::max(worst, std::abs(a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)]));
  }
  return worst;
}

}  // namespace spinchain::kernels::parallel
