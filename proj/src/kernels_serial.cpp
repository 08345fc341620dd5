#include <algorithm>
#include <cmath>

#include "spinchain/kernels.hpp"

namespace spinchain::kernels::serial {

void apply_left_1q(std::span<Complex> m, std::size_t dim, int bit, const Mat2& g) {
  const std::size_t mask = std::size_t{1} << bit;
  for (std::size_t i0 = 0; i0 < dim; ++i0) {
    if (i0 & mask) continue;
    Complex* r0 = m.data() + i0 * dim;
    Complex* r1 = m.data() + (i0 | mask) * dim;
    for (std::size_t j = 0; j < dim; ++j) {
      const Complex a = r0[j], b = r1[j];
      r0[j] = g.m[0][0] * a + g.m[0][1] * b;
      r1[j] = g.m[1][0] * a + g.m[1][1] * b;
    }
  }
}

void apply_left_2q(std::span<Complex> m, std::size_t dim, int first, int second, const Mat4& g) {
  const std::size_t mf = std::size_t{1} << first, ms = std::size_t{1} << second;
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & (mf | ms)) continue;
    const std::size_t idx[4] = {base, base | ms, base | mf, base | mf | ms};
    Complex* rows[4];
    for (int r = 0; r < 4; ++r) rows[r] = m.data() + idx[r] * dim;
    for (std::size_t j = 0; j < dim; ++j) {
      Complex v[4];
      for (int r = 0; r < 4; ++r) v[r] = rows[r][j];
      for (int r = 0; r < 4; ++r) {
        rows[r][j] = g.m[r][0] * v[0] + g.m[r][1] * v[1] + g.m[r][2] * v[2] + g.m[r][3] * v[3];
      }
    }
  }
}

void scale_rows(std::span<Complex> m, std::size_t dim, std::span<const Complex> phases) {
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) m[i * dim + j] *= phases[i];
  }
}

void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
            std::size_t dim) {
  std::fill(c.begin(), c.end(), Complex{});
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = 0; k < dim; ++k) {
      const Complex aik = a[i * dim + k];
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < dim; ++j) c[i * dim + j] += aik * b[k * dim + j];
    }
  }
}

void matmul_adjoint(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
                    std::size_t dim) {
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Complex s{};
      for (std::size_t k = 0; k < dim; ++k) s += a[i * dim + k] * std::conj(b[j * dim + k]);
      c[i * dim + j] = s;
    }
  }
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace spinchain::kernels::serial
