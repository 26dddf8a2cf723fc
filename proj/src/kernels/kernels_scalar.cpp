#include "qsim/kernels/kernels.hpp"

namespace qsim::kernels::scalar {

void apply_front(const cxd* u, std::size_t d, const cxd* x, cxd* y, std::size_t r) {
  for (std::size_t t = 0; t < d; ++t) {
    cxd* yt = y + t * r;
    for (std::size_t c = 0; c < r; ++c) yt[c] = cxd(0.0, 0.0);
    for (std::size_t s = 0; s < d; ++s) {
      const cxd uts = u[t * d + s];
      const cxd* xs = x + s * r;
      for (std::size_t c = 0; c < r; ++c) yt[c] += uts * xs[c];
    }
  }
}

cxd cdot(const cxd* a, const cxd* b, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += ar * br + ai * bi;
    im += ar * bi - ai * br;
  }
  return {re, im};
}

double sum_norm2(const cxd* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  }
  return acc;
}

void gram(const cxd* m, std::size_t rows, std::size_t cols, cxd* out) {
  for (std::size_t i = 0; i < rows; ++i) {
    out[i * rows + i] = cxd(sum_norm2(m + i * cols, cols), 0.0);
    for (std::size_t j = 0; j < i; ++j) {
      // out(i,j) = Σ_t m(i,t)·conj(m(j,t)) = conj(cdot(m_i, m_j))
      const cxd v = std::conj(cdot(m + i * cols, m + j * cols, cols));
      out[i * rows + j] = v;
      out[j * rows + i] = std::conj(v);
    }
  }
}

}  // namespace qsim::kernels::scalar
