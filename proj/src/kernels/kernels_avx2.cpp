// AVX2/FMA kernel variants. This file is compiled with -mavx2 -mfma only;
// callers must check backend support before dispatching here. One __m256d
// holds two interleaved std::complex<double>.

#include "qsim/kernels/kernels.hpp"

#if defined(QSIM_HAVE_AVX2_KERNELS)

#include <immintrin.h>

namespace qsim::kernels::avx2 {

namespace {

// (a0·b0, a1·b1) for interleaved complex pairs.
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d are = _mm256_movedup_pd(a);
  const __m256d aim = _mm256_permute_pd(a, 0xF);
  const __m256d bsw = _mm256_permute_pd(b, 0x5);
  return _mm256_fmaddsub_pd(are, b, _mm256_mul_pd(aim, bsw));
}

// (conj(a0)·b0, conj(a1)·b1)
inline __m256d cmul_conj(__m256d a, __m256d b) {
  const __m256d are = _mm256_movedup_pd(a);
  const __m256d aim = _mm256_permute_pd(a, 0xF);
  const __m256d bsw = _mm256_permute_pd(b, 0x5);
  return _mm256_fmsubadd_pd(are, b, _mm256_mul_pd(aim, bsw));
}

inline cxd reduce_complex(__m256d acc) {
  const __m128d lo = _mm256_castpd256_pd128(acc);
  const __m128d hi = _mm256_extractf128_pd(acc, 1);
  alignas(16) double out[2];
  _mm_store_pd(out, _mm_add_pd(lo, hi));
  return {out[0], out[1]};
}

}  // namespace

void apply_front(const cxd* u, std::size_t d, const cxd* x, cxd* y, std::size_t r) {
  const std::size_t r2 = r & ~std::size_t{1};
  for (std::size_t t = 0; t < d; ++t) {
    cxd* yt = y + t * r;
    for (std::size_t c = 0; c < r2; c += 2) {
      __m256d acc = _mm256_setzero_pd();
      for (std::size_t s = 0; s < d; ++s) {
        const __m256d uv =
            _mm256_broadcast_pd(reinterpret_cast<const __m128d*>(u + t * d + s));
        const __m256d xv = _mm256_loadu_pd(reinterpret_cast<const double*>(x + s * r + c));
        acc = _mm256_add_pd(acc, cmul(uv, xv));
      }
      _mm256_storeu_pd(reinterpret_cast<double*>(yt + c), acc);
    }
    for (std::size_t c = r2; c < r; ++c) {
      cxd acc(0.0, 0.0);
      for (std::size_t s = 0; s < d; ++s) acc += u[t * d + s] * x[s * r + c];
      yt[c] = acc;
    }
  }
}

cxd cdot(const cxd* a, const cxd* b, std::size_t n) {
  const std::size_t n2 = n & ~std::size_t{1};
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < n2; i += 2) {
    const __m256d av = _mm256_loadu_pd(reinterpret_cast<const double*>(a + i));
    const __m256d bv = _mm256_loadu_pd(reinterpret_cast<const double*>(b + i));
    acc = _mm256_add_pd(acc, cmul_conj(av, bv));
  }
  cxd res = reduce_complex(acc);
  for (std::size_t i = n2; i < n; ++i) res += std::conj(a[i]) * b[i];
  return res;
}

double sum_norm2(const cxd* a, std::size_t n) {
  const std::size_t n2 = n & ~std::size_t{1};
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < n2; i += 2) {
    const __m256d av = _mm256_loadu_pd(reinterpret_cast<const double*>(a + i));
    acc = _mm256_fmadd_pd(av, av, acc);
  }
  alignas(32) double out[4];
  _mm256_store_pd(out, acc);
  double res = out[0] + out[1] + out[2] + out[3];
  for (std::size_t i = n2; i < n; ++i) {
    res += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  }
  return res;
}

void gram(const cxd* m, std::size_t rows, std::size_t cols, cxd* out) {
  for (std::size_t i = 0; i < rows; ++i) {
    out[i * rows + i] = cxd(sum_norm2(m + i * cols, cols), 0.0);
    for (std::size_t j = 0; j < i; ++j) {
      const cxd v = std::conj(cdot(m + i * cols, m + j * cols, cols));
      out[i * rows + j] = v;
      out[j * rows + i] = std::conj(v);
    }
  }
}

}  // namespace qsim::kernels::avx2

#endif  // QSIM_HAVE_AVX2_KERNELS
