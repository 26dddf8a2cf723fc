#pragma once

// Low-level array kernels for the statevector paths: one scalar reference
// implementation plus SIMD variants selected at runtime. Higher layers call
// the dispatched entry points; tests compare every backend against the
// scalar reference on random inputs.

#include <complex>
#include <cstddef>

#if defined(__x86_64__) || defined(_M_X64)
#define QSIM_X86_64 1
#else
#define QSIM_X86_64 0
#endif

namespace qsim::kernels {

using cxd = std::complex<double>;

enum class Backend { scalar, avx2 };

const char* backend_name(Backend b);

/// True when this build carries the backend and the CPU can run it.
bool backend_supported(Backend b);

/// Backend used by the dispatched entry points. Defaults to the best
/// supported one, decided once at first use.
Backend active_backend();

/// Pin the dispatched entry points to one backend. Throws
/// std::invalid_argument if the backend is not supported here.
void force_backend(Backend b);

// Dispatched entry points -------------------------------------------------

/// y = u · x with u a d×d row-major matrix and x, y viewed as d×r row-major
/// matrices (the front-subsystem update of a statevector). x and y must not
/// alias.
void apply_front(const cxd* u, std::size_t d, const cxd* x, cxd* y, std::size_t r);

/// Σ_i conj(a_i)·b_i
cxd cdot(const cxd* a, const cxd* b, std::size_t n);

/// Σ_i |a_i|²
double sum_norm2(const cxd* a, std::size_t n);

/// out = M·M† for a rows×cols row-major M; out is rows×rows row-major
/// Hermitian.
void gram(const cxd* m, std::size_t rows, std::size_t cols, cxd* out);

// Reference implementation, always available.
namespace scalar {
void apply_front(const cxd* u, std::size_t d, const cxd* x, cxd* y, std::size_t r);
cxd cdot(const cxd* a, const cxd* b, std::size_t n);
double sum_norm2(const cxd* a, std::size_t n);
void gram(const cxd* m, std::size_t rows, std::size_t cols, cxd* out);
}  // namespace scalar

#if defined(QSIM_HAVE_AVX2_KERNELS)
namespace avx2 {
void apply_front(const cxd* u, std::size_t d, const cxd* x, cxd* y, std::size_t r);
cxd cdot(const cxd* a, const cxd* b, std::size_t n);
double sum_norm2(const cxd* a, std::size_t n);
void gram(const cxd* m, std::size_t rows, std::size_t cols, cxd* out);
}  // namespace avx2
#endif

}  // namespace qsim::kernels
