// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include "tensor_tester/kernels.hpp"

#include <immintrin.h>

#include <algorithm>

namespace tt::kernels {
namespace {

// Two complex doubles per 256-bit lane: [re0 im0 re1 im1].
inline __m256d load2(const Complex* p) {
    return _mm256_loadu_pd(reinterpret_cast<const double*>(p));
}

inline void store2(Complex* p, __m256d v) {
    _mm256_storeu_pd(reinterpret_cast<double*>(p), v);
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

Complex dot_conj_avx2(const Complex* x, const Complex* y, std::size_t n) {
    // acc_re lanes: xr*yr, xi*yi  -> all lanes sum to Re
    // acc_im lanes: xr*yi, xi*yr  -> even minus odd lanes gives Im
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = load2(x + i);
        const __m256d yv = load2(y + i);
        acc_re = _mm256_fmadd_pd(xv, yv, acc_re);
        acc_im = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0x5), acc_im);
    }
    const __m256d sign = _mm256_set_pd(-1.0, 1.0, -1.0, 1.0);
    double re = hsum(acc_re);
    double im = hsum(_mm256_mul_pd(acc_im, sign));
    for (; i < n; ++i) {
        re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
        im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
    }
    return {re, im};
}

double norm_sq_avx2(const Complex* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = load2(x + i);
        acc = _mm256_fmadd_pd(xv, xv, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += std::norm(x[i]);
    return s;
}

inline void axpy_body(__m256d a_re, __m256d a_im, Complex a, const Complex* x,
                      Complex* y, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = load2(x + i);
        // even: xr*ar - xi*ai, odd: xi*ar + xr*ai
        const __m256d prod = _mm256_fmaddsub_pd(
            xv, a_re, _mm256_mul_pd(_mm256_permute_pd(xv, 0x5), a_im));
        store2(y + i, _mm256_add_pd(load2(y + i), prod));
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void axpy_avx2(Complex a, const Complex* x, Complex* y, std::size_t n) {
    axpy_body(_mm256_set1_pd(a.real()), _mm256_set1_pd(a.imag()), a, x, y, n);
}

void gemm_avx2(const Complex* a, const Complex* b, Complex* c,
               std::size_t m, std::size_t k, std::size_t n) {
    std::fill(c, c + m * n, Complex{});
    for (std::size_t i = 0; i < m; ++i) {
        Complex* crow = c + i * n;
        for (std::size_t p = 0; p < k; ++p) {
            const Complex aip = a[i * k + p];
            if (aip == Complex{}) continue;
            axpy_body(_mm256_set1_pd(aip.real()), _mm256_set1_pd(aip.imag()),
                      aip, b + p * n, crow, n);
        }
    }
}

constexpr KernelTable kAvx2{Isa::avx2, dot_conj_avx2, norm_sq_avx2, axpy_avx2, gemm_avx2};

}  // namespace

const KernelTable* avx2_table_unchecked() { return &kAvx2; }

}  // namespace tt::kernels
