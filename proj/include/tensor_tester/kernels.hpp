#pragma once

// Data-parallel complex kernels with a scalar reference path and an AVX2
// path selected once at runtime. Every entry point has identical semantics
// across ISAs; results agree up to floating-point reassociation.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace tt {

using Complex = std::complex<double>;

namespace kernels {

enum class Isa { scalar, avx2 };

struct KernelTable {
    Isa isa;
    // sum_i conj(x_i) * y_i
    Complex (*dot_conj)(const Complex* x, const Complex* y, std::size_t n);
    // sum_i |x_i|^2
    double (*norm_sq)(const Complex* x, std::size_t n);
    // y += a * x
    void (*axpy)(Complex a, const Complex* x, Complex* y, std::size_t n);
    // c (m x n) = a (m x k) * b (k x n), all row-major, c overwritten
    void (*gemm)(const Complex* a, const Complex* b, Complex* c,
                 std::size_t m, std::size_t k, std::size_t n);
};

const KernelTable& scalar_table();

// nullptr when the AVX2 path was not compiled in or the CPU lacks AVX2/FMA.
const KernelTable* avx2_table();

// Chosen on first use: AVX2 when available, unless the environment variable
// TENSOR_TESTER_SIMD is set to "scalar".
const KernelTable& active();

std::string_view isa_name(Isa isa);

inline Complex dot_conj(std::span<const Complex> x, std::span<const Complex> y) {
    return active().dot_conj(x.data(), y.data(), x.size());
}

inline double norm_sq(std::span<const Complex> x) {
    return active().norm_sq(x.data(), x.size());
}

inline void axpy(Complex a, std::span<const Complex> x, std::span<Complex> y) {
    active().axpy(a, x.data(), y.data(), x.size());
}

}  // namespace kernels
}  // namespace tt
