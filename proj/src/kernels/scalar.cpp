#include "tensor_tester/kernels.hpp"

#include <algorithm>

namespace tt::kernels {
namespace {

Complex dot_conj_scalar(const Complex* x, const Complex* y, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

double norm_sq_scalar(const Complex* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::norm(x[i]);
    return s;
}

void axpy_scalar(Complex a, const Complex* x, Complex* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void gemm_scalar(const Complex* a, const Complex* b, Complex* c,
                 std::size_t m, std::size_t k, std::size_t n) {
    std::fill(c, c + m * n, Complex{});
    for (std::size_t i = 0; i < m; ++i) {
        Complex* crow = c + i * n;
        for (std::size_t p = 0; p < k; ++p) {
            const Complex aip = a[i * k + p];
            if (aip == Complex{}) continue;
            axpy_scalar(aip, b + p * n, crow, n);
        }
    }
}

constexpr KernelTable kScalar{Isa::scalar, dot_conj_scalar, norm_sq_scalar,
                              axpy_scalar, gemm_scalar};

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

}  // namespace tt::kernels
