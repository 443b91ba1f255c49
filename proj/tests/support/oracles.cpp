#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace tt::oracle {

std::vector<double> jacobi_singular_values(const ComplexMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    // Columns as separate vectors; a wide matrix is handled through its adjoint.
    const bool wide = n > m;
    const ComplexMatrix w = wide ? a.adjoint() : a;
    const std::size_t rows = w.rows();
    const std::size_t cols = w.cols();
    std::vector<std::vector<Complex>> c(cols, std::vector<Complex>(rows));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) c[j][i] = w(i, j);
    }
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < cols; ++p) {
            for (std::size_t q = p + 1; q < cols; ++q) {
                double alpha = 0.0;
                double beta = 0.0;
                Complex gamma{};
                for (std::size_t i = 0; i < rows; ++i) {
                    alpha += std::norm(c[p][i]);
                    beta += std::norm(c[q][i]);
                    gamma += std::conj(c[p][i]) * c[q][i];
                }
                const double g = std::abs(gamma);
                if (g == 0.0 || g <= 1e-15 * std::sqrt(alpha * beta)) continue;
                off = std::max(off, g / std::sqrt(alpha * beta));
                const Complex phase = gamma / g;
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = cs * t;
                for (std::size_t i = 0; i < rows; ++i) {
                    const Complex x = c[p][i];
                    const Complex y = std::conj(phase) * c[q][i];
                    c[p][i] = cs * x - sn * y;
                    c[q][i] = phase * (sn * x + cs * y);
                }
            }
        }
        if (off < 1e-15) break;
    }
    std::vector<double> s;
    for (const auto& col : c) {
        double acc = 0.0;
        for (Complex z : col) acc += std::norm(z);
        s.push_back(std::sqrt(acc));
    }
    std::sort(s.begin(), s.end(), std::greater<>());
    s.resize(std::min(m, n));
    return s;
}

double jacobi_trace_norm(const ComplexMatrix& a) {
    double t = 0.0;
    for (double s : jacobi_singular_values(a)) t += s;
    return t;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

ComplexMatrix partial_transpose_second(const ComplexMatrix& rho, std::size_t d1, std::size_t d2) {
    ComplexMatrix out(d1 * d2, d1 * d2);
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d2; ++j)
            for (std::size_t k = 0; k < d1; ++k)
                for (std::size_t l = 0; l < d2; ++l)
                    out(i * d2 + l, k * d2 + j) = rho(i * d2 + j, k * d2 + l);
    return out;
}

ComplexMatrix flip(std::size_t d) {
    ComplexMatrix f(d * d, d * d);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) f(y * d + x, x * d + y) = 1.0;
    return f;
}

ComplexMatrix pair_output(const Tester& a, const Tester& b, const ComplexMatrix& rho) {
    ComplexMatrix out(a.output_dim(), b.output_dim());
    for (std::size_t k = 0; k < a.output_dim(); ++k) {
        for (std::size_t l = 0; l < b.output_dim(); ++l) {
            const ComplexMatrix e = kron(a.op(k), b.op(l));
            Complex tr{};
            for (std::size_t i = 0; i < e.rows(); ++i)
                for (std::size_t j = 0; j < e.cols(); ++j) tr += std::conj(e(i, j)) * rho(i, j);
            out(k, l) = tr;
        }
    }
    return out;
}

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Complex{u(gen), u(gen)};
    return m;
}

double unitarity_defect(const ComplexMatrix& u) {
    const ComplexMatrix p = u.adjoint() * u;
    double s = 0.0;
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j)
            s += std::norm(p(i, j) - (i == j ? 1.0 : 0.0));
    return std::sqrt(s);
}

}  // namespace tt::oracle
