#include "tensor_tester/rng.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>

namespace tt {

double Rng::gaussian() {
    if (spare_) {
        const double g = *spare_;
        spare_.reset();
        return g;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    return r * std::cos(theta);
}

Complex Rng::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    const double s = 1.0 / std::numbers::sqrt2;
    return {re * s, im * s};
}

std::vector<Complex> Rng::complex_gaussian_vector(std::size_t n) {
    std::vector<Complex> v(n);
    for (Complex& z : v) z = complex_gaussian();
    return v;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
    using EMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
    const auto size = static_cast<Eigen::Index>(n);
    EMatrix g(size, size);
    for (Eigen::Index i = 0; i < size; ++i) {
        for (Eigen::Index j = 0; j < size; ++j) g(i, j) = rng.complex_gaussian();
    }
    Eigen::HouseholderQR<EMatrix> qr(g);
    EMatrix q = qr.householderQ();
    const EMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < size; ++j) {
        const Complex rjj = r(j, j);
        const double mag = std::abs(rjj);
        if (mag > 0.0) q.col(j) *= rjj / mag;
    }
    ComplexMatrix u(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            u(i, j) = q(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
    }
    return u;
}

std::vector<Complex> random_unit_vector(std::size_t n, Rng& rng) {
    std::vector<Complex> v = rng.complex_gaussian_vector(n);
    double s = 0.0;
    for (const Complex& z : v) s += std::norm(z);
    const double inv = 1.0 / std::sqrt(s);
    for (Complex& z : v) z *= inv;
    return v;
}

}  // namespace tt
