#include "tensor_tester/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tensor_tester/errors.hpp"
#include "tensor_tester/linalg.hpp"
#include "tensor_tester/rng.hpp"

namespace tt {
namespace {

void check_mu(double mu, const char* who) {
    if (!(mu >= 0.0 && mu <= 1.0)) {
        throw std::invalid_argument(std::string(who) + ": mu must lie in [0, 1], got " +
                                    std::to_string(mu));
    }
}

void check_unit(const MultiTensor& phi, const char* who) {
    const double n = phi.norm();
    if (std::abs(n - 1.0) > kStateTolerance) {
        throw InvalidStateError(std::string(who) + ": vector has norm " + std::to_string(n) +
                                ", expected 1");
    }
}

ComplexMatrix mixed_part(std::size_t dim) {
    return ComplexMatrix::identity(dim) * Complex{1.0 / static_cast<double>(dim)};
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix matrix, Shape dims)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
    if (dims_.empty() || !matrix_.is_square() || matrix_.rows() != shape_product(dims_)) {
        throw DimensionError("DensityMatrix: matrix must be square with rows = product of dims");
    }
    if (!is_hermitian(matrix_, kStateTolerance)) {
        throw InvalidStateError("DensityMatrix: matrix is not Hermitian");
    }
    const double tr = matrix_.trace().real();
    if (std::abs(tr - 1.0) > kStateTolerance) {
        throw InvalidStateError("DensityMatrix: trace is " + std::to_string(tr) + ", expected 1");
    }
    const double min_eig = eigh(matrix_).values.front();
    if (min_eig < -kStateTolerance) {
        throw InvalidStateError("DensityMatrix: eigenvalue " + std::to_string(min_eig) + " < 0");
    }
}

double DensityMatrix::purity() const { return hs_inner(matrix_, matrix_).real(); }

MultiTensor pure_from_schmidt(std::span<const double> lambdas, std::size_t d) {
    if (lambdas.empty() || lambdas.size() > d) {
        throw DimensionError("pure_from_schmidt: need 1..d coefficients");
    }
    double sum = 0.0;
    for (double l : lambdas) {
        if (!(l >= 0.0)) throw InvalidStateError("pure_from_schmidt: negative coefficient");
        sum += l;
    }
    if (std::abs(sum - 1.0) > kStateTolerance) {
        throw InvalidStateError("pure_from_schmidt: coefficients sum to " + std::to_string(sum));
    }
    MultiTensor phi({d, d});
    for (std::size_t i = 0; i < lambdas.size(); ++i) phi[i * d + i] = std::sqrt(lambdas[i]);
    return phi;
}

SchmidtData schmidt_decompose(const MultiTensor& phi, std::size_t d) {
    if (d == 0 || phi.size() % d != 0) {
        throw DimensionError("schmidt_decompose: size is not a multiple of d");
    }
    check_unit(phi, "schmidt_decompose");
    const std::size_t db = phi.size() / d;
    const ComplexMatrix c(d, db, std::vector<Complex>(phi.entries().begin(), phi.entries().end()));
    const Svd svd = thin_svd(c);
    std::size_t r = 0;
    while (r < svd.values.size() && svd.values[r] * svd.values[r] > 1e-14) ++r;
    SchmidtData out;
    out.left_basis = ComplexMatrix(d, r);
    out.right_basis = ComplexMatrix(db, r);
    double sum = 0.0;
    for (std::size_t k = 0; k < r; ++k) {
        out.coefficients.push_back(svd.values[k] * svd.values[k]);
        sum += out.coefficients.back();
        for (std::size_t i = 0; i < d; ++i) out.left_basis(i, k) = svd.u(i, k);
        // c = sum s_k u_k v_k^*, so f_k = conj(v_k).
        for (std::size_t j = 0; j < db; ++j) out.right_basis(j, k) = std::conj(svd.v(j, k));
    }
    for (double& l : out.coefficients) l /= sum;
    return out;
}

MultiTensor schmidt_reconstruct(const SchmidtData& s) {
    const std::size_t da = s.left_basis.rows();
    const std::size_t db = s.right_basis.rows();
    MultiTensor phi({da, db});
    for (std::size_t k = 0; k < s.coefficients.size(); ++k) {
        const double w = std::sqrt(s.coefficients[k]);
        for (std::size_t i = 0; i < da; ++i) {
            for (std::size_t j = 0; j < db; ++j) {
                phi[i * db + j] += w * s.left_basis(i, k) * s.right_basis(j, k);
            }
        }
    }
    return phi;
}

DensityMatrix pure_density(const MultiTensor& phi) {
    check_unit(phi, "pure_density");
    return DensityMatrix(ComplexMatrix::outer(phi.entries(), phi.entries()), phi.shape());
}

DensityMatrix maximally_mixed(Shape dims) {
    const std::size_t n = shape_product(dims);
    return DensityMatrix(mixed_part(n), std::move(dims));
}

DensityMatrix isotropic(std::size_t d, double mu) {
    check_mu(mu, "isotropic");
    const MultiTensor psi = max_entangled(d);
    ComplexMatrix m = ComplexMatrix::outer(psi.entries(), psi.entries()) * Complex{mu};
    m += mixed_part(d * d) * Complex{1.0 - mu};
    return DensityMatrix(std::move(m), {d, d});
}

DensityMatrix werner(std::size_t d, double mu) {
    check_mu(mu, "werner");
    if (d < 2) throw DimensionError("werner: d must be at least 2");
    const double dd = static_cast<double>(d);
    const ComplexMatrix id = ComplexMatrix::identity(d * d);
    const ComplexMatrix f = flip_operator(d);
    ComplexMatrix m = (id + f) * Complex{mu / (dd * (dd + 1.0))};
    m += (id - f) * Complex{(1.0 - mu) / (dd * (dd - 1.0))};
    return DensityMatrix(std::move(m), {d, d});
}

DensityMatrix noisy_pure(const MultiTensor& phi, double mu) {
    check_mu(mu, "noisy_pure");
    check_unit(phi, "noisy_pure");
    ComplexMatrix m = ComplexMatrix::outer(phi.entries(), phi.entries()) * Complex{mu};
    m += mixed_part(phi.size()) * Complex{1.0 - mu};
    return DensityMatrix(std::move(m), phi.shape());
}

DensityMatrix depolarize(const DensityMatrix& rho, double t) {
    check_mu(t, "depolarize");
    ComplexMatrix m = rho.matrix() * Complex{t};
    m += mixed_part(rho.size()) * Complex{1.0 - t};
    return DensityMatrix(std::move(m), rho.dims());
}

DensityMatrix product_density(const DensityMatrix& a, const DensityMatrix& b) {
    Shape dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    return DensityMatrix(kron(a.matrix(), b.matrix()), std::move(dims));
}

MultiTensor w_state() {
    MultiTensor w({2, 2, 2});
    const double c = 1.0 / std::sqrt(3.0);
    w[0b001] = c;
    w[0b010] = c;
    w[0b100] = c;
    return w;
}

MultiTensor product_state(const std::vector<std::vector<Complex>>& factors) {
    if (factors.empty()) throw DimensionError("product_state: no factors");
    MultiTensor out = vector_tensor(factors.front());
    for (std::size_t k = 1; k < factors.size(); ++k) {
        out = tensor_product(out, vector_tensor(factors[k]));
    }
    return out;
}

MultiTensor random_pure(Shape dims, std::uint64_t seed) {
    Rng rng(seed);
    const std::size_t n = shape_product(dims);
    MultiTensor phi(std::move(dims), rng.complex_gaussian_vector(n));
    const double norm = phi.norm();
    for (Complex& z : phi.entries()) z /= norm;
    return phi;
}

DensityMatrix random_density(Shape dims, std::uint64_t seed, std::size_t rank) {
    Rng rng(seed);
    const std::size_t n = shape_product(dims);
    if (rank == 0) rank = n;
    const ComplexMatrix g(n, rank, rng.complex_gaussian_vector(n * rank));
    ComplexMatrix m = g * g.adjoint();
    // Symmetrize away rounding so the Hermitian check sees an exact match.
    m = (m + m.adjoint()) * Complex{0.5};
    m *= Complex{1.0 / m.trace().real()};
    return DensityMatrix(std::move(m), std::move(dims));
}

MultiTensor gen_schmidt_state(std::span<const double> lambdas, Shape dims, std::uint64_t seed) {
    if (dims.empty()) throw DimensionError("gen_schmidt_state: no legs");
    double sum = 0.0;
    for (double l : lambdas) {
        if (!(l >= 0.0)) throw InvalidStateError("gen_schmidt_state: negative coefficient");
        sum += l;
    }
    if (lambdas.empty() || std::abs(sum - 1.0) > kStateTolerance) {
        throw InvalidStateError("gen_schmidt_state: coefficients must sum to 1");
    }
    for (std::size_t dp : dims) {
        if (dp < lambdas.size()) throw DimensionError("gen_schmidt_state: leg too small");
    }
    Rng rng(seed);
    std::vector<ComplexMatrix> bases;
    for (std::size_t dp : dims) bases.push_back(random_unitary(dp, rng));
    MultiTensor phi(dims);
    for (std::size_t k = 0; k < lambdas.size(); ++k) {
        std::vector<std::vector<Complex>> factors;
        for (const ComplexMatrix& u : bases) {
            std::vector<Complex> col(u.rows());
            for (std::size_t i = 0; i < u.rows(); ++i) col[i] = u(i, k);
            factors.push_back(std::move(col));
        }
        const MultiTensor term = product_state(factors);
        const double w = std::sqrt(lambdas[k]);
        for (std::size_t i = 0; i < phi.size(); ++i) phi[i] += w * term[i];
    }
    return phi;
}

DensityMatrix random_separable(std::size_t d, std::uint64_t seed, std::size_t terms) {
    if (terms == 0) throw std::invalid_argument("random_separable: need at least one term");
    Rng rng(seed);
    std::vector<double> p(terms);
    double total = 0.0;
    for (double& w : p) {
        w = -std::log1p(-rng.uniform());
        total += w;
    }
    ComplexMatrix m(d * d, d * d);
    for (std::size_t k = 0; k < terms; ++k) {
        const std::vector<Complex> x = random_unit_vector(d, rng);
        const std::vector<Complex> y = random_unit_vector(d, rng);
        m += kron(ComplexMatrix::outer(x, x), ComplexMatrix::outer(y, y)) * Complex{p[k] / total};
    }
    m = (m + m.adjoint()) * Complex{0.5};
    return DensityMatrix(std::move(m), {d, d});
}

}  // namespace tt
