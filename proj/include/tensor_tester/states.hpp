#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tensor_tester/complex_matrix.hpp"
#include "tensor_tester/multi_tensor.hpp"

namespace tt {

inline constexpr double kStateTolerance = 1e-10;

// Kets |i_1 ... i_m> written with 1-based labels are stored at the
// 0-based multi-index (i_1 - 1, ..., i_m - 1); rows of a density matrix on
// C^{d_1} (x) ... (x) C^{d_m} follow the same row-major multi-index.
class DensityMatrix {
public:
    // Throws InvalidStateError unless matrix is Hermitian, PSD and of unit
    // trace within kStateTolerance, and DimensionError unless rows = prod dims.
    DensityMatrix(ComplexMatrix matrix, Shape dims);

    const ComplexMatrix& matrix() const { return matrix_; }
    const Shape& dims() const { return dims_; }
    std::size_t size() const { return matrix_.rows(); }

    // Tr(rho^2)
    double purity() const;

private:
    ComplexMatrix matrix_;
    Shape dims_;
};

struct SchmidtData {
    std::vector<double> coefficients;  // lambda_i, decreasing, positive, sum 1
    ComplexMatrix left_basis;          // dA x r, column i is e_i
    ComplexMatrix right_basis;         // dB x r, column i is f_i
};

// sum_i sqrt(lambda_i) |ii>, shape {d, d}.
MultiTensor pure_from_schmidt(std::span<const double> lambdas, std::size_t d);

// phi is a unit vector on C^d (x) C^{size/d}; any shape with that many
// entries is accepted. Coefficients below 1e-14 are dropped.
SchmidtData schmidt_decompose(const MultiTensor& phi, std::size_t d);

MultiTensor schmidt_reconstruct(const SchmidtData& s);

// |phi><phi| with dims = phi.shape(). phi must be a unit vector.
DensityMatrix pure_density(const MultiTensor& phi);

DensityMatrix maximally_mixed(Shape dims);

// mu |psi><psi| + (1 - mu) I/d^2
DensityMatrix isotropic(std::size_t d, double mu);

// mu (I + F)/(d(d+1)) + (1 - mu)(I - F)/(d(d-1)), d >= 2
DensityMatrix werner(std::size_t d, double mu);

// mu |phi><phi| + (1 - mu) I/D for phi of shape {d, d}.
DensityMatrix noisy_pure(const MultiTensor& phi, double mu);

// t rho + (1 - t) I/D, 0 <= t <= 1.
DensityMatrix depolarize(const DensityMatrix& rho, double t);

// rho_1 (x) rho_2 with concatenated dims.
DensityMatrix product_density(const DensityMatrix& a, const DensityMatrix& b);

// (|001> + |010> + |100>)/sqrt 3, shape {2, 2, 2}.
MultiTensor w_state();

// a_1 (x) ... (x) a_m; factors need not be normalized.
MultiTensor product_state(const std::vector<std::vector<Complex>>& factors);

// Complex Gaussian entries, normalized.
MultiTensor random_pure(Shape dims, std::uint64_t seed);

// G G^* / Tr(G G^*) with G a D x rank complex Gaussian matrix. rank 0 means
// full rank D.
DensityMatrix random_density(Shape dims, std::uint64_t seed, std::size_t rank = 0);

// sum_k sqrt(lambda_k) e_k (x) f_k (x) ... with the columns of one
// Haar-random unitary per leg as the orthonormal families; every dims[p]
// must be at least lambdas.size().
MultiTensor gen_schmidt_state(std::span<const double> lambdas, Shape dims, std::uint64_t seed);

// sum_k p_k |x_k><x_k| (x) |y_k><y_k| on C^d (x) C^d with Haar-random unit
// x_k, y_k and p drawn uniformly from the simplex.
DensityMatrix random_separable(std::size_t d, std::uint64_t seed, std::size_t terms);

}  // namespace tt
