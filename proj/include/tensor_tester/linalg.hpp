#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "tensor_tester/complex_matrix.hpp"
#include "tensor_tester/multi_tensor.hpp"

namespace tt {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Descending.
std::vector<double> singular_values(const ComplexMatrix& x);

// Schatten-1 norm: sum of singular values. Rectangular input allowed.
double trace_norm(const ComplexMatrix& x);

double spectral_norm(const ComplexMatrix& x);

struct Svd {
    ComplexMatrix u;             // rows x r, orthonormal columns
    std::vector<double> values;  // r values, descending
    ComplexMatrix v;             // cols x r, orthonormal columns; x = u diag(values) v^*
};

Svd thin_svd(const ComplexMatrix& x);

struct HermitianEigen {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column k belongs to values[k]
};

// Uses the Hermitian part (x + x^*)/2.
HermitianEigen eigh(const ComplexMatrix& x);

// Unit eigenvector for the largest eigenvalue of the Hermitian part of x.
std::vector<Complex> top_eigenvector(const ComplexMatrix& x);

// Row-major vectorization |X> = sum_ij X_ij |ij>, and its inverse.
std::vector<Complex> vectorize(const ComplexMatrix& x);
ComplexMatrix unvectorize(std::span<const Complex> v, std::size_t rows, std::size_t cols);

// F |x> (x) |y> = |y> (x) |x> on C^d (x) C^d.
ComplexMatrix flip_operator(std::size_t d);

// sum_i |ii> / sqrt(d), shape {d, d}.
MultiTensor max_entangled(std::size_t d);

using DimPair = std::array<std::size_t, 2>;

// Transposes the indices of subsystem `which` (0 or 1) of a matrix on
// C^{d1} (x) C^{d2}.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, DimPair dims, std::size_t which);

// Views rho over C^{d_1} (x) ... (x) C^{d_m} as a 2m-leg tensor with legs
// (row_1..row_m, col_1..col_m) and moves input leg p to output position
// sigma[p]. Output positions 0..m-1 index rows of the result, m..2m-1
// columns. With this convention permute(permute(rho, tau), sigma) equals
// permute(rho, sigma o tau).
ComplexMatrix permute_indices(const ComplexMatrix& rho, std::span<const std::size_t> dims,
                              std::span<const std::size_t> sigma);

// sigma realising rho_{ij,kl}|ij><kl|  ->  rho_{ij,kl}|li><kj|, i.e. F rho^Gamma
// with the transpose on the second factor.
inline constexpr std::array<std::size_t, 4> kFlipPartialTranspose{1, 3, 2, 0};

// sigma realising the full transpose of a bipartite operator.
inline constexpr std::array<std::size_t, 4> kFullTranspose{2, 3, 0, 1};

// Realignment rho_{(ij),(kl)} -> R_{(ik),(jl)} on C^{d1} (x) C^{d2}; R is
// d1^2 x d2^2.
ComplexMatrix realign(const ComplexMatrix& rho, DimPair dims);

}  // namespace tt
