#include "tensor_tester/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tensor_tester/errors.hpp"

namespace tt {
namespace {

using EMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using EMap = Eigen::Map<const EMatrix>;

EMap as_eigen(const ComplexMatrix& x) {
    return EMap(x.entries().data(), static_cast<Eigen::Index>(x.rows()),
                static_cast<Eigen::Index>(x.cols()));
}

template <typename Derived>
ComplexMatrix from_eigen(const Eigen::MatrixBase<Derived>& m) {
    ComplexMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
        }
    }
    return out;
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

std::vector<double> singular_values(const ComplexMatrix& x) {
    Eigen::JacobiSVD<EMatrix> svd(as_eigen(x));
    const auto& s = svd.singularValues();
    return std::vector<double>(s.data(), s.data() + s.size());
}

double trace_norm(const ComplexMatrix& x) {
    const std::vector<double> s = singular_values(x);
    return std::accumulate(s.begin(), s.end(), 0.0);
}

double spectral_norm(const ComplexMatrix& x) {
    const std::vector<double> s = singular_values(x);
    return s.empty() ? 0.0 : s.front();
}

Svd thin_svd(const ComplexMatrix& x) {
    Eigen::JacobiSVD<EMatrix> svd(as_eigen(x), Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& s = svd.singularValues();
    return Svd{from_eigen(svd.matrixU()), std::vector<double>(s.data(), s.data() + s.size()),
               from_eigen(svd.matrixV())};
}

HermitianEigen eigh(const ComplexMatrix& x) {
    if (!x.is_square()) throw DimensionError("eigh: matrix is not square");
    const EMatrix m = as_eigen(x);
    const EMatrix h = (m + m.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<EMatrix> solver(h);
    const auto& ev = solver.eigenvalues();
    return HermitianEigen{std::vector<double>(ev.data(), ev.data() + ev.size()),
                          from_eigen(solver.eigenvectors())};
}

std::vector<Complex> top_eigenvector(const ComplexMatrix& x) {
    const HermitianEigen e = eigh(x);
    const std::size_t n = x.rows();
    std::vector<Complex> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = e.vectors(i, n - 1);
    return v;
}

std::vector<Complex> vectorize(const ComplexMatrix& x) {
    return std::vector<Complex>(x.entries().begin(), x.entries().end());
}

ComplexMatrix unvectorize(std::span<const Complex> v, std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols, std::vector<Complex>(v.begin(), v.end()));
}

ComplexMatrix flip_operator(std::size_t d) {
    if (d == 0) throw DimensionError("flip_operator: d must be positive");
    ComplexMatrix f(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) f(j * d + i, i * d + j) = 1.0;
    }
    return f;
}

MultiTensor max_entangled(std::size_t d) {
    if (d == 0) throw DimensionError("max_entangled: d must be positive");
    MultiTensor psi(Shape{d, d});
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t i = 0; i < d; ++i) psi[i * d + i] = amp;
    return psi;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, DimPair dims, std::size_t which) {
    const auto [d1, d2] = dims;
    if (!rho.is_square() || rho.rows() != d1 * d2) {
        throw DimensionError("partial_transpose: matrix is not " + std::to_string(d1 * d2) +
                             "x" + std::to_string(d1 * d2));
    }
    if (which > 1) throw DimensionError("partial_transpose: subsystem index must be 0 or 1");
    ComplexMatrix out(rho.rows(), rho.cols());
    for (std::size_t i = 0; i < d1; ++i) {
        for (std::size_t j = 0; j < d2; ++j) {
            for (std::size_t k = 0; k < d1; ++k) {
                for (std::size_t l = 0; l < d2; ++l) {
                    const Complex v = rho(i * d2 + j, k * d2 + l);
                    if (which == 0) {
                        out(k * d2 + j, i * d2 + l) = v;
                    } else {
                        out(i * d2 + l, k * d2 + j) = v;
                    }
                }
            }
        }
    }
    return out;
}

ComplexMatrix permute_indices(const ComplexMatrix& rho, std::span<const std::size_t> dims,
                              std::span<const std::size_t> sigma) {
    const std::size_t m = dims.size();
    if (m == 0) throw DimensionError("permute_indices: no subsystems");
    if (sigma.size() != 2 * m) {
        throw DimensionError("permute_indices: permutation must have length " +
                             std::to_string(2 * m));
    }
    std::vector<bool> seen(2 * m, false);
    for (std::size_t s : sigma) {
        if (s >= 2 * m || seen[s]) throw DimensionError("permute_indices: not a permutation");
        seen[s] = true;
    }
    const std::size_t total = shape_product(dims);
    if (!rho.is_square() || rho.rows() != total) {
        throw DimensionError("permute_indices: matrix does not match subsystem dimensions");
    }

    Shape in_shape(2 * m);
    for (std::size_t p = 0; p < m; ++p) in_shape[p] = in_shape[p + m] = dims[p];
    Shape out_shape(2 * m);
    for (std::size_t p = 0; p < 2 * m; ++p) out_shape[sigma[p]] = in_shape[p];

    // Output strides, row-major over out_shape.
    std::vector<std::size_t> out_stride(2 * m, 1);
    for (std::size_t q = 2 * m - 1; q-- > 0;) out_stride[q] = out_stride[q + 1] * out_shape[q + 1];
    // Stride in the output contributed by each input leg.
    std::vector<std::size_t> leg_stride(2 * m);
    for (std::size_t p = 0; p < 2 * m; ++p) leg_stride[p] = out_stride[sigma[p]];

    const std::size_t out_rows = shape_product(std::span(out_shape).first(m));
    const std::size_t out_cols = shape_product(std::span(out_shape).subspan(m));
    std::vector<Complex> out(total * total);

    std::vector<std::size_t> idx(2 * m, 0);
    const auto src = rho.entries();
    for (std::size_t flat = 0; flat < src.size(); ++flat) {
        std::size_t dst = 0;
        for (std::size_t p = 0; p < 2 * m; ++p) dst += idx[p] * leg_stride[p];
        out[dst] = src[flat];
        for (std::size_t p = 2 * m; p-- > 0;) {
            if (++idx[p] < in_shape[p]) break;
            idx[p] = 0;
        }
    }
    return ComplexMatrix(out_rows, out_cols, std::move(out));
}

ComplexMatrix realign(const ComplexMatrix& rho, DimPair dims) {
    const auto [d1, d2] = dims;
    if (!rho.is_square() || rho.rows() != d1 * d2) {
        throw DimensionError("realign: matrix does not match subsystem dimensions");
    }
    ComplexMatrix r(d1 * d1, d2 * d2);
    for (std::size_t i = 0; i < d1; ++i) {
        for (std::size_t j = 0; j < d2; ++j) {
            for (std::size_t k = 0; k < d1; ++k) {
                for (std::size_t l = 0; l < d2; ++l) {
                    r(i * d1 + k, j * d2 + l) = rho(i * d2 + j, k * d2 + l);
                }
            }
        }
    }
    return r;
}

}  // namespace tt
