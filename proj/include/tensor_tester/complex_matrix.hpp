#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "tensor_tester/kernels.hpp"

namespace tt {

// Dense complex matrix, row-major. Entries are always finite.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::initializer_list<Complex> entries);

    static ComplexMatrix identity(std::size_t n);
    // |a><b|
    static ComplexMatrix outer(std::span<const Complex> a, std::span<const Complex> b);
    static ComplexMatrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return entries_.size(); }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return entries_.empty(); }

    Complex operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    std::span<const Complex> entries() const { return entries_; }
    std::span<Complex> entries() { return entries_; }
    std::span<const Complex> row(std::size_t i) const {
        return std::span<const Complex>(entries_).subspan(i * cols_, cols_);
    }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conj() const;

    Complex trace() const;
    double frobenius_norm() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Tr(a^* b)
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& a, double tol);

}  // namespace tt
