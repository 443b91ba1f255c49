#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tensor_tester/complex_matrix.hpp"

namespace tt {

using Shape = std::vector<std::size_t>;

std::size_t shape_product(std::span<const std::size_t> shape);

// Order-m complex tensor. Multi-index (i_1..i_m) is stored at
// sum_k i_k * prod_{j>k} shape_j (row-major, last index fastest).
class MultiTensor {
public:
    MultiTensor() = default;
    explicit MultiTensor(Shape shape);
    MultiTensor(Shape shape, std::vector<Complex> entries);

    const Shape& shape() const { return shape_; }
    std::size_t order() const { return shape_.size(); }
    std::size_t size() const { return entries_.size(); }

    std::span<const Complex> entries() const { return entries_; }
    std::span<Complex> entries() { return entries_; }

    Complex operator[](std::size_t flat) const { return entries_[flat]; }
    Complex& operator[](std::size_t flat) { return entries_[flat]; }

    std::size_t flat_index(std::span<const std::size_t> multi) const;
    std::vector<std::size_t> multi_index(std::size_t flat) const;

    Complex at(std::span<const std::size_t> multi) const { return entries_[flat_index(multi)]; }

    MultiTensor reshape(Shape new_shape) const;

    // Leg `leg` indexes rows; remaining legs, in their original order,
    // index columns.
    ComplexMatrix matricize(std::size_t leg) const;

    // First `split` legs index rows, the rest columns.
    ComplexMatrix as_matrix(std::size_t split) const;

    double norm() const;

    friend bool operator==(const MultiTensor&, const MultiTensor&) = default;

private:
    Shape shape_;
    std::vector<Complex> entries_;
};

MultiTensor tensor_product(const MultiTensor& a, const MultiTensor& b);

// <a, b>, conjugate-linear in a.
Complex frobenius_inner(const MultiTensor& a, const MultiTensor& b);

// Vector of length n viewed as an order-1 tensor.
MultiTensor vector_tensor(std::vector<Complex> entries);

}  // namespace tt
