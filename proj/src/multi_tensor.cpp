#include "tensor_tester/multi_tensor.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "tensor_tester/errors.hpp"

namespace tt {
namespace {

void check_shape(const Shape& shape) {
    if (shape.empty()) throw DimensionError("MultiTensor: shape must have at least one leg");
    for (std::size_t s : shape) {
        if (s == 0) throw DimensionError("MultiTensor: leg dimensions must be positive");
    }
}

}  // namespace

std::size_t shape_product(std::span<const std::size_t> shape) {
    return std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>());
}

MultiTensor::MultiTensor(Shape shape) : shape_(std::move(shape)) {
    check_shape(shape_);
    entries_.assign(shape_product(shape_), Complex{});
}

MultiTensor::MultiTensor(Shape shape, std::vector<Complex> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
    check_shape(shape_);
    if (entries_.size() != shape_product(shape_)) {
        throw DimensionError("MultiTensor: expected " + std::to_string(shape_product(shape_)) +
                             " entries, got " + std::to_string(entries_.size()));
    }
    for (const Complex& z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument("MultiTensor: non-finite entry");
        }
    }
}

std::size_t MultiTensor::flat_index(std::span<const std::size_t> multi) const {
    if (multi.size() != shape_.size()) throw DimensionError("flat_index: wrong index length");
    std::size_t flat = 0;
    for (std::size_t k = 0; k < shape_.size(); ++k) {
        if (multi[k] >= shape_[k]) throw DimensionError("flat_index: index out of range");
        flat = flat * shape_[k] + multi[k];
    }
    return flat;
}

std::vector<std::size_t> MultiTensor::multi_index(std::size_t flat) const {
    std::vector<std::size_t> multi(shape_.size());
    for (std::size_t k = shape_.size(); k-- > 0;) {
        multi[k] = flat % shape_[k];
        flat /= shape_[k];
    }
    return multi;
}

MultiTensor MultiTensor::reshape(Shape new_shape) const {
    if (shape_product(new_shape) != entries_.size()) {
        throw DimensionError("reshape: element count changes");
    }
    return MultiTensor(std::move(new_shape), entries_);
}

ComplexMatrix MultiTensor::matricize(std::size_t leg) const {
    if (leg >= shape_.size()) throw DimensionError("matricize: leg out of range");
    const std::size_t n = shape_[leg];
    // Row-major: legs before `leg` form an outer block index, legs after an
    // inner one.
    const std::size_t inner = shape_product(std::span(shape_).subspan(leg + 1));
    const std::size_t outer = entries_.size() / (n * inner);
    ComplexMatrix m(n, outer * inner);
    for (std::size_t o = 0; o < outer; ++o) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t r = 0; r < inner; ++r) {
                m(i, o * inner + r) = entries_[(o * n + i) * inner + r];
            }
        }
    }
    return m;
}

ComplexMatrix MultiTensor::as_matrix(std::size_t split) const {
    if (split == 0 || split >= shape_.size()) throw DimensionError("as_matrix: bad split");
    const std::size_t rows = shape_product(std::span(shape_).first(split));
    return ComplexMatrix(rows, entries_.size() / rows, entries_);
}

double MultiTensor::norm() const { return std::sqrt(kernels::norm_sq(entries_)); }

MultiTensor tensor_product(const MultiTensor& a, const MultiTensor& b) {
    Shape shape = a.shape();
    shape.insert(shape.end(), b.shape().begin(), b.shape().end());
    std::vector<Complex> entries(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) entries[i * b.size() + j] = a[i] * b[j];
    }
    return MultiTensor(std::move(shape), std::move(entries));
}

Complex frobenius_inner(const MultiTensor& a, const MultiTensor& b) {
    if (a.shape() != b.shape()) throw DimensionError("frobenius_inner: shape mismatch");
    return kernels::dot_conj(a.entries(), b.entries());
}

MultiTensor vector_tensor(std::vector<Complex> entries) {
    const std::size_t n = entries.size();
    return MultiTensor(Shape{n}, std::move(entries));
}

}  // namespace tt
