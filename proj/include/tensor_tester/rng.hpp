#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "tensor_tester/complex_matrix.hpp"

namespace tt {

// Seedable generator with a fully specified algorithm so fixtures reproduce
// across platforms: std::mt19937_64 for bits, 53-bit uniforms, and
// Box-Muller (not std::normal_distribution, whose algorithm is unspecified)
// for Gaussians. Passed explicitly; there is no global generator.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double gaussian();

    // Standard complex normal: real and imaginary parts N(0, 1/2).
    Complex complex_gaussian();

    std::vector<Complex> complex_gaussian_vector(std::size_t n);

private:
    std::mt19937_64 engine_;
    std::optional<double> spare_;
};

// splitmix64 mix of (base, stream); used to give every restart or sample its
// own independent seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

// Haar-random unitary via QR of a complex Ginibre matrix with the phases of
// R's diagonal absorbed into Q.
ComplexMatrix random_unitary(std::size_t n, Rng& rng);

std::vector<Complex> random_unit_vector(std::size_t n, Rng& rng);

}  // namespace tt
