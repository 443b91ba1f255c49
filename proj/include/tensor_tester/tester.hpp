#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tensor_tester/complex_matrix.hpp"
#include "tensor_tester/multi_tensor.hpp"

namespace tt {

enum class TesterKind {
    realignment,
    canonical,
    sic,
    sic_equivalent,
    t_delta,
    deformed,
    from_test_operator,
    custom,
};

std::string_view kind_name(TesterKind kind);
std::optional<TesterKind> parse_kind(std::string_view name);

// T_E = sum_k E_k (x) E_k^*, a d^2 x d^2 matrix.
struct TestOperator {
    ComplexMatrix matrix;
    std::size_t d = 0;
};

// Linear map X -> sum_k Tr(E_k^* X)|k> from d x d matrices to C^n, given by
// its operators E_1..E_n. The test operator is computed once at construction.
class Tester {
public:
    Tester(std::size_t d, std::vector<ComplexMatrix> operators,
           TesterKind kind = TesterKind::custom, std::map<std::string, double> params = {});

    std::size_t dim() const { return d_; }
    std::size_t output_dim() const { return operators_.size(); }
    std::span<const ComplexMatrix> operators() const { return operators_; }
    const ComplexMatrix& op(std::size_t k) const { return operators_[k]; }

    TesterKind kind() const { return kind_; }
    const std::map<std::string, double>& params() const { return params_; }

    const TestOperator& test_operator() const { return test_operator_; }

    // n x d^2 matrix whose row k is the row-major vectorization of E_k.
    ComplexMatrix operator_rows() const;

private:
    std::size_t d_;
    std::vector<ComplexMatrix> operators_;
    TesterKind kind_;
    std::map<std::string, double> params_;
    TestOperator test_operator_;
};

struct SymmetricParams {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

struct NormOptions {
    int restarts = 50;
    int max_iter = 500;
    double tol = 1e-12;
    std::uint64_t seed = 0x5eed'7e57ULL;
    // Skip the symmetric closed form (used to cross-check it).
    bool force_heuristic = false;
};

struct NormEstimate {
    double value = 0.0;
    // True when the value comes from alternating maximization (a lower
    // bound) rather than the closed form for T = alpha F + beta I.
    bool heuristic = false;
};

// Output vector, shape {n}: entry k is Tr(E_k^* X).
MultiTensor apply(const Tester& t, const ComplexMatrix& x);

TestOperator test_operator(const Tester& t);

// sum_k |e_k><e_k| with e_k the vectorization of E_k; T_E = choi^Gamma F.
ComplexMatrix choi(const Tester& t);

NormEstimate tester_norm(const Tester& t, const NormOptions& opts = {});

// Rescales the operators so that tester_norm is 1.
Tester normalize(const Tester& t, const NormOptions& opts = {});

bool is_c_perfect(const Tester& t, double tol = 1e-9);
bool is_r_perfect(const Tester& t, double tol = 1e-9);

// alpha, beta from the trace formulas, accepted only if T_E equals
// alpha F + beta I entrywise within tol.
std::optional<SymmetricParams> symmetric_params(const Tester& t, double tol = 1e-9);

// Orthonormal operator basis: identity, symmetric off-diagonals,
// antisymmetric off-diagonals, diagonal ladder (in that order).
std::vector<ComplexMatrix> canonical_operator_basis(std::size_t d);

Tester build_realignment(std::size_t d);
Tester build_canonical_basis(std::size_t d);
Tester build_sic(std::size_t d);
Tester build_sic_equivalent(std::size_t d);
Tester build_t_delta(std::size_t d, double delta);
Tester build_deformed(std::size_t d, double x);

// E_1 = sqrt(alpha + beta d) G_1, E_k = sqrt(alpha) G_k over the canonical
// basis; operators with a zero prefactor are dropped.
Tester build_symmetric(std::size_t d, double alpha, double beta);

Tester adjoint_tester(const Tester& t);
Tester transpose_tester(const Tester& t);

// F_j = sum_k conj(U_jk) E_k.
Tester rotate_outputs(const Tester& t, const ComplexMatrix& u);

inline constexpr double kPsdTolerance = 1e-8;
inline constexpr double kRankCut = 1e-10;

Tester build_from_test_operator(const TestOperator& t);

bool equivalent(const Tester& a, const Tester& b, double tol = 1e-9);

// Unit SIC vectors for d = 2 (Bloch tetrahedron) and d = 3 (Weyl-Heisenberg
// orbit of (0, 1, -1)/sqrt 2).
std::vector<std::vector<Complex>> sic_vectors(std::size_t d);

// Dual frame M_k with sum_k Tr(S_k^* X) M_k = X.
std::vector<ComplexMatrix> sic_inverse_frame(std::size_t d);

// ||E^{-1}||_{l2 -> S1} when it is known from the test operator: sqrt(d)
// for T = F and sqrt(2d) for T = (I + F)/2.
std::optional<double> known_inverse_norm(const Tester& t, double tol = 1e-9);

// Factory by kind for the CLI. Recognised params: "delta" (t_delta), "x"
// (deformed). sic falls back to sic_equivalent when d > 3 only if
// allow_fallback is set.
Tester make_tester(TesterKind kind, std::size_t d, const std::map<std::string, double>& params,
                   bool allow_fallback = false);

}  // namespace tt
