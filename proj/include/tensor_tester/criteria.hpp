#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tensor_tester/complex_matrix.hpp"
#include "tensor_tester/multi_tensor.hpp"
#include "tensor_tester/states.hpp"
#include "tensor_tester/tester.hpp"

namespace tt {

enum class BoundKind { exact, certified_lower, heuristic };
enum class Verdict { entangled, inconclusive, separable_certified };

std::string_view bound_kind_name(BoundKind k);
std::string_view verdict_name(Verdict v);

inline constexpr double kExactVerdictTol = 1e-9;
inline constexpr double kBoundVerdictTol = 1e-6;

struct CriterionReport {
    double value = 0.0;
    BoundKind bound_kind = BoundKind::exact;
    Verdict verdict = Verdict::inconclusive;
    std::string method;
    std::vector<std::string> tester_ids;
    // Auxiliary numbers (heuristic estimates, thresholds, bounds).
    std::map<std::string, double> extras;
};

// "kind" or "kind(param=value,...)".
std::string tester_id(const Tester& t);

// n_A x n_B matrix of (E (x) F)(x) for an arbitrary operator x on
// C^{d_A} (x) C^{d_B}: entry (k, l) is Tr((E_k (x) F_l)^* x).
ComplexMatrix pair_output(const Tester& a, const Tester& b, const ComplexMatrix& x);

// Trace norm of pair_output on rho: the exact l2 (x)_pi l2 norm.
double bipartite_value(const Tester& a, const Tester& b, const DensityMatrix& rho);

// Throws std::invalid_argument if either tester is not normalized. The
// separability certificate is checked when both inverse norms are known.
CriterionReport verdict(const Tester& a, const Tester& b, const DensityMatrix& rho,
                        double verdict_tol = kExactVerdictTol);

struct RsCheck {
    double s_value = 0.0;
    double r_value = 0.0;
    double slack = 0.0;  // s - (r + 1)/2
    bool holds = false;  // slack >= -1e-8
};

// Uses the SIC tester for d = 2, 3 and the SIC-equivalent one otherwise.
RsCheck rs_inequality_check(const DensityMatrix& rho);

// Trace norm of (E^# (x) E)(F rho^Gamma), E^# the adjoint tester.
double permuted_value(const Tester& t, const DensityMatrix& rho);

struct InjectiveOptions {
    int restarts = 32;
    int max_iter = 200;
    double tol = 1e-12;
    std::uint64_t seed = 0x1e57'ab1eULL;
};

struct InjectiveBounds {
    double lower = 0.0;  // attained by `factors`
    double upper = 0.0;  // min spectral norm over single-leg matricizations
    std::vector<std::vector<Complex>> factors;
};

InjectiveBounds injective_norm(const MultiTensor& t, const InjectiveOptions& opts = {});

struct WitnessCheck {
    InjectiveBounds epsilon;
    bool rejected = false;  // epsilon.lower > 1 + tol: the witness is invalid
};

// Bounds ||theta||_{S_inf (x)_eps S_inf} via the 4-leg injective norm of
// theta_{(ij),(kl)}. A lower bound above 1 rejects the witness.
WitnessCheck check_witness_norm(const ComplexMatrix& theta, std::size_t d,
                                const InjectiveOptions& opts = {}, double tol = 1e-6);

// build_from_test_operator(theta^Gamma F). theta must be Hermitian and PSD
// within kPsdTolerance; its epsilon norm is the caller's responsibility.
Tester witness_to_tester(const ComplexMatrix& theta, std::size_t d);

// phi_hat_{(i_1 j_1)...(i_m j_m)} = phi_{j_1..j_m} conj(phi_{i_1..i_m}); the
// leg p index is i_p d_p + j_p.
MultiTensor multipartite_realign(const MultiTensor& phi);

// Lower bound on the projective norm of phi_hat from the epsilon bounds of
// phi. value/bound_kind use the certified upper epsilon bound; extras carry
// the heuristic values from the lower epsilon bound.
CriterionReport multipartite_pi_lower(const MultiTensor& phi, bool nonneg_hint = true,
                                      const InjectiveOptions& opts = {});

// (sum sqrt(lambda))^2
double gen_schmidt_value(std::span<const double> lambdas);

// Upper bound on the projective norm: min of the l1 norm of the entries and,
// when all slices over legs 3..m diagonalize in one local basis pair, the
// sum of the projective norms of the resulting coefficient tensors. Exact
// (the trace norm) for m = 2.
double pi_upper_bound(const MultiTensor& t);

}  // namespace tt
