#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace tt {

class Tester;

// Testers with a known value on the symmetric families: R-like
// (T = F, alpha = 1, beta = 0) and S-like (T = (I + F)/2).
enum class ClosedTester { R, S };

std::string_view closed_tester_name(ClosedTester t);
std::optional<ClosedTester> parse_closed_tester(std::string_view name);

// R or S when the test operator of t equals F or (I + F)/2.
std::optional<ClosedTester> classify_closed(const Tester& t, double tol = 1e-9);

// sum_{i<j} sqrt(lambda_i lambda_j)
double f_phi(std::span<const double> lambdas);

// Value on |phi><phi| of a symmetric tester pair: alpha + beta + 2 alpha f.
double pure_value(std::span<const double> lambdas, double alpha, double beta);

double isotropic_value(std::size_t d, double mu, ClosedTester t);
inline double isotropic_threshold(std::size_t d) { return 1.0 / (static_cast<double>(d) + 1.0); }

double werner_value(std::size_t d, double mu, ClosedTester t);
inline double werner_threshold(std::size_t d) { return 1.0 / static_cast<double>(d); }

double noisy_value(std::size_t d, std::span<const double> lambdas, double mu, ClosedTester t);
double noisy_threshold(std::size_t d, std::span<const double> lambdas);

// Values on rho_1 (x) rho_2 with purities p1, p2 (both local dims equal).
double product_r_value(double p1, double p2);
double product_s_value(double p1, double p2);

// (r + 1)/2
double rs_relation(double r_value);

enum class ProjectiveKind { pure_bipartite, isotropic, werner, gen_schmidt_multi };

struct ProjectiveParams {
    std::size_t d = 0;
    double mu = 0.0;
    std::vector<double> lambdas;
};

// Known S1 (x)_pi ... (x)_pi S1 norms of the special families.
double projective_reference(ProjectiveKind kind, const ProjectiveParams& params);

enum class Family { isotropic, werner, noisy_pure };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

struct FamilyCurve {
    Family family = Family::isotropic;
    std::size_t d = 0;
    ClosedTester tester = ClosedTester::R;
    std::vector<double> lambdas;  // noisy_pure only
    double threshold = 0.0;
    std::vector<std::pair<double, double>> samples;  // (mu, value)
};

// Samples mu = 0, step, 2 step, ... up to 1 (inclusive within 1e-9).
FamilyCurve family_curve(Family family, std::size_t d, ClosedTester t, double step,
                         std::vector<double> lambdas = {});

double family_value(Family family, std::size_t d, std::span<const double> lambdas, double mu,
                    ClosedTester t);
double family_threshold(Family family, std::size_t d, std::span<const double> lambdas);

}  // namespace tt
