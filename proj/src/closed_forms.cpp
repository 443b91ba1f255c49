#include "tensor_tester/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tensor_tester/linalg.hpp"
#include "tensor_tester/tester.hpp"

namespace tt {
namespace {

void check_spectrum(std::span<const double> lambdas) {
    if (lambdas.empty()) throw std::invalid_argument("spectrum is empty");
    double sum = 0.0;
    for (double l : lambdas) {
        if (!(l >= 0.0)) throw std::invalid_argument("spectrum has a negative entry");
        sum += l;
    }
    if (std::abs(sum - 1.0) > 1e-10) {
        throw std::invalid_argument("spectrum sums to " + std::to_string(sum) + ", expected 1");
    }
}

void check_mu(double mu) {
    if (!(mu >= 0.0 && mu <= 1.0)) throw std::invalid_argument("mu must lie in [0, 1]");
}

double as_double(std::size_t d) { return static_cast<double>(d); }

}  // namespace

std::string_view closed_tester_name(ClosedTester t) { return t == ClosedTester::R ? "R" : "S"; }

std::optional<ClosedTester> parse_closed_tester(std::string_view name) {
    if (name == "R" || name == "realignment") return ClosedTester::R;
    if (name == "S" || name == "sic" || name == "sic-equivalent") return ClosedTester::S;
    return std::nullopt;
}

std::optional<ClosedTester> classify_closed(const Tester& t, double tol) {
    const std::size_t d = t.dim();
    const ComplexMatrix& tm = t.test_operator().matrix;
    const ComplexMatrix f = flip_operator(d);
    if (max_abs_diff(tm, f) <= tol) return ClosedTester::R;
    const ComplexMatrix s = (ComplexMatrix::identity(d * d) + f) * Complex{0.5};
    if (max_abs_diff(tm, s) <= tol) return ClosedTester::S;
    return std::nullopt;
}

double f_phi(std::span<const double> lambdas) {
    check_spectrum(lambdas);
    double f = 0.0;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        for (std::size_t j = i + 1; j < lambdas.size(); ++j) f += std::sqrt(lambdas[i] * lambdas[j]);
    }
    return f;
}

double pure_value(std::span<const double> lambdas, double alpha, double beta) {
    return alpha + beta + 2.0 * alpha * f_phi(lambdas);
}

double isotropic_value(std::size_t d, double mu, ClosedTester t) {
    check_mu(mu);
    const double dd = as_double(d);
    if (t == ClosedTester::R) return ((dd * dd - 1.0) * mu + 1.0) / dd;
    return (dd + 1.0) / (2.0 * dd) * ((dd - 1.0) * mu + 1.0);
}

double werner_value(std::size_t d, double mu, ClosedTester t) {
    check_mu(mu);
    const double dd = as_double(d);
    const bool upper = mu >= (dd + 1.0) / (2.0 * dd);
    if (t == ClosedTester::R) return upper ? 2.0 * mu - 1.0 : (dd + 2.0) / dd - 2.0 * mu;
    return upper ? mu : (dd + 1.0) / dd - mu;
}

double noisy_value(std::size_t d, std::span<const double> lambdas, double mu, ClosedTester t) {
    check_mu(mu);
    const double f = f_phi(lambdas);
    const double dd = as_double(d);
    if (t == ClosedTester::R) return mu * (1.0 + 2.0 * f) + (1.0 - mu) / dd;
    return mu * (1.0 + f) + (1.0 - mu) * (dd + 1.0) / (2.0 * dd);
}

double noisy_threshold(std::size_t d, std::span<const double> lambdas) {
    const double f = f_phi(lambdas);
    const double dd = as_double(d);
    return (dd - 1.0) / ((1.0 + 2.0 * f) * dd - 1.0);
}

double product_r_value(double p1, double p2) { return std::sqrt(p1 * p2); }

double product_s_value(double p1, double p2) { return std::sqrt((1.0 + p1) * (1.0 + p2)) / 2.0; }

double rs_relation(double r_value) {
    if (!(r_value >= 0.0)) throw std::invalid_argument("rs_relation: value must be nonnegative");
    return (r_value + 1.0) / 2.0;
}

double projective_reference(ProjectiveKind kind, const ProjectiveParams& params) {
    switch (kind) {
        case ProjectiveKind::pure_bipartite:
        case ProjectiveKind::gen_schmidt_multi: {
            check_spectrum(params.lambdas);
            double s = 0.0;
            for (double l : params.lambdas) s += std::sqrt(l);
            return s * s;
        }
        case ProjectiveKind::isotropic: {
            check_mu(params.mu);
            if (params.mu > isotropic_threshold(params.d)) {
                return isotropic_value(params.d, params.mu, ClosedTester::R);
            }
            return 1.0;
        }
        case ProjectiveKind::werner:
            check_mu(params.mu);
            return params.mu < 0.5 ? 2.0 * (1.0 - params.mu) : 1.0;
    }
    throw std::invalid_argument("projective_reference: unsupported kind");
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::isotropic: return "isotropic";
        case Family::werner: return "werner";
        case Family::noisy_pure: return "noisy_pure";
    }
    return "isotropic";
}

std::optional<Family> parse_family(std::string_view name) {
    if (name == "isotropic") return Family::isotropic;
    if (name == "werner") return Family::werner;
    if (name == "noisy_pure" || name == "noisy-pure" || name == "noisy") return Family::noisy_pure;
    return std::nullopt;
}

double family_value(Family family, std::size_t d, std::span<const double> lambdas, double mu,
                    ClosedTester t) {
    switch (family) {
        case Family::isotropic: return isotropic_value(d, mu, t);
        case Family::werner: return werner_value(d, mu, t);
        case Family::noisy_pure: return noisy_value(d, lambdas, mu, t);
    }
    throw std::invalid_argument("family_value: unknown family");
}

double family_threshold(Family family, std::size_t d, std::span<const double> lambdas) {
    switch (family) {
        case Family::isotropic: return isotropic_threshold(d);
        case Family::werner: return werner_threshold(d);
        case Family::noisy_pure: return noisy_threshold(d, lambdas);
    }
    throw std::invalid_argument("family_threshold: unknown family");
}

FamilyCurve family_curve(Family family, std::size_t d, ClosedTester t, double step,
                         std::vector<double> lambdas) {
    if (!(step > 0.0 && step <= 1.0)) throw std::invalid_argument("family_curve: step in (0, 1]");
    FamilyCurve c;
    c.family = family;
    c.d = d;
    c.tester = t;
    c.lambdas = std::move(lambdas);
    c.threshold = family_threshold(family, d, c.lambdas);
    const auto count = static_cast<std::size_t>(std::floor(1.0 / step + 1e-9));
    for (std::size_t i = 0; i <= count; ++i) {
        const double mu = std::min(1.0, static_cast<double>(i) * step);
        c.samples.emplace_back(mu, family_value(family, d, c.lambdas, mu, t));
    }
    return c;
}

}  // namespace tt
