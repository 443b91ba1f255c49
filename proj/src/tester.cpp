#include "tensor_tester/tester.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tensor_tester/errors.hpp"
#include "tensor_tester/linalg.hpp"
#include "tensor_tester/rng.hpp"

namespace tt {
namespace {

ComplexMatrix compute_test_operator(std::span<const ComplexMatrix> ops, std::size_t d) {
    ComplexMatrix t(d * d, d * d);
    for (const ComplexMatrix& e : ops) t += kron(e, e.adjoint());
    return t;
}

ComplexMatrix symmetric_projector(std::size_t d) {
    return (ComplexMatrix::identity(d * d) + flip_operator(d)) * Complex{0.5};
}

// f(x, y) = sum_k |<x|E_k|y>|^2 = ||E(|x><y|)||^2. Fixing one side leaves a
// Hermitian quadratic form in the other.
ComplexMatrix form_in_x(std::span<const ComplexMatrix> ops, std::span<const Complex> y,
                        std::size_t d) {
    ComplexMatrix a(d, d);
    std::vector<Complex> ey(d);
    for (const ComplexMatrix& e : ops) {
        for (std::size_t i = 0; i < d; ++i) {
            Complex s{};
            for (std::size_t j = 0; j < d; ++j) s += e(i, j) * y[j];
            ey[i] = s;
        }
        a += ComplexMatrix::outer(ey, ey);
    }
    return a;
}

ComplexMatrix form_in_y(std::span<const ComplexMatrix> ops, std::span<const Complex> x,
                        std::size_t d) {
    ComplexMatrix a(d, d);
    std::vector<Complex> ex(d);
    for (const ComplexMatrix& e : ops) {
        // (E^* x)_j = sum_i conj(E_ij) x_i
        for (std::size_t j = 0; j < d; ++j) {
            Complex s{};
            for (std::size_t i = 0; i < d; ++i) s += std::conj(e(i, j)) * x[i];
            ex[j] = s;
        }
        a += ComplexMatrix::outer(ex, ex);
    }
    return a;
}

double quadratic(const ComplexMatrix& a, std::span<const Complex> v) {
    Complex s{};
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) s += std::conj(v[i]) * a(i, j) * v[j];
    }
    return s.real();
}

double closed_form_norm(const SymmetricParams& p) {
    return p.beta >= 0.0 ? std::sqrt(std::max(0.0, p.alpha + p.beta))
                         : std::sqrt(std::max(0.0, p.alpha));
}

}  // namespace

std::string_view kind_name(TesterKind kind) {
    switch (kind) {
        case TesterKind::realignment: return "realignment";
        case TesterKind::canonical: return "canonical";
        case TesterKind::sic: return "sic";
        case TesterKind::sic_equivalent: return "sic-equivalent";
        case TesterKind::t_delta: return "t-delta";
        case TesterKind::deformed: return "deformed";
        case TesterKind::from_test_operator: return "from-test-operator";
        case TesterKind::custom: return "custom";
    }
    return "custom";
}

std::optional<TesterKind> parse_kind(std::string_view name) {
    if (name == "realignment" || name == "R") return TesterKind::realignment;
    if (name == "canonical" || name == "G") return TesterKind::canonical;
    if (name == "sic" || name == "S") return TesterKind::sic;
    if (name == "sic-equivalent") return TesterKind::sic_equivalent;
    if (name == "t-delta") return TesterKind::t_delta;
    if (name == "deformed") return TesterKind::deformed;
    return std::nullopt;
}

Tester::Tester(std::size_t d, std::vector<ComplexMatrix> operators, TesterKind kind,
               std::map<std::string, double> params)
    : d_(d), operators_(std::move(operators)), kind_(kind), params_(std::move(params)) {
    if (d_ == 0) throw DimensionError("Tester: input dimension must be positive");
    if (operators_.empty()) throw DimensionError("Tester: needs at least one operator");
    for (const ComplexMatrix& e : operators_) {
        if (e.rows() != d_ || e.cols() != d_) {
            throw DimensionError("Tester: every operator must be " + std::to_string(d_) + "x" +
                                 std::to_string(d_));
        }
    }
    test_operator_ = TestOperator{compute_test_operator(operators_, d_), d_};
}

ComplexMatrix Tester::operator_rows() const {
    ComplexMatrix rows(operators_.size(), d_ * d_);
    for (std::size_t k = 0; k < operators_.size(); ++k) {
        const auto src = operators_[k].entries();
        std::copy(src.begin(), src.end(), rows.entries().begin() + k * d_ * d_);
    }
    return rows;
}

MultiTensor apply(const Tester& t, const ComplexMatrix& x) {
    if (x.rows() != t.dim() || x.cols() != t.dim()) {
        throw DimensionError("apply: input must be " + std::to_string(t.dim()) + "x" +
                             std::to_string(t.dim()));
    }
    std::vector<Complex> out(t.output_dim());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = hs_inner(t.op(k), x);
    return vector_tensor(std::move(out));
}

TestOperator test_operator(const Tester& t) { return t.test_operator(); }

ComplexMatrix choi(const Tester& t) {
    const std::size_t dd = t.dim() * t.dim();
    ComplexMatrix theta(dd, dd);
    for (const ComplexMatrix& e : t.operators()) {
        const std::vector<Complex> v = vectorize(e);
        theta += ComplexMatrix::outer(v, v);
    }
    return theta;
}

std::optional<SymmetricParams> symmetric_params(const Tester& t, double tol) {
    const std::size_t d = t.dim();
    if (d < 2) return std::nullopt;
    double hs_sum = 0.0;
    double trace_sum = 0.0;
    for (const ComplexMatrix& e : t.operators()) {
        hs_sum += hs_inner(e, e).real();
        trace_sum += std::norm(e.trace());
    }
    const double dd = static_cast<double>(d);
    const double denom = dd * dd * dd - dd;
    SymmetricParams p;
    p.alpha = (dd * hs_sum - trace_sum) / denom;
    p.beta = (-hs_sum + dd * trace_sum) / denom;
    const ComplexMatrix model = flip_operator(d) * Complex{p.alpha} +
                                ComplexMatrix::identity(d * d) * Complex{p.beta};
    if (max_abs_diff(model, t.test_operator().matrix) > tol) return std::nullopt;
    const double scale = p.alpha + dd * p.beta;
    p.gamma = std::abs(scale) > 0.0 ? p.beta / scale : 0.0;
    return p;
}

NormEstimate tester_norm(const Tester& t, const NormOptions& opts) {
    if (!opts.force_heuristic) {
        if (const auto p = symmetric_params(t)) return {closed_form_norm(*p), false};
    }

    const std::size_t d = t.dim();
    const auto ops = t.operators();
    double best = 0.0;
    for (int r = 0; r < opts.restarts; ++r) {
        Rng rng(derive_seed(opts.seed, static_cast<std::uint64_t>(r)));
        std::vector<Complex> y = random_unit_vector(d, rng);
        std::vector<Complex> x;
        double value = -1.0;
        for (int it = 0; it < opts.max_iter; ++it) {
            x = top_eigenvector(form_in_x(ops, y, d));
            const ComplexMatrix ay = form_in_y(ops, x, d);
            y = top_eigenvector(ay);
            const double next = quadratic(ay, y);
            const bool done = std::abs(next - value) < opts.tol;
            value = next;
            if (done) break;
        }
        best = std::max(best, value);
    }
    return {std::sqrt(std::max(0.0, best)), true};
}

Tester normalize(const Tester& t, const NormOptions& opts) {
    const double n = tester_norm(t, opts).value;
    if (!(n > 0.0)) throw std::invalid_argument("normalize: tester is the zero map");
    std::vector<ComplexMatrix> ops(t.operators().begin(), t.operators().end());
    for (ComplexMatrix& e : ops) e *= Complex{1.0 / n};
    return Tester(t.dim(), std::move(ops), t.kind(), t.params());
}

bool is_c_perfect(const Tester& t, double tol) {
    const std::size_t dd = t.dim() * t.dim();
    return max_abs_diff(choi(t), ComplexMatrix::identity(dd)) <= tol;
}

bool is_r_perfect(const Tester& t, double tol) {
    const ComplexMatrix ps = symmetric_projector(t.dim());
    return max_abs_diff(ps * t.test_operator().matrix * ps, ps) <= tol;
}

std::vector<ComplexMatrix> canonical_operator_basis(std::size_t d) {
    if (d == 0) throw DimensionError("canonical basis: d must be positive");
    std::vector<ComplexMatrix> basis;
    basis.reserve(d * d);
    basis.push_back(ComplexMatrix::identity(d) * Complex{1.0 / std::sqrt(static_cast<double>(d))});
    const double h = 1.0 / std::numbers::sqrt2;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            ComplexMatrix g(d, d);
            g(i, j) = h;
            g(j, i) = h;
            basis.push_back(std::move(g));
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            ComplexMatrix g(d, d);
            g(i, j) = Complex{0.0, h};
            g(j, i) = Complex{0.0, -h};
            basis.push_back(std::move(g));
        }
    }
    for (std::size_t l = 1; l < d; ++l) {
        ComplexMatrix g(d, d);
        const double c = 1.0 / std::sqrt(static_cast<double>(l * (l + 1)));
        for (std::size_t k = 0; k < l; ++k) g(k, k) = c;
        g(l, l) = -static_cast<double>(l) * c;
        basis.push_back(std::move(g));
    }
    return basis;
}

Tester build_realignment(std::size_t d) {
    if (d == 0) throw DimensionError("build_realignment: d must be positive");
    std::vector<ComplexMatrix> ops;
    ops.reserve(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) ops.push_back(ComplexMatrix::unit(d, d, i, j));
    }
    return Tester(d, std::move(ops), TesterKind::realignment);
}

Tester build_canonical_basis(std::size_t d) {
    return Tester(d, canonical_operator_basis(d), TesterKind::canonical);
}

std::vector<std::vector<Complex>> sic_vectors(std::size_t d) {
    std::vector<std::vector<Complex>> out;
    if (d == 2) {
        const double s2 = std::numbers::sqrt2;
        const double bloch[4][3] = {{0.0, 0.0, 1.0},
                                    {2.0 * s2 / 3.0, 0.0, -1.0 / 3.0},
                                    {-s2 / 3.0, std::sqrt(2.0 / 3.0), -1.0 / 3.0},
                                    {-s2 / 3.0, -std::sqrt(2.0 / 3.0), -1.0 / 3.0}};
        for (const auto& r : bloch) {
            const double theta = std::acos(std::clamp(r[2], -1.0, 1.0));
            const double phi = std::atan2(r[1], r[0]);
            out.push_back({Complex{std::cos(theta / 2.0), 0.0},
                           std::polar(std::sin(theta / 2.0), phi)});
        }
        return out;
    }
    if (d == 3) {
        const double h = 1.0 / std::numbers::sqrt2;
        const std::vector<Complex> fiducial{0.0, h, -h};
        const double w = 2.0 * std::numbers::pi / 3.0;
        // D_{a,b} = X^a Z^b with X|j> = |j+1>, Z|j> = w^j |j>.
        for (std::size_t a = 0; a < 3; ++a) {
            for (std::size_t b = 0; b < 3; ++b) {
                std::vector<Complex> v(3);
                for (std::size_t j = 0; j < 3; ++j) {
                    v[(j + a) % 3] = std::polar(1.0, w * static_cast<double>(b * j)) * fiducial[j];
                }
                out.push_back(std::move(v));
            }
        }
        return out;
    }
    throw UnsupportedDimensionError("explicit SIC vectors are available for d = 2, 3 only; use "
                                    "build_sic_equivalent");
}

Tester build_sic(std::size_t d) {
    const auto vecs = sic_vectors(d);
    const double sigma = std::sqrt((static_cast<double>(d) + 1.0) / (2.0 * static_cast<double>(d)));
    std::vector<ComplexMatrix> ops;
    ops.reserve(vecs.size());
    for (const auto& v : vecs) ops.push_back(ComplexMatrix::outer(v, v) * Complex{sigma});
    return Tester(d, std::move(ops), TesterKind::sic);
}

Tester build_symmetric(std::size_t d, double alpha, double beta) {
    const double first = alpha + beta * static_cast<double>(d);
    if (alpha < 0.0 || first < 0.0) {
        throw std::invalid_argument("build_symmetric: need alpha >= 0 and alpha + d beta >= 0");
    }
    std::vector<ComplexMatrix> basis = canonical_operator_basis(d);
    std::vector<ComplexMatrix> ops;
    if (first > 0.0) ops.push_back(basis[0] * Complex{std::sqrt(first)});
    if (alpha > 0.0) {
        for (std::size_t k = 1; k < basis.size(); ++k) {
            ops.push_back(basis[k] * Complex{std::sqrt(alpha)});
        }
    }
    if (ops.empty()) throw std::invalid_argument("build_symmetric: zero test operator");
    return Tester(d, std::move(ops), TesterKind::custom, {{"alpha", alpha}, {"beta", beta}});
}

Tester build_sic_equivalent(std::size_t d) {
    Tester t = build_symmetric(d, 0.5, 0.5);
    return Tester(d, std::vector<ComplexMatrix>(t.operators().begin(), t.operators().end()),
                  TesterKind::sic_equivalent);
}

Tester build_t_delta(std::size_t d, double delta) {
    if (!(delta >= -1.0 && delta <= 1.0)) {
        throw std::invalid_argument("build_t_delta: delta must lie in [-1, 1]");
    }
    Tester t = build_symmetric(d, (1.0 - delta) / 2.0, (1.0 + delta) / 2.0);
    return Tester(d, std::vector<ComplexMatrix>(t.operators().begin(), t.operators().end()),
                  TesterKind::t_delta, {{"delta", delta}});
}

Tester build_deformed(std::size_t d, double x) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw std::invalid_argument("build_deformed: x must be a finite nonnegative number");
    }
    const double dd = static_cast<double>(d);
    // Norm of the undeformed-scale map: ||G~_x|| = sqrt((d-1+x^2)/d) for
    // x >= 1; for x < 1 an orthogonal rank-one input already reaches 1
    // (there is none when d = 1, where the map is X -> x X).
    double raw_norm = 1.0;
    if (d == 1) {
        raw_norm = x;
    } else if (x >= 1.0) {
        raw_norm = std::sqrt((dd - 1.0 + x * x) / dd);
    }
    if (!(raw_norm > 0.0)) throw std::invalid_argument("build_deformed: zero map");
    std::vector<ComplexMatrix> ops = canonical_operator_basis(d);
    ops[0] *= Complex{x};
    for (ComplexMatrix& e : ops) e *= Complex{1.0 / raw_norm};
    return Tester(d, std::move(ops), TesterKind::deformed, {{"x", x}});
}

Tester adjoint_tester(const Tester& t) {
    std::vector<ComplexMatrix> ops;
    for (const ComplexMatrix& e : t.operators()) ops.push_back(e.adjoint());
    return Tester(t.dim(), std::move(ops), TesterKind::custom, t.params());
}

Tester transpose_tester(const Tester& t) {
    std::vector<ComplexMatrix> ops;
    for (const ComplexMatrix& e : t.operators()) ops.push_back(e.transpose());
    return Tester(t.dim(), std::move(ops), TesterKind::custom, t.params());
}

Tester rotate_outputs(const Tester& t, const ComplexMatrix& u) {
    const std::size_t n = t.output_dim();
    if (u.rows() != n || u.cols() != n) throw DimensionError("rotate_outputs: U must be n x n");
    std::vector<ComplexMatrix> ops;
    for (std::size_t j = 0; j < n; ++j) {
        ComplexMatrix f(t.dim(), t.dim());
        for (std::size_t k = 0; k < n; ++k) f += t.op(k) * std::conj(u(j, k));
        ops.push_back(std::move(f));
    }
    return Tester(t.dim(), std::move(ops), t.kind(), t.params());
}

Tester build_from_test_operator(const TestOperator& t) {
    const std::size_t d = t.d;
    if (d == 0 || t.matrix.rows() != d * d || t.matrix.cols() != d * d) {
        throw DimensionError("build_from_test_operator: matrix must be d^2 x d^2");
    }
    const ComplexMatrix theta = partial_transpose(t.matrix * flip_operator(d), {d, d}, 1);
    if (!is_hermitian(theta, kPsdTolerance)) {
        throw InvalidTestOperatorError("build_from_test_operator: (T F)^Gamma is not Hermitian");
    }
    const HermitianEigen e = eigh(theta);
    if (e.values.front() < -kPsdTolerance) {
        throw InvalidTestOperatorError(
            "build_from_test_operator: (T F)^Gamma has eigenvalue " +
            std::to_string(e.values.front()) + " < 0");
    }
    std::vector<ComplexMatrix> ops;
    const std::size_t dd = d * d;
    for (std::size_t k = dd; k-- > 0;) {
        const double lambda = e.values[k];
        if (lambda <= kRankCut) continue;
        std::vector<Complex> v(dd);
        const double s = std::sqrt(lambda);
        for (std::size_t i = 0; i < dd; ++i) v[i] = e.vectors(i, k) * s;
        ops.push_back(unvectorize(v, d, d));
    }
    if (ops.empty()) throw InvalidTestOperatorError("build_from_test_operator: zero operator");
    return Tester(d, std::move(ops), TesterKind::from_test_operator);
}

bool equivalent(const Tester& a, const Tester& b, double tol) {
    if (a.dim() != b.dim()) throw DimensionError("equivalent: testers act on different dimensions");
    return max_abs_diff(a.test_operator().matrix, b.test_operator().matrix) <= tol;
}

std::vector<ComplexMatrix> sic_inverse_frame(std::size_t d) {
    const auto vecs = sic_vectors(d);
    const double dd = static_cast<double>(d);
    const double pre = std::sqrt(2.0 / dd);
    const double a = std::sqrt(dd + 1.0);
    const ComplexMatrix id = ComplexMatrix::identity(d);
    std::vector<ComplexMatrix> frame;
    for (const auto& v : vecs) {
        frame.push_back((ComplexMatrix::outer(v, v) * Complex{a} - id * Complex{1.0 / a}) *
                        Complex{pre});
    }
    return frame;
}

std::optional<double> known_inverse_norm(const Tester& t, double tol) {
    const std::size_t d = t.dim();
    const ComplexMatrix& tm = t.test_operator().matrix;
    const ComplexMatrix f = flip_operator(d);
    if (max_abs_diff(tm, f) <= tol) return std::sqrt(static_cast<double>(d));
    if (max_abs_diff(tm, symmetric_projector(d)) <= tol) {
        return std::sqrt(2.0 * static_cast<double>(d));
    }
    return std::nullopt;
}

Tester make_tester(TesterKind kind, std::size_t d, const std::map<std::string, double>& params,
                   bool allow_fallback) {
    auto param = [&](const char* name) -> double {
        const auto it = params.find(name);
        if (it == params.end()) {
            throw std::invalid_argument(std::string("tester kind ") +
                                        std::string(kind_name(kind)) + " needs parameter " + name);
        }
        return it->second;
    };
    switch (kind) {
        case TesterKind::realignment: return build_realignment(d);
        case TesterKind::canonical: return build_canonical_basis(d);
        case TesterKind::sic:
            if (allow_fallback && (d < 2 || d > 3)) return build_sic_equivalent(d);
            return build_sic(d);
        case TesterKind::sic_equivalent: return build_sic_equivalent(d);
        case TesterKind::t_delta: return build_t_delta(d, param("delta"));
        case TesterKind::deformed: return build_deformed(d, param("x"));
        case TesterKind::from_test_operator:
        case TesterKind::custom: break;
    }
    throw std::invalid_argument("make_tester: kind has no factory");
}

}  // namespace tt
