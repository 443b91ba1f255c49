#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "support/oracles.hpp"
#include "tensor_tester/errors.hpp"
#include "tensor_tester/linalg.hpp"
#include "tensor_tester/rng.hpp"
#include "tensor_tester/tester.hpp"

namespace tt {
namespace {

ComplexMatrix sym_projector(std::size_t d) {
    return (ComplexMatrix::identity(d * d) + flip_operator(d)) * Complex{0.5};
}

double l2(const MultiTensor& v) { return v.norm(); }

std::string tester_kind_label(const Tester& t) {
    std::string s(kind_name(t.kind()));
    for (const auto& [k, v] : t.params()) s += " " + k + "=" + std::to_string(v);
    return s;
}

std::vector<Tester> built_in(std::size_t d) {
    std::vector<Tester> out{build_realignment(d), build_canonical_basis(d),
                            build_sic_equivalent(d), build_t_delta(d, 0.3),
                            build_t_delta(d, -0.6), build_deformed(d, 2.5),
                            build_deformed(d, 0.4)};
    if (d == 2 || d == 3) out.push_back(build_sic(d));
    return out;
}

TEST(Apply, RealignmentMapsUnitsToBasis) {
    const Tester r = build_realignment(3);
    const MultiTensor out = apply(r, ComplexMatrix::unit(3, 3, 1, 2));
    for (std::size_t k = 0; k < 9; ++k) EXPECT_EQ(out[k], Complex(k == 1 * 3 + 2 ? 1.0 : 0.0));
}

TEST(Apply, RealignmentIsVectorization) {
    const ComplexMatrix x = oracle::random_matrix(3, 3, 5);
    const MultiTensor out = apply(build_realignment(3), x);
    EXPECT_NEAR(l2(out), x.frobenius_norm(), 1e-12);
    const auto v = vectorize(x);
    for (std::size_t k = 0; k < 9; ++k) EXPECT_LE(std::abs(out[k] - v[k]), 1e-15);
}

TEST(Apply, SicOnIdentity) {
    const Tester s = build_sic(2);
    const MultiTensor half = apply(s, ComplexMatrix::identity(2) * Complex{0.5});
    const double sigma = std::sqrt(3.0 / 4.0);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(half[k].real(), sigma / 2.0, 1e-12);
    // ||S(X)||^2 = Tr(T_S (X (x) X^*)) = (||X||_2^2 + |Tr X|^2)/2, so S is not an
    // isometry: ||S(I)||_2 = sqrt(d(d+1)/2) while ||I||_2 = sqrt(d).
    for (std::size_t d : {2u, 3u}) {
        const MultiTensor full = apply(build_sic(d), ComplexMatrix::identity(d));
        EXPECT_NEAR(l2(full), std::sqrt(d * (d + 1.0) / 2.0), 1e-12);
        EXPECT_GT(std::abs(l2(full) - std::sqrt(static_cast<double>(d))), 0.1);
        const ComplexMatrix x = oracle::random_matrix(d, d, 60 + d);
        const double expect = (hs_inner(x, x).real() + std::norm(x.trace())) / 2.0;
        EXPECT_NEAR(l2(apply(build_sic(d), x)) * l2(apply(build_sic(d), x)), expect, 1e-12);
    }
}

TEST(Apply, DimensionMismatch) {
    EXPECT_THROW(apply(build_realignment(2), ComplexMatrix::identity(3)), DimensionError);
}

TEST(Tester, RejectsWrongOperatorShape) {
    EXPECT_THROW(Tester(2, {ComplexMatrix::identity(3)}), DimensionError);
    EXPECT_THROW(Tester(2, {}), DimensionError);
}

TEST(TestOperator, KnownCases) {
    for (std::size_t d = 1; d <= 4; ++d) {
        EXPECT_LE(max_abs_diff(test_operator(build_realignment(d)).matrix, flip_operator(d)), 1e-12);
    }
    EXPECT_LE(max_abs_diff(build_sic(2).test_operator().matrix, sym_projector(2)), 1e-10);
    EXPECT_LE(max_abs_diff(build_sic(3).test_operator().matrix, sym_projector(3)), 1e-10);
    const Tester id(3, {ComplexMatrix::identity(3)});
    EXPECT_EQ(id.test_operator().matrix, ComplexMatrix::identity(9));
}

TEST(TestOperator, MatchesDirectSum) {
    Rng rng(3);
    std::vector<ComplexMatrix> ops;
    for (int k = 0; k < 3; ++k) ops.push_back(oracle::random_matrix(2, 2, 40 + k));
    const Tester t(2, ops);
    ComplexMatrix expect(4, 4);
    for (const auto& e : ops) expect += oracle::kron(e, e.adjoint());
    EXPECT_LE(max_abs_diff(t.test_operator().matrix, expect), 1e-12);
}

TEST(Choi, KnownCases) {
    EXPECT_LE(max_abs_diff(choi(build_realignment(3)), ComplexMatrix::identity(9)), 1e-12);
    const MultiTensor psi = max_entangled(3);
    const ComplexMatrix dpsi = ComplexMatrix::outer(psi.entries(), psi.entries()) * Complex{3.0};
    EXPECT_LE(max_abs_diff(choi(Tester(3, {ComplexMatrix::identity(3)})), dpsi), 1e-12);
}

TEST(Choi, TestOperatorIdentityForBuiltIns) {
    for (std::size_t d = 2; d <= 4; ++d) {
        for (const Tester& t : built_in(d)) {
            const ComplexMatrix rhs = partial_transpose(choi(t), {d, d}, 1) * flip_operator(d);
            EXPECT_LE(max_abs_diff(t.test_operator().matrix, rhs), 1e-10) << tester_kind_label(t);
        }
    }
}

TEST(TesterNorm, ClosedForms) {
    EXPECT_NEAR(tester_norm(build_realignment(3)).value, 1.0, 1e-12);
    EXPECT_FALSE(tester_norm(build_realignment(3)).heuristic);
    // SIC operators without sigma.
    for (std::size_t d : {2u, 3u}) {
        std::vector<ComplexMatrix> ops;
        for (const auto& v : sic_vectors(d)) ops.push_back(ComplexMatrix::outer(v, v));
        const double expect = std::sqrt(2.0 * d / (d + 1.0));
        EXPECT_NEAR(tester_norm(Tester(d, ops)).value, expect, 1e-10);
    }
    EXPECT_NEAR(tester_norm(build_sic(3)).value, 1.0, 1e-10);
    EXPECT_NEAR(tester_norm(build_sic_equivalent(4)).value, 1.0, 1e-12);
}

// max over a grid of unit x, y in C^2 of ||E(|x><y|)||_2.
double grid_norm(const Tester& t, int steps) {
    auto unit = [](double theta, double phi) {
        return std::vector<Complex>{std::cos(theta / 2), std::polar(std::sin(theta / 2), phi)};
    };
    std::vector<std::vector<Complex>> pts;
    for (int a = 0; a <= steps; ++a) {
        for (int b = 0; b < 2 * steps; ++b) {
            pts.push_back(unit(std::numbers::pi * a / steps, std::numbers::pi * b / steps));
        }
    }
    double best = 0.0;
    for (const auto& x : pts) {
        for (const auto& y : pts) {
            double s = 0.0;
            for (const ComplexMatrix& e : t.operators()) {
                Complex v{};
                for (std::size_t i = 0; i < 2; ++i)
                    for (std::size_t j = 0; j < 2; ++j) v += std::conj(x[i]) * e(i, j) * y[j];
                s += std::norm(v);
            }
            best = std::max(best, s);
        }
    }
    return std::sqrt(best);
}

TEST(TesterNorm, IdentityTesterAgainstGrid) {
    const Tester id(2, {ComplexMatrix::identity(2)});
    EXPECT_NEAR(grid_norm(id, 24), 1.0, 1e-3);
    EXPECT_NEAR(tester_norm(id).value, 1.0, 1e-12);
    NormOptions h;
    h.force_heuristic = true;
    EXPECT_NEAR(tester_norm(id, h).value, 1.0, 1e-9);
}

TEST(TesterNorm, HeuristicAgainstGridOnRandomTester) {
    std::vector<ComplexMatrix> ops;
    for (int k = 0; k < 3; ++k) ops.push_back(oracle::random_matrix(2, 2, 90 + k));
    const Tester t(2, ops);
    const NormEstimate est = tester_norm(t);
    EXPECT_TRUE(est.heuristic);
    const double grid = grid_norm(t, 24);
    // The grid is a lower bound; the optimizer should not be beaten by it.
    EXPECT_GE(est.value, grid - 1e-9);
    EXPECT_NEAR(est.value, grid, 1e-2 * est.value);
}

TEST(TesterNorm, HeuristicAgreesWithClosedForm) {
    NormOptions h;
    h.force_heuristic = true;
    for (std::size_t d = 2; d <= 3; ++d) {
        for (const Tester& t : built_in(d)) {
            EXPECT_NEAR(tester_norm(t, h).value, tester_norm(t).value, 1e-9) << tester_kind_label(t);
        }
    }
}

TEST(TesterNorm, BuiltInsAreNormalized) {
    for (std::size_t d = 1; d <= 4; ++d) {
        EXPECT_NEAR(tester_norm(build_realignment(d)).value, 1.0, 1e-9);
        EXPECT_NEAR(tester_norm(build_canonical_basis(d)).value, 1.0, 1e-9);
        EXPECT_NEAR(tester_norm(build_sic_equivalent(d)).value, 1.0, 1e-9);
    }
    for (std::size_t d = 2; d <= 4; ++d) {
        for (const Tester& t : built_in(d)) {
            EXPECT_NEAR(tester_norm(t).value, 1.0, 1e-9) << tester_kind_label(t);
        }
    }
}

TEST(Normalize, RescalesToUnitNorm) {
    std::vector<ComplexMatrix> ops;
    for (int k = 0; k < 4; ++k) ops.push_back(oracle::random_matrix(2, 2, 70 + k));
    const Tester n = normalize(Tester(2, ops));
    EXPECT_NEAR(tester_norm(n).value, 1.0, 1e-9);
    const Tester s = normalize(Tester(3, {ComplexMatrix::identity(3) * Complex{4.0}}));
    EXPECT_NEAR(tester_norm(s).value, 1.0, 1e-12);
}

TEST(Perfect, Classification) {
    for (std::size_t d = 2; d <= 3; ++d) {
        EXPECT_TRUE(is_c_perfect(build_realignment(d)));
        EXPECT_TRUE(is_c_perfect(build_canonical_basis(d)));
        EXPECT_FALSE(is_c_perfect(build_sic(d)));
        EXPECT_FALSE(is_c_perfect(Tester(d, {ComplexMatrix::identity(d)})));
        EXPECT_TRUE(is_r_perfect(build_sic(d)));
        EXPECT_TRUE(is_r_perfect(build_realignment(d)));
        const double s = 1.0 / std::sqrt(static_cast<double>(d));
        EXPECT_FALSE(is_r_perfect(Tester(d, {ComplexMatrix::identity(d) * Complex{s}})));
    }
}

TEST(Perfect, CPerfectImpliesFlip) {
    for (std::size_t d = 2; d <= 4; ++d) {
        for (const Tester& t : built_in(d)) {
            if (is_c_perfect(t)) {
                EXPECT_LE(max_abs_diff(t.test_operator().matrix, flip_operator(d)), 1e-9);
            }
        }
    }
}

TEST(SymmetricParams, KnownTesters) {
    const auto r = symmetric_params(build_realignment(3));
    ASSERT_TRUE(r);
    EXPECT_NEAR(r->alpha, 1.0, 1e-12);
    EXPECT_NEAR(r->beta, 0.0, 1e-12);
    EXPECT_NEAR(r->gamma, 0.0, 1e-12);
    for (std::size_t d : {2u, 3u}) {
        const auto s = symmetric_params(build_sic(d));
        ASSERT_TRUE(s);
        EXPECT_NEAR(s->alpha, 0.5, 1e-10);
        EXPECT_NEAR(s->beta, 0.5, 1e-10);
        EXPECT_NEAR(s->gamma, 1.0 / (d + 1.0), 1e-10);
    }
    const auto g = symmetric_params(build_canonical_basis(4));
    ASSERT_TRUE(g);
    EXPECT_NEAR(g->alpha, 1.0, 1e-12);
    EXPECT_NEAR(g->beta, 0.0, 1e-12);
}

TEST(SymmetricParams, AbsentForGenericTester) {
    std::vector<ComplexMatrix> ops;
    for (int k = 0; k < 4; ++k) ops.push_back(oracle::random_matrix(2, 2, 20 + k));
    EXPECT_FALSE(symmetric_params(Tester(2, ops)));
    EXPECT_FALSE(symmetric_params(build_realignment(1)));
}

TEST(SymmetricParams, GammaConsistency) {
    for (std::size_t d = 2; d <= 4; ++d) {
        for (const Tester& t : built_in(d)) {
            const auto p = symmetric_params(t);
            ASSERT_TRUE(p) << tester_kind_label(t);
            EXPECT_GT(p->alpha + d * p->beta, 0.0);
            EXPECT_NEAR(p->gamma * (p->alpha + d * p->beta), p->beta, 1e-9);
        }
    }
}

TEST(CanonicalBasis, OrthonormalAndOrdered) {
    const auto g = canonical_operator_basis(3);
    ASSERT_EQ(g.size(), 9u);
    for (std::size_t k = 0; k < 9; ++k) {
        for (std::size_t l = 0; l < 9; ++l) {
            EXPECT_LE(std::abs(hs_inner(g[k], g[l]) - Complex(k == l ? 1.0 : 0.0)), 1e-12);
        }
    }
    EXPECT_LE(max_abs_diff(g[0], ComplexMatrix::identity(3) * Complex{1.0 / std::sqrt(3.0)}),
              1e-15);
    for (std::size_t k = 1; k < 9; ++k) EXPECT_LE(std::abs(g[k].trace()), 1e-15);
    // Symmetric block, then antisymmetric block, then diagonal ladder.
    EXPECT_EQ(g[1](0, 1), g[1](1, 0));
    EXPECT_EQ(g[4](0, 1), -g[4](1, 0));
    EXPECT_NE(g[7](0, 0), Complex{});
}

TEST(CanonicalBasis, EquivalentToRealignment) {
    for (std::size_t d : {2u, 3u}) {
        EXPECT_TRUE(equivalent(build_canonical_basis(d), build_realignment(d)));
        EXPECT_LE(max_abs_diff(build_canonical_basis(d).test_operator().matrix, flip_operator(d)),
                  1e-12);
    }
}

TEST(Sic, OverlapsAndDesign) {
    for (std::size_t d : {2u, 3u}) {
        const auto v = sic_vectors(d);
        ASSERT_EQ(v.size(), d * d);
        ComplexMatrix design(d * d, d * d);
        for (std::size_t k = 0; k < v.size(); ++k) {
            for (std::size_t l = 0; l < v.size(); ++l) {
                Complex ip{};
                for (std::size_t i = 0; i < d; ++i) ip += std::conj(v[k][i]) * v[l][i];
                EXPECT_NEAR(std::norm(ip), k == l ? 1.0 : 1.0 / (d + 1.0), 1e-12);
            }
            const ComplexMatrix p = ComplexMatrix::outer(v[k], v[k]);
            design += oracle::kron(p, p);
        }
        design *= Complex{1.0 / (d * d)};
        const ComplexMatrix expect = (ComplexMatrix::identity(d * d) + flip_operator(d)) *
                                     Complex{1.0 / (d * (d + 1.0))};
        EXPECT_LE(max_abs_diff(design, expect), 1e-9);
    }
    EXPECT_THROW(sic_vectors(4), UnsupportedDimensionError);
    EXPECT_THROW(build_sic(5), UnsupportedDimensionError);
}

TEST(Sic, EquivalentConstruction) {
    EXPECT_TRUE(equivalent(build_sic_equivalent(2), build_sic(2)));
    EXPECT_TRUE(equivalent(build_sic_equivalent(3), build_sic(3)));
    EXPECT_LE(max_abs_diff(build_sic_equivalent(5).test_operator().matrix, sym_projector(5)), 1e-10);
    EXPECT_FALSE(equivalent(build_realignment(2), build_sic(2)));
}

TEST(Sic, InverseFrame) {
    for (std::size_t d : {2u, 3u}) {
        const Tester s = build_sic(d);
        const auto m = sic_inverse_frame(d);
        ComplexMatrix sum(d * d, d * d);
        for (const auto& mk : m) sum += oracle::kron(mk, mk.adjoint());
        const ComplexMatrix expect =
            (flip_operator(d) - ComplexMatrix::identity(d * d) * Complex{1.0 / (d + 1.0)}) *
            Complex{2.0};
        EXPECT_LE(max_abs_diff(sum, expect), 1e-9);

        const ComplexMatrix x = oracle::random_matrix(d, d, 300 + d);
        const MultiTensor sx = apply(s, x);
        ComplexMatrix back(d, d);
        for (std::size_t k = 0; k < m.size(); ++k) back += m[k] * sx[k];
        EXPECT_LE(max_abs_diff(back, x), 1e-9);

        const std::size_t n = d * d;
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t l = 0; l < n; ++l) {
                const double expect_g = 1.0 / (2.0 * d) + (k == l ? 0.5 : 0.0);
                EXPECT_LE(std::abs(hs_inner(s.op(k), s.op(l)) - Complex(expect_g)), 1e-10);
            }
        }
    }
}

TEST(TDelta, Endpoints) {
    EXPECT_LE(max_abs_diff(build_t_delta(3, 0.0).test_operator().matrix, sym_projector(3)), 1e-12);
    EXPECT_LE(max_abs_diff(build_t_delta(3, -1.0).test_operator().matrix, flip_operator(3)), 1e-12);
    const Tester one = build_t_delta(2, 1.0);
    EXPECT_EQ(one.output_dim(), 1u);
    EXPECT_LE(max_abs_diff(one.test_operator().matrix, ComplexMatrix::identity(4)), 1e-12);
    EXPECT_NEAR(tester_norm(one).value, 1.0, 1e-12);
    EXPECT_THROW(build_t_delta(2, 1.5), std::invalid_argument);
    EXPECT_THROW(build_t_delta(2, -1.01), std::invalid_argument);
}

TEST(TDelta, TestOperatorFormula) {
    const double delta = 0.37;
    const std::size_t d = 3;
    const ComplexMatrix id = ComplexMatrix::identity(d * d);
    const ComplexMatrix f = flip_operator(d);
    const ComplexMatrix expect = (id + f) * Complex{0.5} + (id - f) * Complex{delta / 2.0};
    EXPECT_LE(max_abs_diff(build_t_delta(d, delta).test_operator().matrix, expect), 1e-12);
}

TEST(Deformed, NoDeformationIsCanonical) {
    const Tester g = build_canonical_basis(3);
    const Tester x1 = build_deformed(3, 1.0);
    ASSERT_EQ(g.output_dim(), x1.output_dim());
    for (std::size_t k = 0; k < g.output_dim(); ++k) {
        EXPECT_LE(max_abs_diff(g.op(k), x1.op(k)), 1e-15);
    }
}

TEST(Deformed, ZeroDeformationDropsTrace) {
    const Tester g0 = build_deformed(2, 0.0);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const ComplexMatrix x = oracle::random_matrix(2, 2, seed);
        const double n2 = l2(apply(g0, x)) * l2(apply(g0, x));
        const double expect = hs_inner(x, x).real() - std::norm(x.trace()) / 2.0;
        EXPECT_NEAR(n2, expect, 1e-12);
    }
    EXPECT_NEAR(tester_norm(g0).value, 1.0, 1e-12);
}

TEST(Deformed, NormalizedAgainstHeuristic) {
    NormOptions h;
    h.force_heuristic = true;
    for (double x : {0.0, 0.5, 1.0, 2.5}) {
        const Tester t = build_deformed(3, x);
        EXPECT_NEAR(tester_norm(t).value, 1.0, 1e-9);
        EXPECT_NEAR(tester_norm(t, h).value, 1.0, 1e-9);
    }
    EXPECT_NEAR(tester_norm(build_deformed(1, 3.0)).value, 1.0, 1e-12);
    EXPECT_THROW(build_deformed(1, 0.0), std::invalid_argument);
    EXPECT_THROW(build_deformed(2, -1.0), std::invalid_argument);
}

TEST(AdjointTranspose, Basics) {
    const Tester r = build_realignment(3);
    EXPECT_TRUE(equivalent(adjoint_tester(r), r));
    const Tester s = build_sic(2);
    const Tester sa = adjoint_tester(s);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_LE(max_abs_diff(sa.op(k), s.op(k)), 1e-15);
    std::vector<ComplexMatrix> ops;
    for (int k = 0; k < 3; ++k) ops.push_back(oracle::random_matrix(3, 3, 500 + k));
    const Tester t(3, ops);
    const Tester tt2 = transpose_tester(transpose_tester(t));
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(tt2.op(k), t.op(k));
    NormOptions o;
    EXPECT_NEAR(tester_norm(adjoint_tester(t), o).value, tester_norm(t, o).value, 1e-6);
    EXPECT_NEAR(tester_norm(transpose_tester(t), o).value, tester_norm(t, o).value, 1e-6);
}

TEST(RotateOutputs, PreservesTestOperator) {
    Rng rng(17);
    for (std::size_t d = 2; d <= 3; ++d) {
        for (const Tester& t : built_in(d)) {
            const ComplexMatrix u = random_unitary(t.output_dim(), rng);
            EXPECT_TRUE(equivalent(rotate_outputs(t, u), t)) << tester_kind_label(t);
        }
    }
}

TEST(FromTestOperator, KnownOperators) {
    for (std::size_t d = 2; d <= 3; ++d) {
        const Tester r = build_from_test_operator({flip_operator(d), d});
        EXPECT_EQ(r.output_dim(), d * d);
        EXPECT_TRUE(equivalent(r, build_realignment(d)));
        const Tester s = build_from_test_operator({sym_projector(d), d});
        EXPECT_TRUE(equivalent(s, build_sic_equivalent(d)));
        const Tester i = build_from_test_operator({ComplexMatrix::identity(d * d), d});
        ASSERT_EQ(i.output_dim(), 1u);
        // The single operator is I up to a phase.
        const Complex phase = i.op(0)(0, 0);
        EXPECT_NEAR(std::abs(phase), 1.0, 1e-12);
        EXPECT_LE(max_abs_diff(i.op(0), ComplexMatrix::identity(d) * phase), 1e-12);
    }
}

TEST(FromTestOperator, RoundTripsBuiltIns) {
    for (std::size_t d = 2; d <= 4; ++d) {
        for (const Tester& t : built_in(d)) {
            const Tester back = build_from_test_operator(t.test_operator());
            EXPECT_TRUE(equivalent(back, t)) << tester_kind_label(t);
            EXPECT_LE(back.output_dim(), d * d);
        }
    }
}

TEST(FromTestOperator, RejectsNonPsd) {
    // Theta = (T F)^Gamma = -I for T = -F.
    EXPECT_THROW(build_from_test_operator({flip_operator(2) * Complex{-1.0}, 2}),
                 InvalidTestOperatorError);
    ComplexMatrix bad = flip_operator(2);
    bad(0, 1) = Complex{0.0, 1.0};
    EXPECT_THROW(build_from_test_operator({bad, 2}), InvalidTestOperatorError);
    EXPECT_THROW(build_from_test_operator({ComplexMatrix::identity(3), 2}), DimensionError);
}

TEST(KnownInverse, Fingerprints) {
    EXPECT_NEAR(*known_inverse_norm(build_realignment(3)), std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(*known_inverse_norm(build_sic(2)), 2.0, 1e-15);
    EXPECT_FALSE(known_inverse_norm(build_t_delta(2, 0.5)));
}

TEST(MakeTester, Factory) {
    EXPECT_EQ(make_tester(TesterKind::sic, 2, {}).kind(), TesterKind::sic);
    EXPECT_THROW(make_tester(TesterKind::sic, 4, {}), UnsupportedDimensionError);
    EXPECT_EQ(make_tester(TesterKind::sic, 4, {}, true).kind(), TesterKind::sic_equivalent);
    EXPECT_THROW(make_tester(TesterKind::t_delta, 2, {}), std::invalid_argument);
    EXPECT_EQ(make_tester(TesterKind::t_delta, 2, {{"delta", 0.2}}).params().at("delta"), 0.2);
    EXPECT_EQ(parse_kind("sic-equivalent"), TesterKind::sic_equivalent);
    EXPECT_FALSE(parse_kind("mub"));
}

}  // namespace
}  // namespace tt
