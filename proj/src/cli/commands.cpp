#include "tensor_tester/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "tensor_tester/closed_forms.hpp"
#include "tensor_tester/criteria.hpp"
#include "tensor_tester/errors.hpp"
#include "tensor_tester/io.hpp"
#include "tensor_tester/linalg.hpp"
#include "tensor_tester/rng.hpp"
#include "tensor_tester/states.hpp"
#include "tensor_tester/tester.hpp"

namespace tt::cli {
namespace {

struct TesterFlags {
    std::optional<double> delta;
    std::optional<double> x;
    bool allow_fallback = false;
};

void add_tester_flags(CLI::App* cmd, TesterFlags& f) {
    cmd->add_option("--delta", f.delta, "t-delta parameter in [-1, 1]");
    cmd->add_option("--x", f.x, "deformed-basis parameter");
    cmd->add_flag("--allow-fallback", f.allow_fallback,
                  "use the SIC-equivalent tester when no SIC vectors are tabulated");
}

Tester tester_from_flags(const std::string& kind_name_in, std::size_t d, const TesterFlags& f) {
    const auto kind = parse_kind(kind_name_in);
    if (!kind) throw std::invalid_argument("unknown tester kind: " + kind_name_in);
    std::map<std::string, double> params;
    if (f.delta) params["delta"] = *f.delta;
    if (f.x) params["x"] = *f.x;
    return make_tester(*kind, d, params, f.allow_fallback);
}

Tester s_tester(std::size_t d) { return (d == 2 || d == 3) ? build_sic(d) : build_sic_equivalent(d); }

Tester closed_tester(ClosedTester t, std::size_t d) {
    return t == ClosedTester::R ? build_realignment(d) : s_tester(d);
}

std::vector<double> lambdas_of(const Json& params) {
    if (!params.contains("lambdas")) throw std::invalid_argument("family params lack lambdas");
    return params["lambdas"].get<std::vector<double>>();
}

// Closed-form value of the tester pair on a declared family, when one is known.
std::optional<double> family_closed_form(const FamilyInfo& fam, const Tester& a,
                                         const Tester& b) {
    const Json& p = fam.params;
    const auto ca = classify_closed(a);
    const auto cb = classify_closed(b);
    const bool same_closed = ca && cb && *ca == *cb && a.dim() == b.dim();
    if (fam.name == "pure") {
        const auto sa = symmetric_params(a);
        const auto sb = symmetric_params(b);
        if (sa && sb && equivalent(a, b)) {
            return pure_value(lambdas_of(p), sa->alpha, sa->beta);
        }
        return std::nullopt;
    }
    if (!same_closed) return std::nullopt;
    const ClosedTester t = *ca;
    const std::size_t d = a.dim();
    if (fam.name == "isotropic") return isotropic_value(d, p.at("mu").get<double>(), t);
    if (fam.name == "werner") return werner_value(d, p.at("mu").get<double>(), t);
    if (fam.name == "noisy_pure") {
        return noisy_value(d, lambdas_of(p), p.at("mu").get<double>(), t);
    }
    if (fam.name == "product") {
        const double p1 = p.at("p1").get<double>();
        const double p2 = p.at("p2").get<double>();
        return t == ClosedTester::R ? product_r_value(p1, p2) : product_s_value(p1, p2);
    }
    return std::nullopt;
}

Json inputs_json(const std::string& path, const StateFile& s) {
    Json j{{"state", path}, {"dims", s.dims}, {"kind", s.kind == StateKind::pure ? "pure" : "density"}};
    if (s.family) j["family"] = {{"name", s.family->name}, {"params", s.family->params}};
    return j;
}

void merge_report(Json& j, const CriterionReport& r) {
    const Json rep = report_to_json(r);
    for (auto it = rep.begin(); it != rep.end(); ++it) j[it.key()] = it.value();
}

void set_closed_form(Json& j, std::optional<double> cf, double value) {
    if (cf) {
        j["closed_form"] = *cf;
        j["residual"] = value - *cf;
    } else {
        j["closed_form"] = nullptr;
        j["residual"] = nullptr;
    }
}

// ---- tester-info

struct TesterInfoArgs {
    std::string kind;
    std::size_t d = 2;
    TesterFlags flags;
};

int cmd_tester_info(const TesterInfoArgs& a, std::ostream& out) {
    const Tester t = tester_from_flags(a.kind, a.d, a.flags);
    const NormEstimate norm = tester_norm(t);
    const ComplexMatrix& tm = t.test_operator().matrix;
    const std::size_t dd = a.d * a.d;
    const ComplexMatrix f = flip_operator(a.d);
    const ComplexMatrix id = ComplexMatrix::identity(dd);
    const ComplexMatrix sym = (id + f) * Complex{0.5};
    Json j;
    j["tester"] = tester_to_json(t);
    j["norm"] = norm.value;
    j["norm_heuristic"] = norm.heuristic;
    if (const auto p = symmetric_params(t)) {
        j["symmetric"] = {{"alpha", p->alpha}, {"beta", p->beta}, {"gamma", p->gamma}};
    } else {
        j["symmetric"] = nullptr;
    }
    j["c_perfect"] = is_c_perfect(t);
    j["r_perfect"] = is_r_perfect(t);
    j["fingerprint"] = {{"distance_to_F", (tm - f).frobenius_norm()},
                        {"distance_to_symmetric_projector", (tm - sym).frobenius_norm()},
                        {"distance_to_I", (tm - id).frobenius_norm()}};
    if (const auto inv = known_inverse_norm(t)) {
        j["inverse_norm"] = *inv;
    } else {
        j["inverse_norm"] = nullptr;
    }
    out << j.dump(2) << '\n';
    return kExitOk;
}

// ---- eval

struct EvalArgs {
    std::string state;
    std::string tester_a = "realignment";
    std::string tester_b = "realignment";
    double verdict_tol = kExactVerdictTol;
    TesterFlags flags;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
    const StateFile sf = read_state_file(a.state);
    const DensityMatrix rho = to_density(sf);
    if (rho.dims().size() != 2) throw std::invalid_argument("eval needs a bipartite state");
    const Tester ta = tester_from_flags(a.tester_a, rho.dims()[0], a.flags);
    const Tester tb = tester_from_flags(a.tester_b, rho.dims()[1], a.flags);
    const CriterionReport r = verdict(ta, tb, rho, a.verdict_tol);
    Json j;
    j["inputs"] = inputs_json(a.state, sf);
    j["tester"] = tester_to_json(ta);
    j["tester_b"] = tester_to_json(tb);
    merge_report(j, r);
    set_closed_form(j, sf.family ? family_closed_form(*sf.family, ta, tb) : std::nullopt,
                    r.value);
    out << j.dump(2) << '\n';
    return kExitOk;
}

// ---- multi

struct MultiArgs {
    std::string state;
    bool no_nonneg = false;
    InjectiveOptions inj;
};

int cmd_multi(const MultiArgs& a, std::ostream& out) {
    const StateFile sf = read_state_file(a.state);
    const MultiTensor phi = to_pure(sf);
    const CriterionReport r = multipartite_pi_lower(phi, !a.no_nonneg, a.inj);
    Json j;
    j["inputs"] = inputs_json(a.state, sf);
    j["tester"] = {{"kind", "realignment"},
                   {"d", phi.shape()},
                   {"n", phi.size()},
                   {"params", Json::object()}};
    merge_report(j, r);
    std::optional<double> cf;
    if (sf.family) {
        if (sf.family->name == "w") cf = 9.0 / 4.0;
        if (sf.family->name == "gen_schmidt" || sf.family->name == "pure") {
            cf = gen_schmidt_value(lambdas_of(sf.family->params));
        }
    }
    // The reference is the projective norm itself; the certified value sits
    // below it, so the residual is <= 0.
    set_closed_form(j, cf, r.value);
    out << j.dump(2) << '\n';
    return kExitOk;
}

// ---- sweep

struct SweepArgs {
    std::string family;
    std::size_t d = 2;
    std::string tester = "R";
    double step = 0.05;
    std::vector<double> lambdas;
};

DensityMatrix family_state(Family f, std::size_t d, std::span<const double> lambdas, double mu) {
    switch (f) {
        case Family::isotropic: return isotropic(d, mu);
        case Family::werner: return werner(d, mu);
        case Family::noisy_pure: return noisy_pure(pure_from_schmidt(lambdas, d), mu);
    }
    throw std::invalid_argument("unknown family");
}

std::vector<double> sweep_lambdas(Family f, std::size_t d, std::vector<double> lambdas) {
    if (f != Family::noisy_pure) return {};
    if (lambdas.empty()) lambdas.assign(d, 1.0 / static_cast<double>(d));
    return lambdas;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
    const auto fam = parse_family(a.family);
    if (!fam) throw std::invalid_argument("unknown family: " + a.family);
    const auto ct = parse_closed_tester(a.tester);
    if (!ct) throw std::invalid_argument("sweep tester must be R or S");
    const std::vector<double> lambdas = sweep_lambdas(*fam, a.d, a.lambdas);
    const FamilyCurve curve = family_curve(*fam, a.d, *ct, a.step, lambdas);
    const Tester t = closed_tester(*ct, a.d);
    out << "family,d,tester,mu,value,closed_form,residual,threshold\n";
    for (const auto& [mu, cf] : curve.samples) {
        const double v = bipartite_value(t, t, family_state(*fam, a.d, lambdas, mu));
        out << family_name(*fam) << ',' << a.d << ',' << closed_tester_name(*ct) << ','
            << format_number(mu) << ',' << format_number(v) << ',' << format_number(cf) << ','
            << format_number(v - cf) << ',' << format_number(curve.threshold) << '\n';
    }
    return kExitOk;
}

// ---- compare-rs

struct CompareArgs {
    std::string state;
    std::string family;
    std::size_t d = 2;
    double step = 0.05;
    std::vector<double> lambdas;
};

constexpr double kEqualityTol = 1e-9;

int cmd_compare_rs(const CompareArgs& a, std::ostream& out) {
    if (!a.state.empty() == !a.family.empty()) {
        throw std::invalid_argument("compare-rs needs exactly one of --state or --family");
    }
    if (!a.state.empty()) {
        const StateFile sf = read_state_file(a.state);
        const RsCheck c = rs_inequality_check(to_density(sf));
        Json j{{"inputs", inputs_json(a.state, sf)},
               {"r_value", c.r_value},
               {"s_value", c.s_value},
               {"predicted_s", rs_relation(c.r_value)},
               {"slack", c.slack},
               {"holds", c.holds},
               {"equality_class", std::abs(c.slack) < kEqualityTol}};
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    const auto fam = parse_family(a.family);
    if (!fam) throw std::invalid_argument("unknown family: " + a.family);
    const std::vector<double> lambdas = sweep_lambdas(*fam, a.d, a.lambdas);
    const FamilyCurve curve = family_curve(*fam, a.d, ClosedTester::R, a.step, lambdas);
    out << "family,d,mu,r_value,s_value,slack,holds,equality_class\n";
    for (const auto& sample : curve.samples) {
        const double mu = sample.first;
        const RsCheck c = rs_inequality_check(family_state(*fam, a.d, lambdas, mu));
        out << family_name(*fam) << ',' << a.d << ',' << format_number(mu) << ','
            << format_number(c.r_value) << ',' << format_number(c.s_value) << ','
            << format_number(c.slack) << ',' << (c.holds ? "true" : "false") << ','
            << (std::abs(c.slack) < kEqualityTol ? "true" : "false") << '\n';
    }
    return kExitOk;
}

// ---- bench

struct BenchArgs {
    std::vector<std::size_t> dims{3, 3};
    std::size_t count = 100;
    std::uint64_t seed = 1;
    double purity_min = 0.0;
    double purity_max = 1.0;
};

std::size_t thread_cap() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("TENSOR_TESTER_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
    }
    return hw;
}

// Random state on dims with purity drawn uniformly from [lo, hi] (clipped to
// [1/D, 1]); a full-rank draw is depolarized down to the target, and a
// random pure state is used when the draw is already less pure.
DensityMatrix bench_state(const Shape& dims, std::uint64_t seed, double lo, double hi) {
    Rng rng(derive_seed(seed, 0));
    const double n = static_cast<double>(shape_product(dims));
    lo = std::max(lo, 1.0 / n);
    hi = std::min(hi, 1.0);
    const double target = lo + (hi - lo) * rng.uniform();
    DensityMatrix base = random_density(dims, derive_seed(seed, 1));
    if (base.purity() < target) base = random_density(dims, derive_seed(seed, 2), 1);
    const double excess = base.purity() - 1.0 / n;
    const double t = excess > 0.0 ? std::sqrt(std::max(0.0, target - 1.0 / n) / excess) : 0.0;
    return depolarize(base, std::min(t, 1.0));
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
    if (a.dims.size() != 2) throw std::invalid_argument("bench needs two local dimensions");
    if (a.count == 0) throw std::invalid_argument("bench needs --count >= 1");
    if (!(a.purity_min <= a.purity_max)) throw std::invalid_argument("empty purity range");
    const Shape dims(a.dims.begin(), a.dims.end());

    struct Pair {
        std::string name;
        Tester ta;
        Tester tb;
    };
    const auto sym = [](std::size_t d, double delta) { return build_t_delta(d, delta); };
    std::vector<Pair> pairs;
    pairs.push_back({"R", build_realignment(dims[0]), build_realignment(dims[1])});
    pairs.push_back({"canonical", build_canonical_basis(dims[0]), build_canonical_basis(dims[1])});
    pairs.push_back({"S", s_tester(dims[0]), s_tester(dims[1])});
    pairs.push_back({"t-delta(0.5)", sym(dims[0], 0.5), sym(dims[1], 0.5)});

    std::vector<std::vector<double>> values(a.count, std::vector<double>(pairs.size()));
    const std::size_t workers = std::min<std::size_t>(thread_cap(), a.count);
    auto work = [&](std::size_t w) {
        for (std::size_t i = w; i < a.count; i += workers) {
            const DensityMatrix rho =
                bench_state(dims, derive_seed(a.seed, i), a.purity_min, a.purity_max);
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                values[i][p] = bipartite_value(pairs[p].ta, pairs[p].tb, rho);
            }
        }
    };
    if (workers <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (std::thread& th : pool) th.join();
    }

    out << "tester,count,detected,detection_rate,mean_value,max_value\n";
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        std::size_t detected = 0;
        double sum = 0.0;
        double mx = 0.0;
        for (std::size_t i = 0; i < a.count; ++i) {
            const double v = values[i][p];
            if (v > 1.0 + kExactVerdictTol) ++detected;
            sum += v;
            mx = std::max(mx, v);
        }
        out << pairs[p].name << ',' << a.count << ',' << detected << ','
            << format_number(static_cast<double>(detected) / static_cast<double>(a.count)) << ','
            << format_number(sum / static_cast<double>(a.count)) << ',' << format_number(mx)
            << '\n';
    }
    return kExitOk;
}

// ---- make-state

struct MakeStateArgs {
    std::string family;
    std::string out_path;
    std::size_t d = 2;
    std::vector<std::size_t> dims;
    double mu = 1.0;
    std::vector<double> lambdas;
    std::uint64_t seed = 1;
    std::size_t rank = 0;
    double p1 = 1.0;
    double p2 = 1.0;
};

DensityMatrix qudit_with_purity(std::size_t d, double p, std::uint64_t seed) {
    const double floor = 1.0 / static_cast<double>(d);
    if (!(p >= floor - 1e-12 && p <= 1.0)) {
        throw std::invalid_argument("purity must lie in [1/d, 1]");
    }
    const DensityMatrix pure = pure_density(random_pure({d}, seed));
    const double t = d == 1 ? 1.0 : std::sqrt(std::max(0.0, p - floor) / (1.0 - floor));
    return depolarize(pure, std::min(t, 1.0));
}

int cmd_make_state(const MakeStateArgs& a, std::ostream& out) {
    const std::string& f = a.family;
    StateFile sf;
    const Shape dims = a.dims.empty() ? Shape{a.d, a.d} : Shape(a.dims.begin(), a.dims.end());
    if (f == "w") {
        sf = state_file(w_state(), FamilyInfo{"w", Json::object()});
    } else if (f == "isotropic") {
        sf = state_file(isotropic(a.d, a.mu), FamilyInfo{"isotropic", {{"d", a.d}, {"mu", a.mu}}});
    } else if (f == "werner") {
        sf = state_file(werner(a.d, a.mu), FamilyInfo{"werner", {{"d", a.d}, {"mu", a.mu}}});
    } else if (f == "noisy_pure" || f == "noisy") {
        const MultiTensor phi = pure_from_schmidt(a.lambdas, a.d);
        sf = state_file(noisy_pure(phi, a.mu),
                        FamilyInfo{"noisy_pure", {{"mu", a.mu}, {"lambdas", a.lambdas}}});
    } else if (f == "pure") {
        sf = state_file(pure_from_schmidt(a.lambdas, a.d),
                        FamilyInfo{"pure", {{"lambdas", a.lambdas}}});
    } else if (f == "gen_schmidt") {
        sf = state_file(gen_schmidt_state(a.lambdas, dims, a.seed),
                        FamilyInfo{"gen_schmidt", {{"lambdas", a.lambdas}}});
    } else if (f == "random-density") {
        sf = state_file(random_density(dims, a.seed, a.rank));
    } else if (f == "random-pure") {
        sf = state_file(random_pure(dims, a.seed));
    } else if (f == "product") {
        const DensityMatrix r1 = qudit_with_purity(a.d, a.p1, derive_seed(a.seed, 1));
        const DensityMatrix r2 = qudit_with_purity(a.d, a.p2, derive_seed(a.seed, 2));
        // Record the realised purities so closed forms match to rounding.
        const double p1 = r1.purity();
        const double p2 = r2.purity();
        const DensityMatrix r = product_density(r1, r2);
        sf = state_file(r, FamilyInfo{"product", {{"p1", p1}, {"p2", p2}}});
    } else {
        throw std::invalid_argument("unknown state family: " + f);
    }
    if (a.out_path.empty() || a.out_path == "-") {
        out << state_to_json(sf).dump() << '\n';
    } else {
        write_state_file(a.out_path, sf);
    }
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Entanglement testers: evaluate tester criteria on quantum states"};
    app.require_subcommand(1);

    TesterInfoArgs info;
    auto* c_info = app.add_subcommand("tester-info", "describe a tester");
    c_info->add_option("--kind", info.kind, "tester kind")->required();
    c_info->add_option("--d", info.d, "input dimension")->required()->check(CLI::PositiveNumber);
    add_tester_flags(c_info, info.flags);

    EvalArgs ev;
    auto* c_eval = app.add_subcommand("eval", "evaluate a tester pair on a bipartite state");
    c_eval->add_option("--state", ev.state, "state JSON file")->required();
    c_eval->add_option("--tester-a", ev.tester_a, "tester on the first factor");
    c_eval->add_option("--tester-b", ev.tester_b, "tester on the second factor");
    c_eval->add_option("--verdict-tol", ev.verdict_tol, "margin above 1 for a verdict");
    add_tester_flags(c_eval, ev.flags);

    MultiArgs mu;
    auto* c_multi = app.add_subcommand("multi", "bound the multipartite realignment value");
    c_multi->add_option("--state", mu.state, "pure state JSON file")->required();
    c_multi->add_flag("--no-nonneg", mu.no_nonneg, "do not use the squared nonnegative bound");
    c_multi->add_option("--restarts", mu.inj.restarts, "random restarts");
    c_multi->add_option("--max-iter", mu.inj.max_iter, "sweeps per restart");
    c_multi->add_option("--tol", mu.inj.tol, "sweep convergence tolerance");
    c_multi->add_option("--seed", mu.inj.seed, "restart seed");

    SweepArgs sw;
    auto* c_sweep = app.add_subcommand("sweep", "numeric vs closed-form values along a family");
    c_sweep->add_option("--family", sw.family, "isotropic | werner | noisy_pure")->required();
    c_sweep->add_option("--d", sw.d, "local dimension")->required()->check(CLI::PositiveNumber);
    c_sweep->add_option("--tester", sw.tester, "R | S");
    c_sweep->add_option("--step", sw.step, "mu grid step");
    c_sweep->add_option("--lambdas", sw.lambdas, "Schmidt spectrum for noisy_pure")
        ->delimiter(',');

    CompareArgs cr;
    auto* c_cmp = app.add_subcommand("compare-rs", "compare the R and S values");
    c_cmp->add_option("--state", cr.state, "state JSON file");
    c_cmp->add_option("--family", cr.family, "family to sweep instead of a state");
    c_cmp->add_option("--d", cr.d, "local dimension")->check(CLI::PositiveNumber);
    c_cmp->add_option("--step", cr.step, "mu grid step");
    c_cmp->add_option("--lambdas", cr.lambdas, "Schmidt spectrum for noisy_pure")->delimiter(',');

    BenchArgs be;
    auto* c_bench = app.add_subcommand("bench", "detection rates on random states");
    c_bench->add_option("--dims", be.dims, "local dimensions, e.g. 3,3")->delimiter(',');
    c_bench->add_option("--count", be.count, "number of states");
    c_bench->add_option("--seed", be.seed, "base seed");
    c_bench->add_option("--purity-min", be.purity_min, "lower end of the purity range");
    c_bench->add_option("--purity-max", be.purity_max, "upper end of the purity range");

    MakeStateArgs ms;
    auto* c_make = app.add_subcommand("make-state", "write a state JSON file");
    c_make->add_option("--family", ms.family,
                       "w | isotropic | werner | noisy_pure | pure | gen_schmidt | "
                       "random-density | random-pure | product")
        ->required();
    c_make->add_option("--out", ms.out_path, "output path (default stdout)");
    c_make->add_option("--d", ms.d, "local dimension")->check(CLI::PositiveNumber);
    c_make->add_option("--dims", ms.dims, "subsystem dimensions")->delimiter(',');
    c_make->add_option("--mu", ms.mu, "mixing parameter");
    c_make->add_option("--lambdas", ms.lambdas, "Schmidt spectrum")->delimiter(',');
    c_make->add_option("--seed", ms.seed, "seed");
    c_make->add_option("--rank", ms.rank, "rank for random-density (0 = full)");
    c_make->add_option("--p1", ms.p1, "purity of the first factor (product)");
    c_make->add_option("--p2", ms.p2, "purity of the second factor (product)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (c_info->parsed()) return cmd_tester_info(info, out);
        if (c_eval->parsed()) return cmd_eval(ev, out);
        if (c_multi->parsed()) return cmd_multi(mu, out);
        if (c_sweep->parsed()) return cmd_sweep(sw, out);
        if (c_cmp->parsed()) return cmd_compare_rs(cr, out);
        if (c_bench->parsed()) return cmd_bench(be, out);
        if (c_make->parsed()) return cmd_make_state(ms, out);
    } catch (const InvalidStateError& e) {
        err << "invalid state: " << e.what() << '\n';
        return kExitInvalidState;
    } catch (const Json::exception& e) {
        err << "invalid state: " << e.what() << '\n';
        return kExitInvalidState;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidState;
    }
    return kExitUsage;
}

}  // namespace tt::cli
