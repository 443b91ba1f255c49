#include "tensor_tester/io.hpp"

#include <cstdio>
#include <fstream>

#include "tensor_tester/errors.hpp"

namespace tt {
namespace {

std::string_view state_kind_name(StateKind k) { return k == StateKind::pure ? "pure" : "density"; }

}  // namespace

StateFile state_from_json(const Json& j) {
    try {
        StateFile s;
        s.dims = j.at("dims").get<Shape>();
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "density") {
            s.kind = StateKind::density;
        } else if (kind == "pure") {
            s.kind = StateKind::pure;
        } else {
            throw InvalidStateError("state file: kind must be \"density\" or \"pure\"");
        }
        if (s.dims.empty()) throw InvalidStateError("state file: dims is empty");
        for (std::size_t d : s.dims) {
            if (d == 0) throw InvalidStateError("state file: zero dimension");
        }
        const auto re = j.at("re").get<std::vector<double>>();
        const auto im = j.at("im").get<std::vector<double>>();
        const std::size_t n = shape_product(s.dims);
        const std::size_t expected = s.kind == StateKind::pure ? n : n * n;
        if (re.size() != expected || im.size() != expected) {
            throw InvalidStateError("state file: expected " + std::to_string(expected) +
                                    " entries in re and im");
        }
        s.entries.resize(expected);
        for (std::size_t i = 0; i < expected; ++i) s.entries[i] = {re[i], im[i]};
        if (j.contains("family")) {
            FamilyInfo f;
            f.name = j["family"].at("name").get<std::string>();
            if (j["family"].contains("params")) f.params = j["family"]["params"];
            s.family = std::move(f);
        }
        return s;
    } catch (const Json::exception& e) {
        throw InvalidStateError(std::string("state file: ") + e.what());
    }
}

Json state_to_json(const StateFile& s) {
    std::vector<double> re;
    std::vector<double> im;
    re.reserve(s.entries.size());
    im.reserve(s.entries.size());
    for (Complex z : s.entries) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    Json j;
    j["dims"] = s.dims;
    j["kind"] = state_kind_name(s.kind);
    j["re"] = re;
    j["im"] = im;
    if (s.family) j["family"] = {{"name", s.family->name}, {"params", s.family->params}};
    return j;
}

StateFile read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidStateError("cannot open state file " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw InvalidStateError("state file " + path + ": " + e.what());
    }
    return state_from_json(j);
}

void write_state_file(const std::string& path, const StateFile& s) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << state_to_json(s).dump() << '\n';
}

StateFile state_file(const DensityMatrix& rho, std::optional<FamilyInfo> family) {
    const auto e = rho.matrix().entries();
    return {rho.dims(), StateKind::density, {e.begin(), e.end()}, std::move(family)};
}

StateFile state_file(const MultiTensor& phi, std::optional<FamilyInfo> family) {
    const auto e = phi.entries();
    return {phi.shape(), StateKind::pure, {e.begin(), e.end()}, std::move(family)};
}

DensityMatrix to_density(const StateFile& s) {
    if (s.kind == StateKind::pure) return pure_density(to_pure(s));
    const std::size_t n = shape_product(s.dims);
    try {
        return DensityMatrix(ComplexMatrix(n, n, s.entries), s.dims);
    } catch (const DimensionError& e) {
        throw InvalidStateError(e.what());
    }
}

MultiTensor to_pure(const StateFile& s) {
    if (s.kind != StateKind::pure) throw InvalidStateError("state file does not hold a pure state");
    MultiTensor phi(s.dims, s.entries);
    if (std::abs(phi.norm() - 1.0) > kStateTolerance) {
        throw InvalidStateError("pure state is not a unit vector (norm " +
                                std::to_string(phi.norm()) + ")");
    }
    return phi;
}

Json tester_to_json(const Tester& t) {
    Json params = Json::object();
    for (const auto& [k, v] : t.params()) params[k] = v;
    return {{"kind", kind_name(t.kind())},
            {"d", t.dim()},
            {"n", t.output_dim()},
            {"params", params}};
}

Json report_to_json(const CriterionReport& r) {
    Json extras = Json::object();
    for (const auto& [k, v] : r.extras) extras[k] = v;
    return {{"value", r.value},
            {"bound_kind", bound_kind_name(r.bound_kind)},
            {"verdict", verdict_name(r.verdict)},
            {"method", r.method},
            {"tester_ids", r.tester_ids},
            {"extras", extras}};
}

std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_report_csv_header(std::ostream& out) {
    out << "value,bound_kind,verdict,method,tester_ids\n";
}

void write_report_csv_row(std::ostream& out, const CriterionReport& r) {
    std::string ids;
    for (const std::string& id : r.tester_ids) ids += (ids.empty() ? "" : ";") + id;
    out << format_number(r.value) << ',' << bound_kind_name(r.bound_kind) << ','
        << verdict_name(r.verdict) << ",\"" << r.method << "\",\"" << ids << "\"\n";
}

void write_family_curve_csv(std::ostream& out, const FamilyCurve& c) {
    out << "family,d,tester,mu,value,threshold\n";
    for (const auto& [mu, value] : c.samples) {
        out << family_name(c.family) << ',' << c.d << ',' << closed_tester_name(c.tester) << ','
            << format_number(mu) << ',' << format_number(value) << ','
            << format_number(c.threshold) << '\n';
    }
}

}  // namespace tt
