#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tensor_tester/closed_forms.hpp"
#include "tensor_tester/criteria.hpp"
#include "tensor_tester/multi_tensor.hpp"
#include "tensor_tester/states.hpp"
#include "tensor_tester/tester.hpp"

namespace tt {

using Json = nlohmann::json;

struct FamilyInfo {
    std::string name;
    Json params = Json::object();
};

enum class StateKind { density, pure };

// { "dims": [...], "kind": "density"|"pure", "re": [...], "im": [...],
//   "family": {"name": ..., "params": {...}} }, entries row-major.
struct StateFile {
    Shape dims;
    StateKind kind = StateKind::density;
    std::vector<Complex> entries;
    std::optional<FamilyInfo> family;
};

// Malformed documents and array-length mismatches throw InvalidStateError.
StateFile state_from_json(const Json& j);
Json state_to_json(const StateFile& s);

StateFile read_state_file(const std::string& path);
void write_state_file(const std::string& path, const StateFile& s);

StateFile state_file(const DensityMatrix& rho, std::optional<FamilyInfo> family = {});
StateFile state_file(const MultiTensor& phi, std::optional<FamilyInfo> family = {});

// Density matrix of the file (|phi><phi| for pure files); validated.
DensityMatrix to_density(const StateFile& s);

// Unit vector of a pure file; throws InvalidStateError for density files.
MultiTensor to_pure(const StateFile& s);

Json tester_to_json(const Tester& t);
Json report_to_json(const CriterionReport& r);

// %.17g
std::string format_number(double x);

// Columns: value,bound_kind,verdict,method,tester_ids (';'-joined).
void write_report_csv_header(std::ostream& out);
void write_report_csv_row(std::ostream& out, const CriterionReport& r);

// Columns: family,d,tester,mu,value,threshold.
void write_family_curve_csv(std::ostream& out, const FamilyCurve& c);

}  // namespace tt
