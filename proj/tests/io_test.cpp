#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tensor_tester/errors.hpp"
#include "tensor_tester/io.hpp"

namespace tt {
namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("tt_io_" + name)).string();
}

TEST(StateJson, RoundTripBitExact) {
    const DensityMatrix rho = random_density({2, 3}, 31);
    const StateFile sf = state_file(rho, FamilyInfo{"random", {{"seed", 31}}});
    const std::string path = temp_path("rho.json");
    write_state_file(path, sf);
    const StateFile back = read_state_file(path);
    EXPECT_EQ(back.dims, sf.dims);
    EXPECT_EQ(back.kind, StateKind::density);
    ASSERT_EQ(back.entries.size(), sf.entries.size());
    for (std::size_t i = 0; i < sf.entries.size(); ++i) {
        EXPECT_EQ(back.entries[i].real(), sf.entries[i].real());
        EXPECT_EQ(back.entries[i].imag(), sf.entries[i].imag());
    }
    ASSERT_TRUE(back.family);
    EXPECT_EQ(back.family->name, "random");
    EXPECT_EQ(back.family->params["seed"], 31);
    EXPECT_EQ(to_density(back).matrix(), rho.matrix());
    std::filesystem::remove(path);
}

TEST(StateJson, PureFiles) {
    const MultiTensor phi = random_pure({2, 2, 2}, 4);
    const StateFile sf = state_file(phi);
    EXPECT_EQ(sf.kind, StateKind::pure);
    const Json j = state_to_json(sf);
    EXPECT_EQ(j["kind"], "pure");
    EXPECT_EQ(j["re"].size(), 8u);
    EXPECT_EQ(j["im"].size(), 8u);
    const StateFile back = state_from_json(Json::parse(j.dump()));
    EXPECT_EQ(to_pure(back), phi);
    EXPECT_NEAR(to_density(back).purity(), 1.0, 1e-12);
    EXPECT_THROW(to_pure(state_file(random_density({2}, 1))), InvalidStateError);
}

TEST(StateJson, RejectsMalformed) {
    EXPECT_THROW(state_from_json(Json::parse(R"({"dims":[2],"kind":"pure","re":[1],"im":[0]})")),
                 InvalidStateError);
    EXPECT_THROW(state_from_json(Json::parse(R"({"dims":[2],"kind":"mixed","re":[1,0],"im":[0,0]})")),
                 InvalidStateError);
    EXPECT_THROW(state_from_json(Json::parse(R"({"kind":"pure","re":[1,0],"im":[0,0]})")),
                 InvalidStateError);
    // Parses, but fails the unit-vector check.
    const StateFile s =
        state_from_json(Json::parse(R"({"dims":[2],"kind":"pure","re":[1,1],"im":[0,0]})"));
    EXPECT_THROW(to_density(s), InvalidStateError);
    EXPECT_THROW(read_state_file(temp_path("does_not_exist.json")), InvalidStateError);
}

TEST(Format, SeventeenDigits) {
    EXPECT_EQ(format_number(0.1), "0.10000000000000001");
    EXPECT_EQ(format_number(2.0), "2");
    EXPECT_EQ(std::stod(format_number(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Report, JsonAndCsv) {
    const Tester r = build_realignment(2);
    const CriterionReport rep = verdict(r, r, isotropic(2, 1.0));
    const Json j = report_to_json(rep);
    EXPECT_EQ(j["bound_kind"], "exact");
    EXPECT_EQ(j["verdict"], "entangled");
    EXPECT_DOUBLE_EQ(j["value"].get<double>(), rep.value);
    EXPECT_EQ(j["tester_ids"].size(), 2u);
    const Json tj = tester_to_json(build_t_delta(3, 0.25));
    EXPECT_EQ(tj["kind"], "t-delta");
    EXPECT_EQ(tj["d"], 3);
    EXPECT_EQ(tj["params"]["delta"], 0.25);

    std::ostringstream out;
    write_report_csv_header(out);
    write_report_csv_row(out, rep);
    std::istringstream in(out.str());
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    EXPECT_EQ(header, "value,bound_kind,verdict,method,tester_ids");
    EXPECT_EQ(row.substr(0, row.find(',')), format_number(rep.value));
    EXPECT_NE(row.find("entangled"), std::string::npos);
}

}  // namespace
}  // namespace tt
