#include <catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include <l1fourier/errors.hpp>
#include <l1fourier/families.hpp>
#include <l1fourier/serialization.hpp>

using namespace l1f;
using namespace l1f::io;

TEST_CASE("non-finite numbers become null") {
  CHECK(number(std::numeric_limits<double>::infinity()).is_null());
  CHECK(number(std::nan("")).is_null());
  CHECK(number(1.5).get<double>() == 1.5);
}

TEST_CASE("descriptor round trip") {
  const FamilyDescriptor a{"orvqm_complex", {0.1, 1.5, 2.0}, Symmetry::Conjugate};
  CHECK(descriptor_from_json(to_json(a)) == a);
  const FamilyDescriptor b{"monotone_power", {1.0}, std::nullopt};
  const auto j = to_json(b);
  CHECK_FALSE(j.contains("symmetry"));
  CHECK(descriptor_from_json(j) == b);
  CHECK_THROWS_AS(descriptor_from_json(Json::parse(R"({"params":[1]})")), InputError);
  CHECK_THROWS_AS(descriptor_from_json(Json::parse(R"({"family":"x","params":"1"})")), InputError);
  CHECK_THROWS_AS(descriptor_from_json(Json::parse(R"({"family":"x","params":[],"symmetry":"odd"})")),
                  InputError);
}

TEST_CASE("class reports keep infinite constants as null") {
  seqclass::ClassReport r;
  r.verdict = seqclass::Verdict::FailsWithWitness;
  r.fitted_M = std::numeric_limits<double>::infinity();
  r.witness = 7;
  const auto j = to_json(r);
  CHECK(j["fitted_M"].is_null());
  CHECK(j["witness"] == 7);
  CHECK(j["verdict"] == "FailsWithWitness");
}

TEST_CASE("envelope carries the schema version") {
  const auto e = envelope("converge", Json{{"a", 1}});
  CHECK(e["schema_version"] == kSchemaVersion);
  CHECK(e["kind"] == "converge");
  CHECK(e["a"] == 1);
  CHECK(e.begin().key() == "schema_version");
}

TEST_CASE("csv layout") {
  experiments::ConvergenceReport r;
  r.family = FamilyDescriptor{"monotone_power", {1.0}, std::nullopt};
  experiments::ConvergenceRow row;
  row.n = 64;
  row.gap_Sn = 1.0 / 3.0;
  row.cauchy = 0.1;
  r.rows.push_back(row);
  const std::string csv = to_csv(r);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "# l1fourier convergence csv v1");
  std::getline(in, line);
  CHECK(line.rfind("n,", 0) == 0);
  std::getline(in, line);
  CHECK(line.rfind("64,0.33333333333333331,0.10000000000000001", 0) == 0);
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(2.0) == "2");
}

TEST_CASE("doubles survive text round trips") {
  for (double v : {1.0 / 3.0, 1e-300, 6.02214076e23, -0.0, 5e-324}) {
    CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
    const auto j = Json::parse(Json{{"v", number(v)}}.dump());
    CHECK(j["v"].get<double>() == v);
  }
}

TEST_CASE("convergence report json") {
  experiments::ConvergenceReport r;
  r.family = FamilyDescriptor{"log_decay", {0.0, 1.0}, std::nullopt};
  r.verdict = experiments::ConvergenceVerdict::ConsistentWithDivergence;
  r.rows.resize(2);
  const auto j = to_json(r);
  CHECK(j["verdict"] == "ConsistentWithDivergence");
  CHECK(j["rows"].size() == 2);
  CHECK(j.contains("hypotheses"));
  CHECK(j["hypotheses"].contains("gbv"));
  CHECK(j["hypotheses"].contains("sector"));
  CHECK(j["hypotheses"].contains("balance"));
  CHECK(j.contains("thresholds"));
  CHECK(j["family"]["family"] == "log_decay");
}
