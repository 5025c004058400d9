#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "l1fourier/experiments.hpp"
#include "l1fourier/seqclass.hpp"
#include "l1fourier/sequence.hpp"

namespace l1f::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr int kCsvVersion = 1;

/// Non-finite doubles become null.
Json number(double v);

Json to_json(const FamilyDescriptor& d);
/// Accepts {family, params[, symmetry]}; throws InputError on malformed input.
FamilyDescriptor descriptor_from_json(const Json& j);

Json to_json(const seqclass::ClassReport& r);
Json to_json(const seqclass::LemmaReport& r);
Json to_json(const seqclass::BalanceProfile& p);
Json to_json(const experiments::ConvergenceReport& r);
Json to_json(const experiments::RateReport& r);
Json to_json(const experiments::LebesgueReport& r);
Json to_json(const experiments::Lemma3Report& r);
Json to_json(const experiments::BatteryResult& r);
Json to_json(const experiments::SuiteReport& r);

/// {schema_version, kind, ...payload}
Json envelope(const std::string& kind, Json payload);

/// CSV with a "# l1fourier <kind> csv v<N>" comment line, a header row and
/// values printed with 17 significant digits.
std::string to_csv(const experiments::ConvergenceReport& r);
std::string to_csv(const experiments::RateReport& r);
std::string to_csv(const experiments::LebesgueReport& r);

/// %.17g; non-finite values print as nan/inf.
std::string format_double(double v);

}  // namespace l1f::io
