#include "l1fourier/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "l1fourier/errors.hpp"

namespace l1f::io {
namespace {

Json optional_number(const std::optional<double>& v) { return v ? number(*v) : Json(nullptr); }

Json optional_index(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json thresholds_json(const experiments::Thresholds& t) {
  return {{"convergence_fraction", t.convergence_fraction},
          {"divergence_fraction", t.divergence_fraction},
          {"balance_tolerance", t.balance_tolerance}};
}

Json family_or_null(const std::optional<FamilyDescriptor>& d) { return d ? to_json(*d) : Json(nullptr); }

std::string csv_header(const std::string& kind) {
  return "# l1fourier " + kind + " csv v" + std::to_string(kCsvVersion) + "\n";
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json to_json(const FamilyDescriptor& d) {
  Json j{{"family", d.family}, {"params", d.params}};
  if (d.symmetry) j["symmetry"] = to_string(*d.symmetry);
  return j;
}

FamilyDescriptor descriptor_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string()) {
    throw InputError("family descriptor must be an object with a string 'family'");
  }
  FamilyDescriptor d;
  d.family = j["family"].get<std::string>();
  if (j.contains("params")) {
    if (!j["params"].is_array()) throw InputError("family 'params' must be an array of numbers");
    for (const auto& v : j["params"]) {
      if (!v.is_number()) throw InputError("family 'params' must be an array of numbers");
      d.params.push_back(v.get<double>());
    }
  }
  if (j.contains("symmetry") && !j["symmetry"].is_null()) {
    if (!j["symmetry"].is_string()) throw InputError("family 'symmetry' must be a string");
    d.symmetry = symmetry_from_string(j["symmetry"].get<std::string>());
  }
  return d;
}

Json to_json(const seqclass::ClassReport& r) {
  return {{"class_name", seqclass::to_string(r.class_name)},
          {"verdict", seqclass::to_string(r.verdict)},
          {"horizon", r.horizon},
          {"fitted_M", number(r.fitted_M)},
          {"fitted_M_half", number(r.fitted_M_half)},
          {"fitted_N0", r.fitted_N0},
          {"witness", optional_index(r.witness)},
          {"parameter", optional_number(r.parameter)},
          {"edge_windows", r.edge_windows},
          {"truncation_error", number(r.truncation_error)},
          {"note", r.note}};
}

Json to_json(const seqclass::LemmaReport& r) {
  Json ratios = Json::array();
  for (double v : r.ratios) ratios.push_back(number(v));
  return {{"holds", r.holds},
          {"max_ratio", number(r.max_ratio)},
          {"witness", optional_index(r.witness)},
          {"ratios", ratios},
          {"note", r.note}};
}

Json to_json(const seqclass::BalanceProfile& p) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < p.lambdas.size(); ++i) {
    Json values = Json::array();
    for (double v : p.entries[i]) values.push_back(number(v));
    rows.push_back({{"lambda", p.lambdas[i]}, {"entries", values}});
  }
  return {{"ns", p.ns}, {"rows", rows}, {"tolerance", p.tolerance}, {"satisfied", p.satisfied}};
}

Json to_json(const experiments::ConvergenceReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"n", row.n},
                    {"gap_Sn", number(row.gap_Sn)},
                    {"cauchy", number(row.cauchy)},
                    {"coef_log", number(row.coef_log)},
                    {"balance", number(row.balance)},
                    {"tau_gap", number(row.tau_gap)},
                    {"reference_degree", row.reference_degree},
                    {"tail_bound", optional_number(row.tail_bound)}});
  }
  const auto& h = r.hypotheses;
  return {{"family", family_or_null(r.family)},
          {"lambda", r.options.lambda},
          {"reference_factor", r.options.reference_factor},
          {"horizon", r.options.horizon},
          {"hypotheses",
           {{"gbv", h.gbv_positive},
            {"gbv_negative", h.gbv_negative},
            {"sector", h.sector},
            {"sector_angle", optional_number(h.sector_angle)},
            {"balance", h.balance},
            {"fitted_N0", h.n0_positive},
            {"fitted_N0_negative", h.n0_negative},
            {"met", h.met()}}},
          {"verdict", experiments::to_string(r.verdict)},
          {"gap_trend", experiments::to_string(r.gap_trend)},
          {"coef_trend", experiments::to_string(r.coef_trend)},
          {"theorem_consistent", r.theorem_consistent},
          {"thresholds", thresholds_json(r.options.thresholds)},
          {"rows", rows}};
}

Json to_json(const experiments::RateReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"n", row.n},
                    {"psi", number(row.psi)},
                    {"gap_Sn", number(row.gap_Sn)},
                    {"best_upper", number(row.best_upper)},
                    {"best_lower", number(row.best_lower)},
                    {"coef_log", number(row.coef_log)},
                    {"gap_ratio", number(row.gap_ratio)},
                    {"best_ratio", number(row.best_ratio)},
                    {"coef_ratio", number(row.coef_ratio)}});
  }
  return {{"family", family_or_null(r.family)},
          {"psi", r.psi.to_string()},
          {"lambda", r.options.lambda},
          {"reference_factor", r.options.reference_factor},
          {"doubling", {{"ok", r.doubling.ok}, {"max_ratio", number(r.doubling.max_ratio)}}},
          {"thresholds", {{"ratio_cap", r.options.ratio_cap}, {"growth_factor", r.options.growth_factor}}},
          {"sup_gap_ratio", number(r.sup_gap)},
          {"sup_best_ratio", number(r.sup_best)},
          {"sup_coef_ratio", number(r.sup_coef)},
          {"bounded_gap", r.bounded_gap},
          {"bounded_best", r.bounded_best},
          {"bounded_coef", r.bounded_coef},
          {"verdict", r.bounded() ? "bounded" : "unbounded"},
          {"rows", rows}};
}

Json to_json(const experiments::LebesgueReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"n", row.n},
                    {"dirichlet", number(row.dirichlet)},
                    {"complex", number(row.complex)},
                    {"lower_bound", number(row.lower_bound)},
                    {"refine_dirichlet", number(row.refine_dirichlet)},
                    {"refine_complex", number(row.refine_complex)}});
  }
  auto fit = [](const experiments::LogFit& f) {
    return Json{{"a", number(f.a)},
                {"b", number(f.b)},
                {"max_residual_of_range", number(f.max_residual_of_range)},
                {"max_residual_relative", number(f.max_residual_relative)}};
  };
  return {{"dirichlet_fit", fit(r.dirichlet_fit)},
          {"complex_fit", fit(r.complex_fit)},
          {"residual_tolerance", r.residual_tolerance},
          {"refine_tolerance", r.refine_tolerance},
          {"ratio_spread", number(r.ratio_spread)},
          {"lower_bound_ok", r.lower_bound_ok},
          {"fit_ok", r.fit_ok},
          {"refine_ok", r.refine_ok},
          {"spread_ok", r.spread_ok},
          {"passed", r.passed()},
          {"rows", rows}};
}

Json to_json(const experiments::Lemma3Report& r) {
  return {{"ns", r.ns},
          {"grid_points", r.grid_points},
          {"max_phi", number(r.max_phi)},
          {"max_sine_sum", number(r.max_sine)},
          {"sup_sine_sum", number(r.sup_sine)},
          {"sup_sine_sum_n", r.sup_sine_n},
          {"sine_integral_pi", number(r.gibbs)},
          {"extrapolated_sup", number(r.extrapolated)},
          {"gibbs_tolerance", r.gibbs_tolerance},
          {"bounds_ok", r.bounds_ok},
          {"gibbs_ok", r.gibbs_ok},
          {"witness", r.witness ? Json(*r.witness) : Json(nullptr)}};
}

Json to_json(const experiments::BatteryResult& r) {
  return {{"name", r.name},   {"passed", r.passed},   {"checked", r.checked},
          {"failures", r.failures}, {"worst", number(r.worst)}, {"witness", r.witness},
          {"note", r.note}};
}

Json to_json(const experiments::SuiteReport& r) {
  Json batteries = Json::array();
  for (const auto& b : r.batteries) batteries.push_back(to_json(b));
  Json consistency = Json::array();
  for (const auto& c : r.consistency) {
    consistency.push_back({{"family", family_or_null(c.family)},
                           {"verdict", experiments::to_string(c.verdict)},
                           {"hypotheses_met", c.hypotheses.met()},
                           {"gap_trend", experiments::to_string(c.gap_trend)},
                           {"coef_trend", experiments::to_string(c.coef_trend)},
                           {"theorem_consistent", c.theorem_consistent}});
  }
  const auto& o = r.options;
  return {{"seed", o.seed},
          {"instances", o.instances},
          {"horizon", o.horizon},
          {"flip_breakpoint", o.flip_breakpoint},
          {"passed", r.passed()},
          {"batteries", batteries},
          {"lemma3", to_json(r.lemma3)},
          {"lebesgue", to_json(r.lebesgue)},
          {"consistency", consistency}};
}

Json envelope(const std::string& kind, Json payload) {
  Json j{{"schema_version", kSchemaVersion}, {"kind", kind}};
  for (auto& [key, value] : payload.items()) j[key] = std::move(value);
  return j;
}

std::string to_csv(const experiments::ConvergenceReport& r) {
  std::ostringstream os;
  os << csv_header("convergence");
  os << "n,gap_Sn,cauchy,coef_log,balance,tau_gap,reference_degree,tail_bound\n";
  for (const auto& row : r.rows) {
    os << row.n << ',' << format_double(row.gap_Sn) << ',' << format_double(row.cauchy) << ','
       << format_double(row.coef_log) << ',' << format_double(row.balance) << ','
       << format_double(row.tau_gap) << ',' << row.reference_degree << ','
       << (row.tail_bound ? format_double(*row.tail_bound) : "") << '\n';
  }
  return os.str();
}

std::string to_csv(const experiments::RateReport& r) {
  std::ostringstream os;
  os << csv_header("rate");
  os << "n,psi,gap_Sn,best_upper,best_lower,coef_log,gap_ratio,best_ratio,coef_ratio\n";
  for (const auto& row : r.rows) {
    os << row.n << ',' << format_double(row.psi) << ',' << format_double(row.gap_Sn) << ','
       << format_double(row.best_upper) << ',' << format_double(row.best_lower) << ','
       << format_double(row.coef_log) << ',' << format_double(row.gap_ratio) << ','
       << format_double(row.best_ratio) << ',' << format_double(row.coef_ratio) << '\n';
  }
  return os.str();
}

std::string to_csv(const experiments::LebesgueReport& r) {
  std::ostringstream os;
  os << csv_header("kernels");
  os << "n,dirichlet_l1,complex_l1,lower_bound,refine_dirichlet,refine_complex\n";
  for (const auto& row : r.rows) {
    os << row.n << ',' << format_double(row.dirichlet) << ',' << format_double(row.complex) << ','
       << format_double(row.lower_bound) << ',' << format_double(row.refine_dirichlet) << ','
       << format_double(row.refine_complex) << '\n';
  }
  return os.str();
}

}  // namespace l1f::io
