#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>

#include <l1fourier/errors.hpp>
#include <l1fourier/experiments.hpp>
#include <l1fourier/families.hpp>
#include <l1fourier/seqclass.hpp>

namespace l1f::cli {
namespace {

namespace fs = std::filesystem;
using io::Json;

fs::path output_path(const RunConfig& c, const std::string& name) {
  fs::create_directories(c.out_dir);
  return fs::path(c.out_dir) / name;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << content;
}

void write_json(const RunConfig& c, const std::string& name, const Json& j, std::ostream& out) {
  const auto path = output_path(c, name);
  write_file(path, j.dump(2) + "\n");
  out << "wrote " << path.string() << "\n";
}

void write_csv(const RunConfig& c, const std::string& name, const std::string& csv, std::ostream& out) {
  if (c.format != Format::Csv) return;
  const auto path = output_path(c, name);
  write_file(path, csv);
  out << "wrote " << path.string() << "\n";
}

Json checked(const std::function<seqclass::ClassReport()>& check) {
  try {
    return io::to_json(check());
  } catch (const InputError& e) {
    return {{"applicable", false}, {"reason", e.what()}};
  }
}

std::string verdict_of(const Json& j) {
  return j.contains("verdict") ? j["verdict"].get<std::string>() : "not applicable";
}

int classify(const RunConfig& cfg, std::ostream& out) {
  const auto c = make_family(cfg.family);
  const auto h = cfg.horizon;
  const auto gbv = seqclass::check_gbv(c, h);
  const double angle = std::min(gbv.parameter.value_or(0.0), std::numbers::pi / 2 - 1e-12);
  const seqclass::SectorParams sector(std::isfinite(angle) ? angle : 0.0);

  Json reports;
  reports["gbv"] = io::to_json(gbv);
  reports["gbv_negative"] = io::to_json(seqclass::check_gbv(reflected(c), h));
  reports["sector"] = checked([&] { return seqclass::check_sector(c, sector, h); });
  reports["monotone"] = checked([&] { return seqclass::check_monotone(c, h); });
  reports["quasimonotone_2"] = checked([&] { return seqclass::check_quasimonotone(c, 2.0, h); });
  Json orvqm = Json::array();
  for (const auto& w : {RegVaryingWeight::constant(), RegVaryingWeight::power(1.0),
                        RegVaryingWeight::power(2.0), RegVaryingWeight::log(2.0)}) {
    Json entry = checked([&] { return seqclass::check_orvqm(c, w, sector, h); });
    entry["weight"] = w.name();
    orvqm.push_back(entry);
  }
  reports["orvqm"] = orvqm;
  reports["rbvs"] = checked([&] { return seqclass::check_rbvs(c, h); });

  Json env = io::envelope("classify", {{"family", io::to_json(cfg.family)}, {"horizon", h}, {"reports", reports}});
  out << "family " << cfg.family.family << " horizon " << h << "\n";
  out << "  gbv: " << seqclass::to_string(gbv.verdict) << " N0=" << gbv.fitted_N0 << "\n";
  for (const char* key : {"gbv_negative", "sector", "monotone", "quasimonotone_2", "rbvs"}) {
    out << "  " << key << ": " << verdict_of(reports[key]) << "\n";
  }
  for (const auto& e : orvqm) out << "  orvqm R=" << e["weight"].get<std::string>() << ": " << verdict_of(e) << "\n";

  if (cfg.format == Format::Csv) {
    std::string csv = "# l1fourier classify csv v" + std::to_string(io::kCsvVersion) + "\n";
    csv += "check,verdict,fitted_M,fitted_N0,witness\n";
    auto row = [&](const std::string& name, const Json& j) {
      csv += name + "," + verdict_of(j) + ",";
      if (j.contains("fitted_M") && !j["fitted_M"].is_null()) csv += io::format_double(j["fitted_M"].get<double>());
      csv += ",";
      if (j.contains("fitted_N0")) csv += std::to_string(j["fitted_N0"].get<std::int64_t>());
      csv += ",";
      if (j.contains("witness") && !j["witness"].is_null()) csv += std::to_string(j["witness"].get<std::int64_t>());
      csv += "\n";
    };
    for (const char* key : {"gbv", "gbv_negative", "sector", "monotone", "quasimonotone_2", "rbvs"}) {
      row(key, reports[key]);
    }
    for (const auto& e : orvqm) row("orvqm_" + e["weight"].get<std::string>(), e);
    write_csv(cfg, "classify.csv", csv, out);
  }
  write_json(cfg, "classify.json", env, out);
  return kExitOk;
}

int kernels_cmd(const RunConfig& cfg, std::ostream& out) {
  const auto rep = experiments::lebesgue_growth(cfg.n_grid, experiments::default_grid_factory(cfg.tolerance),
                                                cfg.threads);
  for (const auto& row : rep.rows) {
    out << "  n=" << row.n << " ||D_n||=" << io::format_double(row.dirichlet)
        << " ||E_n||=" << io::format_double(row.complex) << "\n";
  }
  out << "kernels: " << (rep.passed() ? "all checks pass" : "checks FAILED") << "\n";
  write_csv(cfg, "kernels.csv", io::to_csv(rep), out);
  write_json(cfg, "kernels.json", io::envelope("kernels", io::to_json(rep)), out);
  return kExitOk;
}

int converge(const RunConfig& cfg, std::ostream& out) {
  const auto c = make_family(cfg.family);
  experiments::StudyOptions opt;
  opt.lambda = cfg.lambda;
  opt.horizon = cfg.horizon;
  opt.threads = cfg.threads;
  const auto rep = experiments::convergence_study(c, cfg.n_grid, experiments::default_grid_factory(cfg.tolerance), opt);
  for (const auto& row : rep.rows) {
    out << "  n=" << row.n << " cauchy=" << io::format_double(row.cauchy)
        << " coef_log=" << io::format_double(row.coef_log) << "\n";
  }
  out << "verdict: " << experiments::to_string(rep.verdict)
      << (rep.hypotheses.met() ? "" : " (hypotheses not met)") << "\n";
  write_csv(cfg, "converge.csv", io::to_csv(rep), out);
  write_json(cfg, "converge.json", io::envelope("converge", io::to_json(rep)), out);
  return kExitOk;
}

int rate(const RunConfig& cfg, std::ostream& out) {
  const auto c = make_family(cfg.family);
  experiments::RateOptions opt;
  opt.lambda = cfg.lambda;
  opt.threads = cfg.threads;
  const auto psi = experiments::PsiRule::parse(cfg.psi);
  const auto rep =
      experiments::rate_study(c, psi, cfg.n_grid, experiments::default_grid_factory(cfg.tolerance), opt);
  out << "psi " << psi.to_string() << ": sup gap/psi=" << io::format_double(rep.sup_gap)
      << " sup best/psi=" << io::format_double(rep.sup_best)
      << " sup coef/psi=" << io::format_double(rep.sup_coef) << "\n";
  out << "verdict: " << (rep.bounded() ? "bounded" : "unbounded") << "\n";
  write_csv(cfg, "rate.csv", io::to_csv(rep), out);
  write_json(cfg, "rate.json", io::envelope("rate", io::to_json(rep)), out);
  return kExitOk;
}

int verify(const RunConfig& cfg, std::ostream& out) {
  experiments::SuiteOptions opt;
  opt.seed = cfg.seed;
  opt.instances = cfg.instances;
  opt.flip_breakpoint = cfg.debug_flip_breakpoint;
  opt.tolerance = cfg.tolerance;
  opt.threads = cfg.threads;
  const auto rep = experiments::lemma_suite(opt);
  for (const auto& b : rep.batteries) {
    out << (b.passed ? "PASS " : "FAIL ") << b.name << " (" << b.checked << " checks";
    if (!b.passed) out << ", " << b.failures << " failed; witness: " << b.witness;
    out << ")\n";
  }
  write_json(cfg, "verify.json", io::envelope("verify", io::to_json(rep)), out);
  out << (rep.passed() ? "verify: all batteries pass" : "verify: FAILED") << "\n";
  return rep.passed() ? kExitOk : kExitBatteryFailure;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
    switch (config.command) {
      case Command::Classify: return classify(config, out);
      case Command::Kernels: return kernels_cmd(config, out);
      case Command::Converge: return converge(config, out);
      case Command::Rate: return rate(config, out);
      case Command::Verify: return verify(config, out);
    }
  } catch (const InputError& e) {
    err << "invalid configuration: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const ResolutionError& e) {
    err << "resolution or budget error: " << e.what() << "\n";
    return kExitResolution;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitBatteryFailure;
  }
  return kExitOk;
}

}  // namespace l1f::cli
