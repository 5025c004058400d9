#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include <l1fourier/errors.hpp>

#include "commands.hpp"

namespace {

struct Flags {
  std::string config;
  std::string family;
  std::string params;
  std::string symmetry;
  std::int64_t horizon = 0;
  std::string n_grid;
  double lambda = 0.0;
  double tol = 0.0;
  std::uint64_t seed = 0;
  std::string out_dir;
  std::string format;
  unsigned threads = 0;
  std::string psi;
  std::int64_t instances = 0;
  bool flip = false;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "JSON run configuration; flags override its fields");
  sub->add_option("--family", f.family, "coefficient family name");
  sub->add_option("--params", f.params, "comma-separated family parameters");
  sub->add_option("--symmetry", f.symmetry, "none|one_sided|conjugate|even_real");
  sub->add_option("--horizon", f.horizon, "class-check horizon");
  sub->add_option("--n-grid", f.n_grid, "comma-separated degrees");
  sub->add_option("--lambda", f.lambda, "delay factor lambda > 1");
  sub->add_option("--tol", f.tol, "quadrature tolerance");
  sub->add_option("--seed", f.seed, "random seed for verify");
  sub->add_option("--out-dir", f.out_dir, "directory for reports");
  sub->add_option("--format", f.format, "csv|json row tables");
  sub->add_option("--threads", f.threads, "worker threads");
  sub->add_option("--psi", f.psi, "rate rule power:r[,s] or geometric:q");
  sub->add_option("--instances", f.instances, "randomized instances per battery");
  sub->add_flag("--debug-flip-breakpoint", f.flip, "fault injection for the identity battery");
}

l1f::cli::RunConfig build_config(const CLI::App& sub, const Flags& f, l1f::cli::Command command) {
  using namespace l1f::cli;
  RunConfig c;
  if (sub.count("--config")) {
    std::ifstream in(f.config);
    if (!in) throw l1f::InputError("cannot read config file " + f.config);
    l1f::io::Json j;
    try {
      j = l1f::io::Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw l1f::InputError(std::string("config is not valid JSON: ") + e.what());
    }
    c = config_from_json(j);
  }
  c.command = command;
  if (sub.count("--family")) {
    c.family.family = f.family;
    if (!sub.count("--params")) c.family.params.clear();
  }
  if (sub.count("--params")) c.family.params = parse_doubles(f.params);
  if (sub.count("--symmetry")) c.family.symmetry = l1f::symmetry_from_string(f.symmetry);
  if (sub.count("--horizon")) c.horizon = f.horizon;
  if (sub.count("--n-grid")) c.n_grid = parse_ints(f.n_grid);
  if (sub.count("--lambda")) c.lambda = f.lambda;
  if (sub.count("--tol")) c.tolerance = f.tol;
  if (sub.count("--seed")) c.seed = f.seed;
  if (sub.count("--out-dir")) c.out_dir = f.out_dir;
  if (sub.count("--format")) c.format = format_from_string(f.format);
  if (sub.count("--threads")) c.threads = f.threads;
  if (sub.count("--psi")) c.psi = f.psi;
  if (sub.count("--instances")) c.instances = f.instances;
  if (f.flip) c.debug_flip_breakpoint = true;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  using l1f::cli::Command;
  CLI::App app{"l1fourier: L1 convergence studies for trigonometric series"};
  app.require_subcommand(1);
  Flags flags;
  const std::vector<std::pair<const char*, Command>> commands = {
      {"classify", Command::Classify}, {"kernels", Command::Kernels}, {"converge", Command::Converge},
      {"rate", Command::Rate},         {"verify", Command::Verify}};
  const std::map<std::string, std::string> help = {
      {"classify", "run every class checker on a family"},
      {"kernels", "Dirichlet and complex kernel L1 norms"},
      {"converge", "L1 convergence study over an n grid"},
      {"rate", "rate study against a psi rule"},
      {"verify", "run the full property battery"}};
  for (const auto& [name, cmd] : commands) add_common(app.add_subcommand(name, help.at(name)), flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return l1f::cli::kExitInvalidConfig;
  }

  for (const auto& [name, cmd] : commands) {
    const CLI::App* sub = app.get_subcommand(name);
    if (!sub->parsed()) continue;
    try {
      return l1f::cli::run(build_config(*sub, flags, cmd), std::cout, std::cerr);
    } catch (const l1f::InputError& e) {
      std::cerr << "invalid configuration: " << e.what() << "\n";
      return l1f::cli::kExitInvalidConfig;
    }
  }
  return l1f::cli::kExitInvalidConfig;
}
