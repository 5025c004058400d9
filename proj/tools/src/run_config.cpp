#include "run_config.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include <l1fourier/errors.hpp>
#include <l1fourier/experiments.hpp>

namespace l1f::cli {
namespace {

constexpr std::int64_t kMaxHorizon = std::int64_t{1} << 22;
constexpr std::int64_t kMaxInstances = 10000;

// Blank text is an empty list; an empty item between commas is an error.
std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw InputError("empty entry in list '" + text + "'");
    out.push_back(item);
  }
  if (text.find_last_not_of(" \t") == text.rfind(',')) throw InputError("empty entry in list '" + text + "'");
  return out;
}

template <typename T>
T get(const io::Json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("config key '") + key + "': " + e.what());
  }
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::Classify: return "classify";
    case Command::Kernels: return "kernels";
    case Command::Converge: return "converge";
    case Command::Rate: return "rate";
    case Command::Verify: return "verify";
  }
  return "verify";
}

Command command_from_string(const std::string& s) {
  for (Command c : {Command::Classify, Command::Kernels, Command::Converge, Command::Rate,
                    Command::Verify}) {
    if (to_string(c) == s) return c;
  }
  throw InputError("unknown command '" + s + "'");
}

std::string to_string(Format f) { return f == Format::Csv ? "csv" : "json"; }

Format format_from_string(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw InputError("format must be csv or json, got '" + s + "'");
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split(text)) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || !std::isfinite(v)) throw InputError("not a finite number: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<std::int64_t> parse_ints(const std::string& text) {
  std::vector<std::int64_t> out;
  for (const auto& item : split(text)) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw InputError("not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

void RunConfig::validate() const {
  if (horizon < 2 || horizon > kMaxHorizon) {
    throw InputError("horizon must lie in [2, " + std::to_string(kMaxHorizon) + "]");
  }
  if (n_grid.empty()) throw InputError("n grid must not be empty");
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    if (n_grid[i] < 2) throw InputError("n grid values must be >= 2");
    if (i > 0 && n_grid[i] <= n_grid[i - 1]) throw InputError("n grid must be strictly increasing");
  }
  if (!(lambda > 1.0) || lambda > 16.0) throw InputError("lambda must lie in (1, 16]");
  if (!(tolerance >= 1e-14) || tolerance > 1e-2) throw InputError("tolerance must lie in [1e-14, 1e-2]");
  if (threads < 1 || threads > 256) throw InputError("threads must lie in [1, 256]");
  if (instances < 1 || instances > kMaxInstances) {
    throw InputError("instances must lie in [1, " + std::to_string(kMaxInstances) + "]");
  }
  if (out_dir.empty()) throw InputError("out-dir must not be empty");
  const auto& names = family_names();
  if (std::find(names.begin(), names.end(), family.family) == names.end()) {
    throw InputError("unknown family '" + family.family + "'");
  }
  experiments::PsiRule::parse(psi);
}

io::Json to_json(const RunConfig& c) {
  return {{"command", to_string(c.command)},
          {"family", io::to_json(c.family)},
          {"horizon", c.horizon},
          {"n_grid", c.n_grid},
          {"lambda", c.lambda},
          {"tolerance", c.tolerance},
          {"seed", c.seed},
          {"out_dir", c.out_dir},
          {"format", to_string(c.format)},
          {"threads", c.threads},
          {"psi", c.psi},
          {"instances", c.instances},
          {"debug_flip_breakpoint", c.debug_flip_breakpoint}};
}

RunConfig config_from_json(const io::Json& j, RunConfig c) {
  if (!j.is_object()) throw InputError("config must be a JSON object");
  static const std::set<std::string> known = {
      "command", "family",  "horizon", "n_grid", "lambda",    "tolerance",           "seed",
      "out_dir", "format",  "threads", "psi",    "instances", "debug_flip_breakpoint"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) throw InputError("unknown config key '" + key + "'");
  }
  if (j.contains("command")) c.command = command_from_string(get<std::string>(j, "command"));
  if (j.contains("family")) c.family = io::descriptor_from_json(j["family"]);
  if (j.contains("horizon")) c.horizon = get<std::int64_t>(j, "horizon");
  if (j.contains("n_grid")) c.n_grid = get<std::vector<std::int64_t>>(j, "n_grid");
  if (j.contains("lambda")) c.lambda = get<double>(j, "lambda");
  if (j.contains("tolerance")) c.tolerance = get<double>(j, "tolerance");
  if (j.contains("seed")) c.seed = get<std::uint64_t>(j, "seed");
  if (j.contains("out_dir")) c.out_dir = get<std::string>(j, "out_dir");
  if (j.contains("format")) c.format = format_from_string(get<std::string>(j, "format"));
  if (j.contains("threads")) c.threads = get<unsigned>(j, "threads");
  if (j.contains("psi")) c.psi = get<std::string>(j, "psi");
  if (j.contains("instances")) c.instances = get<std::int64_t>(j, "instances");
  if (j.contains("debug_flip_breakpoint")) c.debug_flip_breakpoint = get<bool>(j, "debug_flip_breakpoint");
  return c;
}

}  // namespace l1f::cli
