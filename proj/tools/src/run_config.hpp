#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <l1fourier/serialization.hpp>
#include <l1fourier/sequence.hpp>

namespace l1f::cli {

enum class Command { Classify, Kernels, Converge, Rate, Verify };
enum class Format { Csv, Json };

std::string to_string(Command c);
Command command_from_string(const std::string& s);
std::string to_string(Format f);
Format format_from_string(const std::string& s);

struct RunConfig {
  Command command = Command::Verify;
  FamilyDescriptor family{"monotone_power", {1.0}, std::nullopt};
  std::int64_t horizon = 4096;
  std::vector<std::int64_t> n_grid = {64, 128, 256, 512, 1024};
  double lambda = 2.0;
  double tolerance = 1e-8;
  std::uint64_t seed = 1;
  std::string out_dir = ".";
  Format format = Format::Csv;
  unsigned threads = 1;
  std::string psi = "power:1,0";
  std::int64_t instances = 50;
  bool debug_flip_breakpoint = false;

  /// Throws InputError when a field is out of range.
  void validate() const;

  bool operator==(const RunConfig&) const = default;
};

io::Json to_json(const RunConfig& c);
/// Missing keys keep their defaults; unknown keys are rejected.
RunConfig config_from_json(const io::Json& j, RunConfig base = {});

std::vector<double> parse_doubles(const std::string& text);
std::vector<std::int64_t> parse_ints(const std::string& text);

}  // namespace l1f::cli
