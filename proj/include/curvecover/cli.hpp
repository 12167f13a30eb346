#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "curvecover/curve.hpp"
#include "curvecover/generators.hpp"
#include "curvecover/partition.hpp"

namespace curvecover::cli {

enum class Render { Table, Json, Csv };

std::optional<Render> parse_render(std::string_view name);

// One certified inequality: pass iff value <= bound + slack tolerance.
struct Verdict {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  double slack = 0.0;  // bound - value
  bool pass = false;
};

Verdict make_verdict(std::string name, double value, double bound, double tol);

struct RunReport {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::vector<Verdict> status;
  std::vector<std::string> notices;

  bool all_pass() const;
  nlohmann::json to_json() const;
};

struct BoundsOptions {
  int kmax = 10;
};

struct GenOptions {
  CurveSpec spec;
  std::filesystem::path out;
};

enum class PartitionMode { Uniform, Best, Theorem2, Optimized };

std::optional<PartitionMode> parse_partition_mode(std::string_view name);

struct PartitionOptions {
  std::filesystem::path curve_file;
  int k = 2;
  PartitionMode mode = PartitionMode::Uniform;
  std::optional<double> shift;
  ShiftObjective objective = ShiftObjective::Max;
  int grid = 4096;
  double tol = 1e-6;
};

struct SweepOptions {
  std::filesystem::path curve_file;
  int k = 2;
  int samples = 256;
  double tol = 1e-6;
};

struct VerifyOptions {
  std::filesystem::path curve_file;
  std::vector<double> s_list{0.05, 0.1, 0.25, 0.4, 0.5};
  int grid = 4096;
  double tol = 1e-6;
};

// Reads a curve file and rescales it to unit length, recording a notice when
// the file was not already normalized.
ClosedCurve load_unit_curve(const std::filesystem::path& path, std::vector<std::string>& notices);

RunReport cmd_gen(const GenOptions& opts);
RunReport cmd_bounds(const BoundsOptions& opts);
RunReport cmd_partition(const PartitionOptions& opts);
RunReport cmd_sweep(const SweepOptions& opts);
RunReport cmd_verify(const VerifyOptions& opts);

// Serializes a report in the requested format. Formats a command has no
// natural rendering for fall back to JSON.
std::string render(const RunReport& report, Render mode);

}  // namespace curvecover::cli
