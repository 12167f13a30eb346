// curvecover: bound tables, cover constructions, shift sweeps and chord
// inequality checks for closed curves.
//
// Exit status: 0 when every certified inequality holds, 1 when one fails,
// 2 on bad flags or input errors.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "curvecover/cli.hpp"
#include "curvecover/error.hpp"

namespace cc = curvecover;

int main(int argc, char** argv) {
  CLI::App app{"Cover closed curves by k closed curves and check the length bounds"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path;
  std::string render_name;
  int grid = 4096;
  double tol = 1e-6;
  app.add_option("--out", out_path, "Write the report to FILE instead of stdout");
  app.add_option("--render", render_name, "Output format: table, json or csv");
  app.add_option("--grid", grid, "Search grid size")->capture_default_str();
  app.add_option("--tol", tol, "Slack allowed in certified inequalities")->capture_default_str();

  // gen
  cc::cli::GenOptions gen_opts;
  std::string kind_name = "circle";
  bool no_normalize = false;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a test curve file");
  gen->add_option("--kind", kind_name,
                  "circle, ellipse, rectangle, regular_polygon, random_closed, lissajous3d")
      ->required();
  gen->add_option("--a", gen_opts.spec.semi_a, "Ellipse semi-axis a")->capture_default_str();
  gen->add_option("--b", gen_opts.spec.semi_b, "Ellipse semi-axis b")->capture_default_str();
  gen->add_option("--aspect", gen_opts.spec.aspect, "Rectangle aspect ratio")->capture_default_str();
  gen->add_option("--sides", gen_opts.spec.sides, "Regular polygon side count")->capture_default_str();
  gen->add_option("--n", gen_opts.spec.count, "Random polyline vertex count")->capture_default_str();
  gen->add_option("--seed", gen_opts.spec.seed, "Random polyline seed")->capture_default_str();
  gen->add_option("--p", gen_opts.spec.freq_p, "Lissajous y frequency")->capture_default_str();
  gen->add_option("--q", gen_opts.spec.freq_q, "Lissajous z frequency")->capture_default_str();
  gen->add_option("--resolution", gen_opts.spec.resolution, "Vertices for smooth kinds")
      ->capture_default_str();
  gen->add_option("--dim", gen_opts.spec.dim, "Embedding dimension")->capture_default_str();
  gen->add_flag("--no-normalize", no_normalize, "Keep the natural scale instead of unit length");
  gen->add_option("--out", gen_out, "Curve file to write (.json or .csv)");

  // bounds
  cc::cli::BoundsOptions bounds_opts;
  auto* bounds = app.add_subcommand("bounds", "Print the bounds table");
  bounds->add_option("--kmax", bounds_opts.kmax, "Largest k")->capture_default_str();

  // partition
  cc::cli::PartitionOptions part_opts;
  std::string mode_name = "uniform";
  std::string objective_name = "max";
  double shift = 0.0;
  auto* partition = app.add_subcommand("partition", "Build and score a cover of a curve file");
  partition->add_option("curve", part_opts.curve_file, "Curve file")->required();
  partition->add_option("--k", part_opts.k, "Number of pieces")->required();
  partition->add_option("--mode", mode_name, "uniform, best, theorem2 or optimized")
      ->capture_default_str();
  auto* shift_opt = partition->add_option("--shift", shift, "Start shift (uniform mode)");
  partition->add_option("--objective", objective_name, "best mode objective: max or avg")
      ->capture_default_str();

  // sweep
  cc::cli::SweepOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "Score uniform covers over a grid of shifts");
  sweep->add_option("curve", sweep_opts.curve_file, "Curve file")->required();
  sweep->add_option("--k", sweep_opts.k, "Number of pieces")->required();
  sweep->add_option("--samples", sweep_opts.samples, "Shift samples in [0, 1/k)")
      ->capture_default_str();

  // verify
  cc::cli::VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Check the average chord inequality");
  verify->add_option("curve", verify_opts.curve_file, "Curve file")->required();
  verify->add_option("--s", verify_opts.s_list, "Arc lengths in [0, 1/2]")->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  try {
    cc::cli::RunReport report;
    cc::cli::Render render = cc::cli::Render::Json;
    if (!render_name.empty()) {
      auto parsed = cc::cli::parse_render(render_name);
      if (!parsed) throw cc::Error(cc::ErrorCode::BadFlag, "unknown --render " + render_name);
      render = *parsed;
    } else if (bounds->parsed()) {
      render = cc::cli::Render::Table;
    }

    if (gen->parsed()) {
      auto kind = cc::parse_curve_kind(kind_name);
      if (!kind) throw cc::Error(cc::ErrorCode::BadFlag, "unknown --kind " + kind_name);
      gen_opts.spec.kind = *kind;
      gen_opts.spec.normalize = !no_normalize;
      gen_opts.out = !gen_out.empty() ? gen_out : out_path;
      report = cc::cli::cmd_gen(gen_opts);
      if (gen_out.empty()) out_path.clear();  // --out named the curve file
    } else if (bounds->parsed()) {
      report = cc::cli::cmd_bounds(bounds_opts);
    } else if (partition->parsed()) {
      auto mode = cc::cli::parse_partition_mode(mode_name);
      if (!mode) throw cc::Error(cc::ErrorCode::BadFlag, "unknown --mode " + mode_name);
      part_opts.mode = *mode;
      if (objective_name == "max") {
        part_opts.objective = cc::ShiftObjective::Max;
      } else if (objective_name == "avg") {
        part_opts.objective = cc::ShiftObjective::Avg;
      } else {
        throw cc::Error(cc::ErrorCode::BadFlag, "unknown --objective " + objective_name);
      }
      if (shift_opt->count() > 0) part_opts.shift = shift;
      part_opts.grid = grid;
      part_opts.tol = tol;
      report = cc::cli::cmd_partition(part_opts);
    } else if (sweep->parsed()) {
      sweep_opts.tol = tol;
      report = cc::cli::cmd_sweep(sweep_opts);
    } else if (verify->parsed()) {
      verify_opts.grid = grid;
      verify_opts.tol = tol;
      report = cc::cli::cmd_verify(verify_opts);
    }

    for (const auto& n : report.notices) std::cerr << "notice: " << n << "\n";
    const std::string text = cc::cli::render(report, render);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw cc::Error(cc::ErrorCode::FileError, "cannot write " + out_path);
      out << text;
    }

    if (!report.all_pass()) {
      for (const auto& v : report.status) {
        if (!v.pass) std::cerr << "failed: " << v.name << " (value " << v.value << ", bound "
                               << v.bound << ")\n";
      }
      return 1;
    }
    return 0;
  } catch (const cc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
