#include "curvecover/cli.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "curvecover/bounds.hpp"
#include "curvecover/chord.hpp"
#include "curvecover/curve_io.hpp"
#include "curvecover/error.hpp"

namespace curvecover::cli {
namespace {

using nlohmann::json;

[[noreturn]] void bad_flag(const std::string& why) { throw Error(ErrorCode::BadFlag, why); }

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fixed(double v, int digits = 6) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string_view mode_name(PartitionMode m) {
  switch (m) {
    case PartitionMode::Uniform: return "uniform";
    case PartitionMode::Best: return "best";
    case PartitionMode::Theorem2: return "theorem2";
    case PartitionMode::Optimized: return "optimized";
  }
  return "uniform";
}

std::string verdict_lines(const RunReport& report) {
  std::string out;
  for (const auto& v : report.status) {
    out += (v.pass ? "PASS  " : "FAIL  ") + v.name + "  value=" + num(v.value) +
           " bound=" + num(v.bound) + " slack=" + num(v.slack) + "\n";
  }
  return out;
}

std::string notice_lines(const RunReport& report) {
  std::string out;
  for (const auto& n : report.notices) out += "# notice: " + n + "\n";
  return out;
}

std::string render_bounds_table(const RunReport& report) {
  const auto& rows = report.results.at("rows");
  std::string line_k = "k               ";
  std::string line_lower = "Lower bound     ";
  std::string line_bkk = "BKK upper (d=2) ";
  std::string line_new = "New upper bound ";
  char buf[32];
  for (const auto& row : rows) {
    const auto& r = row.at("rendered");
    std::snprintf(buf, sizeof buf, " %7d", row.at("k").get<int>());
    line_k += buf;
    std::snprintf(buf, sizeof buf, " %7s", r.at("lower").get<std::string>().c_str());
    line_lower += buf;
    std::snprintf(buf, sizeof buf, " %7s", r.at("bkk_upper").get<std::string>().c_str());
    line_bkk += buf;
    std::snprintf(buf, sizeof buf, " %7s", r.at("new_upper").get<std::string>().c_str());
    line_new += buf;
  }
  return line_k + "\n" + line_lower + "\n" + line_bkk + "\n" + line_new + "\n";
}

std::string render_bounds_csv(const RunReport& report) {
  std::string out = "k,lower,bkk_upper,new_upper,s_k\n";
  for (const auto& row : report.results.at("rows")) {
    const auto& r = row.at("rendered");
    out += std::to_string(row.at("k").get<int>()) + "," + r.at("lower").get<std::string>() + "," +
           r.at("bkk_upper").get<std::string>() + "," + r.at("new_upper").get<std::string>() + ",";
    if (!row.at("s_k").is_null()) out += num(row.at("s_k").get<double>());
    out += "\n";
  }
  return out;
}

std::string render_sweep_csv(const RunReport& report) {
  std::string out = notice_lines(report) + "shift,beta,gamma\n";
  for (const auto& s : report.results.at("samples")) {
    out += num(s.at("shift").get<double>()) + "," + num(s.at("beta").get<double>()) + "," +
           num(s.at("gamma").get<double>()) + "\n";
  }
  for (const auto& v : report.status) {
    out += "# " + v.name + ": value=" + num(v.value) + " bound=" + num(v.bound) +
           " verdict=" + (v.pass ? "pass" : "fail") + "\n";
  }
  return out;
}

std::string render_partition(const RunReport& report, bool csv) {
  const auto& r = report.results;
  std::string out = notice_lines(report);
  if (csv) {
    out += "index,t_start,length_frac,piece_length\n";
  } else {
    out += "k=" + std::to_string(r.at("k").get<int>()) +
           " construction=" + r.at("construction").get<std::string>() +
           " shift_or_s=" + num(r.at("shift_or_s").get<double>()) + "\n";
  }
  int i = 0;
  for (const auto& p : r.at("pieces")) {
    if (csv) {
      out += std::to_string(i) + "," + num(p.at("t_start").get<double>()) + "," +
             num(p.at("length_frac").get<double>()) + "," +
             num(p.at("piece_length").get<double>()) + "\n";
    } else {
      out += "  piece " + std::to_string(i) + ": t_start=" + fixed(p.at("t_start").get<double>()) +
             " length_frac=" + fixed(p.at("length_frac").get<double>()) +
             " piece_length=" + fixed(p.at("piece_length").get<double>()) + "\n";
    }
    ++i;
  }
  if (!csv) {
    out += "beta=" + fixed(r.at("beta").get<double>()) +
           " gamma=" + fixed(r.at("gamma").get<double>()) +
           " bound=" + fixed(r.at("bound").get<double>()) + "\n" + verdict_lines(report);
  }
  return out;
}

std::string render_verify(const RunReport& report, bool csv) {
  std::string out = notice_lines(report);
  if (csv) {
    out += "s,average_chord,bound,slack,verdict\n";
    for (const auto& row : report.results.at("checks")) {
      out += num(row.at("s").get<double>()) + "," + num(row.at("average_chord").get<double>()) +
             "," + num(row.at("bound").get<double>()) + "," + num(row.at("slack").get<double>()) +
             "," + (row.at("pass").get<bool>() ? "pass" : "fail") + "\n";
    }
    return out;
  }
  for (const auto& row : report.results.at("checks")) {
    out += "s=" + fixed(row.at("s").get<double>(), 4) +
           "  average_chord=" + fixed(row.at("average_chord").get<double>(), 9) +
           "  sin(pi s)/pi=" + fixed(row.at("bound").get<double>(), 9) +
           "  slack=" + num(row.at("slack").get<double>());
    if (row.at("near_equality").get<bool>()) out += "  (near equality)";
    out += "\n";
  }
  return out + verdict_lines(report);
}

}  // namespace

std::optional<Render> parse_render(std::string_view name) {
  if (name == "table") return Render::Table;
  if (name == "json") return Render::Json;
  if (name == "csv") return Render::Csv;
  return std::nullopt;
}

std::optional<PartitionMode> parse_partition_mode(std::string_view name) {
  for (auto m : {PartitionMode::Uniform, PartitionMode::Best, PartitionMode::Theorem2,
                 PartitionMode::Optimized}) {
    if (mode_name(m) == name) return m;
  }
  return std::nullopt;
}

Verdict make_verdict(std::string name, double value, double bound, double tol) {
  return {std::move(name), value, bound, bound - value, value <= bound + tol};
}

bool RunReport::all_pass() const {
  for (const auto& v : status) {
    if (!v.pass) return false;
  }
  return true;
}

json RunReport::to_json() const {
  json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["notices"] = notices;
  j["results"] = results;
  json st = json::array();
  for (const auto& v : status) {
    st.push_back({{"name", v.name},
                  {"value", v.value},
                  {"bound", v.bound},
                  {"slack", v.slack},
                  {"verdict", v.pass ? "pass" : "fail"}});
  }
  j["status"] = st;
  return j;
}

ClosedCurve load_unit_curve(const std::filesystem::path& path, std::vector<std::string>& notices) {
  const auto doc = read_curve_file(path);
  auto curve = build_curve(doc.vertices, false);
  if (!curve.is_unit_length()) {
    notices.push_back("input curve of length " + num(curve.length()) + " rescaled to unit length");
    curve = build_curve(doc.vertices, true);
  }
  return curve;
}

RunReport cmd_gen(const GenOptions& opts) {
  if (opts.out.empty()) bad_flag("gen requires --out FILE");
  const auto curve = generate(opts.spec);
  auto doc = to_document(curve);
  doc.length_normalized = opts.spec.normalize;
  write_curve_file(opts.out, doc);

  RunReport report;
  report.command = "gen";
  report.inputs = {{"kind", std::string(to_string(opts.spec.kind))},
                   {"dim", opts.spec.dim},
                   {"normalize", opts.spec.normalize},
                   {"out", opts.out.string()}};
  report.results = {{"vertices", curve.size()}, {"length", curve.length()}};
  return report;
}

RunReport cmd_bounds(const BoundsOptions& opts) {
  if (opts.kmax < 1) bad_flag("--kmax must be at least 1");
  RunReport report;
  report.command = "bounds";
  report.inputs = {{"kmax", opts.kmax}};
  json rows = json::array();
  for (const auto& row : table1(opts.kmax)) {
    const auto rendered = render_row(row);
    json r = {{"k", row.k},
              {"lower", row.lower},
              {"bkk_upper", row.bkk_upper},
              {"new_upper", row.new_upper},
              {"s_k", nullptr},
              {"rendered",
               {{"lower", rendered.lower},
                {"bkk_upper", rendered.bkk_upper},
                {"new_upper", rendered.new_upper}}}};
    if (row.s_k) {
      r["s_k"] = *row.s_k;
      report.status.push_back(
          make_verdict("new_upper <= bkk_upper (k=" + std::to_string(row.k) + ")", row.new_upper,
                       row.bkk_upper, 0.0));
      report.status.push_back(
          make_verdict("lower <= new_upper (k=" + std::to_string(row.k) + ")", row.lower,
                       row.new_upper, 0.0));
    }
    rows.push_back(std::move(r));
  }
  report.results["rows"] = std::move(rows);
  return report;
}

RunReport cmd_partition(const PartitionOptions& opts) {
  if (opts.grid < 2) bad_flag("--grid must be at least 2");
  if (opts.shift && opts.mode != PartitionMode::Uniform) {
    bad_flag("--shift is only valid with --mode uniform");
  }
  if (opts.k < 1) throw Error(ErrorCode::KTooSmall, "k must be at least 1");

  RunReport report;
  report.command = "partition";
  report.inputs = {{"curve", opts.curve_file.string()},
                   {"k", opts.k},
                   {"mode", std::string(mode_name(opts.mode))},
                   {"grid", opts.grid},
                   {"tol", opts.tol}};
  if (opts.shift) report.inputs["shift"] = *opts.shift;
  if (opts.mode == PartitionMode::Best) {
    report.inputs["objective"] = opts.objective == ShiftObjective::Max ? "max" : "avg";
  }
  if ((opts.mode == PartitionMode::Theorem2 || opts.mode == PartitionMode::Optimized) &&
      opts.k < 3) {
    throw Error(ErrorCode::KTooSmall, "the non-uniform constructions need k >= 3");
  }

  const auto curve = load_unit_curve(opts.curve_file, report.notices);

  Cover cover;
  double bound = 0.0;
  bool bound_on_beta = false;
  std::string bound_name;
  switch (opts.mode) {
    case PartitionMode::Uniform:
      cover = uniform_partition(curve, opts.k, opts.shift.value_or(0.0));
      bound = opts.k >= 2 ? gamma_upper_simple(opts.k) : 1.0;
      bound_name = "gamma <= 2/k";
      break;
    case PartitionMode::Best:
      cover = best_uniform_shift(curve, opts.k, opts.objective, opts.grid).cover;
      if (opts.objective == ShiftObjective::Max) {
        bound = opts.k >= 2 ? gamma_upper_simple(opts.k) : 1.0;
        bound_name = "gamma <= 2/k";
      } else {
        bound = beta_extremal(opts.k);
        bound_on_beta = true;
        bound_name = "beta <= 1/k + sin(pi/k)/pi";
      }
      break;
    case PartitionMode::Theorem2:
      cover = theorem2_partition(curve, opts.k, opts.grid);
      bound = gamma_upper_refined(opts.k);
      bound_name = "gamma <= 2/k - 1/(4k^4)";
      break;
    case PartitionMode::Optimized:
      cover = optimized_partition(curve, opts.k, opts.grid);
      bound = solve_sk(opts.k).bound;
      bound_name = "gamma <= 2(1-s_k)/(k-1)";
      break;
  }
  const auto metrics = cover_metrics(curve, cover);
  const double checked = bound_on_beta ? metrics.beta : metrics.gamma;
  auto verdict = make_verdict(bound_name, checked, bound, opts.tol);

  json pieces = json::array();
  for (std::size_t i = 0; i < cover.k(); ++i) {
    pieces.push_back({{"t_start", cover.pieces[i].t_start},
                      {"length_frac", cover.pieces[i].length_frac},
                      {"piece_length", cover.piece_lengths[i]}});
  }
  report.results = {{"k", opts.k},
                    {"construction", std::string(to_string(cover.construction))},
                    {"shift_or_s", cover.parameter},
                    {"pieces", pieces},
                    {"beta", metrics.beta},
                    {"gamma", metrics.gamma},
                    {"bound", bound},
                    {"bound_satisfied", verdict.pass}};
  report.status.push_back(std::move(verdict));
  return report;
}

RunReport cmd_sweep(const SweepOptions& opts) {
  if (opts.samples < 2) bad_flag("--samples must be at least 2");
  if (opts.k < 1) throw Error(ErrorCode::KTooSmall, "k must be at least 1");

  RunReport report;
  report.command = "sweep";
  report.inputs = {{"curve", opts.curve_file.string()},
                   {"k", opts.k},
                   {"samples", opts.samples},
                   {"tol", opts.tol}};
  const auto curve = load_unit_curve(opts.curve_file, report.notices);

  json samples = json::array();
  double beta_sum = 0.0;
  double min_gamma = INFINITY;
  double min_gamma_shift = 0.0;
  for (int j = 0; j < opts.samples; ++j) {
    const double shift = static_cast<double>(j) / (static_cast<double>(opts.k) * opts.samples);
    const auto m = cover_metrics(curve, uniform_partition(curve, opts.k, shift));
    beta_sum += m.beta;
    if (m.gamma < min_gamma) {
      min_gamma = m.gamma;
      min_gamma_shift = shift;
    }
    samples.push_back({{"shift", shift}, {"beta", m.beta}, {"gamma", m.gamma}});
  }
  const double mean_beta = beta_sum / opts.samples;
  const double bound = beta_extremal(opts.k);
  report.results = {{"samples", samples},
                    {"mean_beta", mean_beta},
                    {"bound", bound},
                    {"min_gamma", min_gamma},
                    {"min_gamma_shift", min_gamma_shift}};
  report.status.push_back(make_verdict("mean beta <= 1/k + sin(pi/k)/pi", mean_beta, bound, opts.tol));
  return report;
}

RunReport cmd_verify(const VerifyOptions& opts) {
  if (opts.s_list.empty()) bad_flag("verify needs at least one --s value");
  if (opts.grid < 2) bad_flag("--grid must be at least 2");
  for (double s : opts.s_list) {
    if (!(s >= 0.0 && s <= 0.5)) {
      throw Error(ErrorCode::OutOfRange, "s = " + num(s) + " lies outside [0, 1/2]");
    }
  }

  RunReport report;
  report.command = "verify";
  report.inputs = {{"curve", opts.curve_file.string()},
                   {"s", opts.s_list},
                   {"grid", opts.grid},
                   {"tol", opts.tol}};
  const auto curve = load_unit_curve(opts.curve_file, report.notices);

  json checks = json::array();
  for (double s : opts.s_list) {
    const double value = average_chord(curve, s);
    const double bound = std::sin(std::numbers::pi * s) / std::numbers::pi;
    auto verdict = make_verdict("average_chord(s=" + num(s) + ") <= sin(pi s)/pi", value, bound,
                                opts.tol);
    json row = {{"s", s},
                {"average_chord", value},
                {"bound", bound},
                {"slack", verdict.slack},
                {"pass", verdict.pass},
                {"near_equality", std::abs(verdict.slack) < 1e-4}};
    report.status.push_back(std::move(verdict));
    if (s > 0.0) {
      const auto best = min_chord_start(curve, s, opts.grid);
      row["min_chord"] = {{"t_star", best.t_star}, {"chord", best.chord}};
      report.status.push_back(make_verdict("min_chord(s=" + num(s) + ") <= average_chord",
                                           best.chord, value, opts.tol));
    }
    checks.push_back(std::move(row));
  }
  report.results = {{"checks", checks}};
  return report;
}

std::string render(const RunReport& report, Render mode) {
  if (mode == Render::Json) return report.to_json().dump(2) + "\n";
  const bool csv = mode == Render::Csv;
  if (report.command == "bounds") {
    return csv ? render_bounds_csv(report) : render_bounds_table(report);
  }
  if (report.command == "partition") return render_partition(report, csv);
  if (report.command == "verify") return render_verify(report, csv);
  if (report.command == "sweep") {
    if (csv) return render_sweep_csv(report);
    const auto& r = report.results;
    return notice_lines(report) + "samples=" + std::to_string(r.at("samples").size()) +
           " mean_beta=" + fixed(r.at("mean_beta").get<double>()) +
           " min_gamma=" + fixed(r.at("min_gamma").get<double>()) +
           " at shift=" + num(r.at("min_gamma_shift").get<double>()) + "\n" +
           verdict_lines(report);
  }
  return report.to_json().dump(2) + "\n";
}

}  // namespace curvecover::cli
