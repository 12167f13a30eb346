#include "curvecover/curve_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "curvecover/error.hpp"

namespace curvecover {
namespace {

using nlohmann::json;

[[noreturn]] void file_error(const std::string& why) { throw Error(ErrorCode::FileError, why); }

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view field, std::size_t line_no) {
  field = trim(field);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    file_error("line " + std::to_string(line_no) + ": bad number '" + std::string(field) + "'");
  }
  return v;
}

void check_dims(const CurveDocument& doc) {
  if (doc.dim < 2) file_error("dim must be at least 2");
  for (const auto& v : doc.vertices) {
    if (v.dim() != static_cast<std::size_t>(doc.dim)) {
      file_error("vertex of dimension " + std::to_string(v.dim()) + " in a file declaring dim " +
                 std::to_string(doc.dim));
    }
  }
}

}  // namespace

CurveFormat format_for_path(const std::filesystem::path& path) {
  return path.extension() == ".csv" ? CurveFormat::Csv : CurveFormat::Json;
}

CurveDocument parse_curve_json(std::string_view text) {
  CurveDocument doc;
  try {
    const auto j = json::parse(text);
    doc.dim = j.at("dim").get<int>();
    doc.length_normalized = j.value("length_normalized", false);
    for (const auto& row : j.at("vertices")) {
      doc.vertices.push_back(Point{row.get<std::vector<double>>()});
    }
  } catch (const json::exception& e) {
    file_error(std::string("malformed curve JSON: ") + e.what());
  }
  check_dims(doc);
  return doc;
}

CurveDocument parse_curve_csv(std::string_view text) {
  CurveDocument doc;
  doc.dim = 0;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto pos = line.find("dim=");
      if (pos != std::string_view::npos) {
        auto value = line.substr(pos + 4);
        value = value.substr(0, value.find(' '));
        doc.dim = static_cast<int>(parse_double(value, line_no));
      }
      if (line.find("length_normalized=true") != std::string_view::npos) {
        doc.length_normalized = true;
      }
      continue;
    }
    Point p;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      p.coords.push_back(parse_double(line.substr(start, comma - start), line_no));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    doc.vertices.push_back(std::move(p));
  }
  if (doc.dim == 0) file_error("CSV curve is missing the '# dim=d' header");
  check_dims(doc);
  return doc;
}

CurveDocument to_document(const ClosedCurve& curve) {
  return {static_cast<int>(curve.dim()), curve.is_unit_length(), curve.vertices()};
}

std::string to_json_text(const CurveDocument& doc) {
  json j;
  j["dim"] = doc.dim;
  j["length_normalized"] = doc.length_normalized;
  j["vertices"] = json::array();
  for (const auto& v : doc.vertices) j["vertices"].push_back(v.coords);
  return j.dump() + "\n";
}

std::string to_csv_text(const CurveDocument& doc) {
  std::string out = "# dim=" + std::to_string(doc.dim);
  if (doc.length_normalized) out += " length_normalized=true";
  out += "\n";
  char buf[32];
  for (const auto& v : doc.vertices) {
    for (std::size_t i = 0; i < v.coords.size(); ++i) {
      if (i) out += ',';
      std::snprintf(buf, sizeof buf, "%.17g", v.coords[i]);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

CurveDocument read_curve_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) file_error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  return format_for_path(path) == CurveFormat::Csv ? parse_curve_csv(text)
                                                   : parse_curve_json(text);
}

void write_curve_file(const std::filesystem::path& path, const CurveDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) file_error("cannot write " + path.string());
  out << (format_for_path(path) == CurveFormat::Csv ? to_csv_text(doc) : to_json_text(doc));
  if (!out) file_error("write failed for " + path.string());
}

}  // namespace curvecover
