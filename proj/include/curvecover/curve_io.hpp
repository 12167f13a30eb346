#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "curvecover/curve.hpp"

namespace curvecover {

// On-disk curve: vertices in traversal order, closing edge implicit.
//   JSON: {"dim": d, "length_normalized": bool, "vertices": [[x1, ..., xd], ...]}
//   CSV:  header "# dim=d", then one comma-separated vertex per line.
struct CurveDocument {
  int dim = 2;
  bool length_normalized = false;
  std::vector<Point> vertices;
};

enum class CurveFormat { Json, Csv };

CurveFormat format_for_path(const std::filesystem::path& path);

CurveDocument parse_curve_json(std::string_view text);
CurveDocument parse_curve_csv(std::string_view text);

CurveDocument to_document(const ClosedCurve& curve);
std::string to_json_text(const CurveDocument& doc);
std::string to_csv_text(const CurveDocument& doc);

// Throws FileError on unreadable or malformed files.
CurveDocument read_curve_file(const std::filesystem::path& path);
void write_curve_file(const std::filesystem::path& path, const CurveDocument& doc);

}  // namespace curvecover
