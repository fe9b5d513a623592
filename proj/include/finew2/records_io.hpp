#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "finew2/classify.hpp"

namespace finew2 {

std::string record_to_json(const ClassificationRecord& r);
ClassificationRecord record_from_json(const std::string& line);  // throws std::invalid_argument

// One classified record as a CSV row "g,vertices2x,base_key" with vertices2x
// space-separated.
std::string record_to_csv(const ClassificationRecord& r);
std::string record_csv_header();

struct ImportReport {
    std::vector<HalfPolygon> polygons;                  // canonicalized
    std::vector<std::pair<int, std::string>> errors;    // 1-based line number, reason
};

// Accepts JSONL records, bare JSON vertex arrays, or whitespace-separated
// doubled coordinates, one polygon per line.
ImportReport import_polygons(std::istream& in);

void export_polygons(std::ostream& out, const std::vector<HalfPolygon>& polys);

}  // namespace finew2
