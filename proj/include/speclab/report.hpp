#ifndef SPECLAB_REPORT_HPP
#define SPECLAB_REPORT_HPP

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

namespace speclab {

/// Assembled experiment output. The CSV table is a projection of the JSON
/// document: the same cells are embedded verbatim under document["csv"].
struct Report {
    std::string kind;
    nlohmann::json document;
    std::vector<std::string> csv_columns;
    std::vector<std::vector<std::string>> csv_rows;
    bool checks_passed = true;
    std::vector<std::string> failures;
};

/// 17 significant digits: enough to round-trip an IEEE double exactly.
std::string format_double(double v);
std::string format_complex(std::complex<double> v);  // "re+imi" cell pair helper

/// Writes report.json and report.csv into out_dir (created if missing),
/// atomically via write-then-rename.
void write_report_files(Report& report, const std::string& out_dir);

}  // namespace speclab

#endif
