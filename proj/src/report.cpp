#include "speclab/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "speclab/types.hpp"

namespace speclab {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_complex(std::complex<double> v) {
    return format_double(v.real()) + (v.imag() < 0 ? "" : "+") + format_double(v.imag()) + "i";
}

namespace {

void atomic_write(const std::filesystem::path& target, const std::string& contents) {
    const std::filesystem::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp.string());
        out << contents;
    }
    std::filesystem::rename(tmp, target);
}

}  // namespace

void write_report_files(Report& report, const std::string& out_dir) {
    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);

    std::string csv;
    for (std::size_t c = 0; c < report.csv_columns.size(); ++c) {
        if (c > 0) csv += ',';
        csv += report.csv_columns[c];
    }
    csv += '\n';
    for (const auto& row : report.csv_rows) {
        if (row.size() != report.csv_columns.size())
            throw Error("report: CSV row width does not match the header");
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) csv += ',';
            csv += row[c];
        }
        csv += '\n';
    }

    // The CSV cells are embedded verbatim so the CSV is a projection of the
    // JSON document.
    report.document["kind"] = report.kind;
    report.document["checks"] = {{"all_passed", report.checks_passed},
                                 {"failures", report.failures}};
    report.document["csv"] = {{"columns", report.csv_columns}, {"rows", report.csv_rows}};

    atomic_write(dir / "report.csv", csv);
    atomic_write(dir / "report.json", report.document.dump(2) + "\n");
}

}  // namespace speclab
