#pragma once
#include <string>
#include <vector>

#include "kg/theory.hpp"

namespace kg {

// Writes to the path, or to stdout when path is empty or "-".
void write_text(const std::string& path, const std::string& content);

struct SummaryRow {
    int n = 0;
    double mean = 0.0;
    double stderr_ = 0.0;
    int count = 0;
};

std::string summary_csv(const std::vector<SummaryRow>& rows);
std::string theory_csv(const std::vector<TheoryRow>& rows);

// Minimal CSV reader for the fit subcommand: pulls two named columns from a
// header-bearing file.
struct CsvColumns {
    std::vector<double> x, y;
};
CsvColumns read_csv_columns(const std::string& path, const std::string& xcol,
                            const std::string& ycol);

} // namespace kg
