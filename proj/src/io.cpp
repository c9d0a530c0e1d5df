#include "kg/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace kg {

void write_text(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        std::cout.flush();
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << content;
}

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

} // namespace

std::string summary_csv(const std::vector<SummaryRow>& rows) {
    std::ostringstream os;
    os << "N,mean,stderr,count\n";
    for (const auto& r : rows)
        os << r.n << "," << fmt(r.mean) << "," << fmt(r.stderr_) << "," << r.count
           << "\n";
    return os.str();
}

std::string theory_csv(const std::vector<TheoryRow>& rows) {
    std::ostringstream os;
    os << "N,count,d_free,log4_d_int_upper,loop_avg\n";
    for (const auto& r : rows)
        os << r.n << "," << r.count << "," << fmt(r.d_free) << ","
           << fmt(r.log4_d_int_upper) << "," << fmt(r.loop_avg) << "\n";
    return os.str();
}

CsvColumns read_csv_columns(const std::string& path, const std::string& xcol,
                            const std::string& ycol) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open csv file: " + path);
    std::string line;
    if (!std::getline(f, line)) throw std::runtime_error("empty csv: " + path);
    std::vector<std::string> names;
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) names.push_back(cell);
    }
    int xi = -1, yi = -1;
    for (size_t i = 0; i < names.size(); ++i) {
        if (names[i] == xcol) xi = static_cast<int>(i);
        if (names[i] == ycol) yi = static_cast<int>(i);
    }
    if (xi < 0 || yi < 0)
        throw std::runtime_error("csv is missing column " +
                                 (xi < 0 ? xcol : ycol));
    CsvColumns out;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() <= static_cast<size_t>(std::max(xi, yi)))
            throw std::runtime_error("short csv row: " + line);
        out.x.push_back(std::stod(cells[xi]));
        out.y.push_back(std::stod(cells[yi]));
    }
    return out;
}

} // namespace kg
