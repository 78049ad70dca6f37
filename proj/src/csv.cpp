#include "cqed/csv.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cqed/errors.hpp"

namespace cqed {

std::string ResultTable::format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void ResultTable::add_metadata(const std::string& key, const std::string& value) {
    metadata.emplace_back(key, value);
}

void ResultTable::add_metadata(const std::string& key, double value) {
    metadata.emplace_back(key, format_number(value));
}

void ResultTable::add_row(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) cells.push_back(format_number(v));
    add_row(cells);
}

void ResultTable::add_row(const std::vector<std::string>& cells) {
    if (cells.size() != columns.size())
        throw invariant_error("ResultTable: row width does not match the column count");
    rows.push_back(cells);
}

void ResultTable::pass(const std::string& detail) { verdicts.push_back("PASS " + detail); }
void ResultTable::fail(const std::string& detail) { verdicts.push_back("FAIL " + detail); }

bool ResultTable::all_pass() const {
    if (verdicts.empty()) return false;
    for (const auto& v : verdicts)
        if (v.rfind("PASS", 0) != 0) return false;
    return true;
}

std::string ResultTable::to_csv(bool with_timestamp) const {
    std::ostringstream out;
    for (const auto& [k, v] : metadata) out << "# " << k << "=" << v << "\n";
    if (with_timestamp) {
        const auto now = std::chrono::system_clock::now();
        const std::time_t t = std::chrono::system_clock::to_time_t(now);
        char buf[32];
        std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
        out << "# timestamp=" << buf << "\n";
    }
    for (std::size_t c = 0; c < columns.size(); ++c)
        out << columns[c] << (c + 1 < columns.size() ? "," : "");
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << row[c] << (c + 1 < row.size() ? "," : "");
        out << "\n";
    }
    for (const auto& v : verdicts) out << "# verdict " << v << "\n";
    return out.str();
}

void ResultTable::write(const std::string& path, bool with_timestamp) const {
    std::ofstream f(path);
    if (!f) throw config_error("cannot open output file '" + path + "'");
    f << to_csv(with_timestamp);
}

}  // namespace cqed
