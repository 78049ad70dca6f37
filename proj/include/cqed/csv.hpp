#pragma once

#include <string>
#include <vector>

namespace cqed {

// Columnar result with a commented metadata header and PASS/FAIL verdict
// footer.  Data rows are formatted once, so identical runs produce byte
// identical data sections; the timestamp line is the only refresh-varying
// part and is excluded from that guarantee.
struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> verdicts;  // "PASS ..." / "FAIL ..."

    static std::string format_number(double v);

    void add_metadata(const std::string& key, const std::string& value);
    void add_metadata(const std::string& key, double value);
    void add_row(const std::vector<double>& values);
    void add_row(const std::vector<std::string>& cells);
    void pass(const std::string& detail);
    void fail(const std::string& detail);
    bool all_pass() const;

    std::string to_csv(bool with_timestamp = true) const;
    void write(const std::string& path, bool with_timestamp = true) const;
};

}  // namespace cqed
