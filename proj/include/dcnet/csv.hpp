#pragma once

#include <istream>
#include <string>
#include <vector>

namespace dcnet {

// Minimal CSV support for the fixed schemas this project reads and writes:
// comma-separated, no quoting, one header line. Fields must not contain
// commas or newlines.
class CsvReader {
public:
    // Validates that the first line equals `expected_header` exactly.
    // `source_name` is used in error messages.
    CsvReader(std::istream& in, const std::string& expected_header, std::string source_name);

    // Reads the next data row; returns false at end of input. Blank lines are
    // skipped. Throws std::runtime_error (with file and line) when the field
    // count differs from the header's.
    bool next(std::vector<std::string>& fields);

    int line() const { return line_; }
    const std::string& source() const { return name_; }

    [[noreturn]] void fail(const std::string& message) const;

private:
    std::istream& in_;
    std::string name_;
    std::size_t n_fields_;
    int line_ = 0;
};

std::vector<std::string> split_csv_line(const std::string& line);
std::string join_csv(const std::vector<std::string>& fields);

// Deterministic shortest-ish representation of a double ("%.12g").
std::string format_double(double v);

} // namespace dcnet
