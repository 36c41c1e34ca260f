#include "dcnet/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace dcnet {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::string join_csv(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out += ',';
        out += fields[i];
    }
    return out;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

CsvReader::CsvReader(std::istream& in, const std::string& expected_header, std::string source_name)
    : in_(in), name_(std::move(source_name)) {
    std::string header;
    if (!std::getline(in_, header))
        throw std::runtime_error(name_ + ": empty file, expected header '" + expected_header + "'");
    ++line_;
    if (!header.empty() && header.back() == '\r') header.pop_back();
    if (header != expected_header)
        throw std::runtime_error(name_ + ":1: bad header '" + header + "', expected '" +
                                 expected_header + "'");
    n_fields_ = split_csv_line(expected_header).size();
}

bool CsvReader::next(std::vector<std::string>& fields) {
    std::string row;
    while (std::getline(in_, row)) {
        ++line_;
        if (!row.empty() && row.back() == '\r') row.pop_back();
        if (row.empty()) continue;
        fields = split_csv_line(row);
        if (fields.size() != n_fields_)
            fail("expected " + std::to_string(n_fields_) + " fields, got " +
                 std::to_string(fields.size()));
        return true;
    }
    return false;
}

void CsvReader::fail(const std::string& message) const {
    throw std::runtime_error(name_ + ":" + std::to_string(line_) + ": " + message);
}

} // namespace dcnet
