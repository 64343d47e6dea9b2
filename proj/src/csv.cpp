#include "hcg/csv.hpp"

#include <cstdio>
#include <sstream>

namespace hcg {

void CsvWriter::comment(const std::string& line)
{
    std::istringstream in(line);
    std::string part;
    while (std::getline(in, part)) os_ << "# " << part << "\r\n";
}

void CsvWriter::header(const std::vector<std::string>& names) { row(names); }

void CsvWriter::row(const std::vector<std::string>& fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) os_ << ',';
        os_ << quote(fields[i]);
    }
    os_ << "\r\n";
}

std::string CsvWriter::quote(const std::string& field)
{
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

std::string CsvWriter::num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string CsvWriter::num(long v) { return std::to_string(v); }

} // namespace hcg
