#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hcg {

// RFC 4180 rows; '#'-prefixed comment lines for the config echo.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& os) : os_(os) {}

    void comment(const std::string& line);
    void header(const std::vector<std::string>& names);
    void row(const std::vector<std::string>& fields);

    static std::string quote(const std::string& field);
    static std::string num(double v);
    static std::string num(long v);

private:
    std::ostream& os_;
};

} // namespace hcg
