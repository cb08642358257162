#pragma once

#include <string>
#include <vector>

namespace rmf::csv {

struct table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Column index by header name, -1 if absent.
    int column(const std::string& name) const;
};

// Plain comma-separated values, no quoting (none of our formats need it).
// Cells are trimmed of surrounding whitespace; blank lines are skipped.
table read_table(const std::string& path);
table parse_table(const std::string& text);

void write_table(const std::string& path, const table& t);

std::vector<std::string> split(const std::string& line, char delim);
std::string trim(const std::string& s);

// Shortest decimal round-trip formatting for doubles ("%.17g" trimmed), so
// re-reading a written spectrum reproduces it bit-exactly.
std::string format_double(double v);
// Fixed-precision formatting for human-facing tables.
std::string format_fixed(double v, int decimals);

double parse_double(const std::string& s, const std::string& context);
long parse_long(const std::string& s, const std::string& context);

}  // namespace rmf::csv
