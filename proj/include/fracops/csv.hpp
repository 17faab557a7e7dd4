#pragma once

#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace fracops::csv {

/// Shortest-safe round-trip form: 17 significant digits, '.' separator,
/// independent of the global locale.
std::string format(double value);

/// Parses a value written by format(). Throws std::invalid_argument.
double parse(std::string_view text);

/// Column-major table written as a header row plus one row per index.
class Table {
public:
    explicit Table(std::vector<std::string> header);

    /// Throws std::invalid_argument if the row width differs from the header.
    void add_row(std::initializer_list<double> row);
    void add_row(const std::vector<double>& row);

    std::size_t rows() const noexcept { return cells_.size(); }
    std::string str() const;

    /// Writes str() to path (binary mode, '\n' line endings). Throws
    /// std::runtime_error if the file cannot be written.
    void write(const std::filesystem::path& path) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<double>> cells_;
};

/// Reads a table written by Table::write. First row is the header.
struct ParsedTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};
ParsedTable read(const std::filesystem::path& path);

}  // namespace fracops::csv
