#include "fracops/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace fracops::csv {

std::string format(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    if (res.ec != std::errc{}) throw std::runtime_error("csv: cannot format value");
    return std::string(buf, res.ptr);
}

double parse(std::string_view text) {
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw std::invalid_argument("csv: cannot parse '" + std::string(text) + "'");
    }
    return v;
}

Table::Table(std::vector<std::string> header) : header_(std::move(header)) {}

void Table::add_row(std::initializer_list<double> row) { add_row(std::vector<double>(row)); }

void Table::add_row(const std::vector<double>& row) {
    if (row.size() != header_.size()) throw std::invalid_argument("csv: row width does not match header");
    cells_.push_back(row);
}

std::string Table::str() const {
    std::string out;
    for (std::size_t c = 0; c < header_.size(); ++c) {
        if (c) out += ',';
        out += header_[c];
    }
    out += '\n';
    for (const auto& row : cells_) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += format(row[c]);
        }
        out += '\n';
    }
    return out;
}

void Table::write(const std::filesystem::path& path) const {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    const std::string text = str();
    os.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!os) throw std::runtime_error("failed writing '" + path.string() + "'");
}

ParsedTable read(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open '" + path.string() + "'");
    ParsedTable table;
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (first) {
            table.header = std::move(fields);
            first = false;
            continue;
        }
        std::vector<double> row;
        row.reserve(fields.size());
        for (const auto& f : fields) row.push_back(parse(f));
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace fracops::csv
