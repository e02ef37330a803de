#include "cli/output.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>

#include <json.hpp>

namespace hermitewave::cli {

std::string format_number(double value) {
    std::array<char, 32> buffer{};
    const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    if (ec != std::errc()) throw std::runtime_error("number formatting failed");
    return std::string(buffer.data(), end);
}

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void Table::add_row(std::initializer_list<double> values) {
    if (values.size() != columns_.size()) throw std::logic_error("row width does not match header");
    rows_.emplace_back(values);
}

std::string Table::to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (i) out += ',';
        out += columns_[i];
    }
    out += '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_number(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string Table::to_json() const {
    nlohmann::ordered_json j;
    j["columns"] = columns_;
    j["rows"] = rows_;
    return j.dump(2) + "\n";
}

void write_artifact(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content << std::flush;
        if (!std::cout) throw IoError("failed writing to stdout");
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    file << content;
    file.close();
    if (!file) throw IoError("failed writing '" + path + "'");
}

}  // namespace hermitewave::cli
