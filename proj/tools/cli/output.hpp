#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace hermitewave::cli {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shortest decimal string that parses back to the same double.
std::string format_number(double value);

/// Tabular artifact rendered either as CSV (header row, LF endings) or as
/// {"columns": [...], "rows": [[...], ...]} JSON.
class Table {
public:
    explicit Table(std::vector<std::string> columns);

    void add_row(std::initializer_list<double> values);
    std::size_t rows() const noexcept { return rows_.size(); }

    std::string to_csv() const;
    std::string to_json() const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<double>> rows_;
};

/// Writes content to `path`, or to stdout for "-". Throws IoError.
void write_artifact(const std::string& path, const std::string& content);

}  // namespace hermitewave::cli
