#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace camspm {

enum class ReportFormat { Csv, Json };

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

/// A report cell: either a number or text. Numbers keep their exact value so
/// CSV and JSON render identically.
class Cell {
public:
    Cell(double v) : kind_(Kind::Number), number_(v) {}
    Cell(std::uint64_t v) : kind_(Kind::Integer), integer_(v) {}
    Cell(unsigned v) : Cell(static_cast<std::uint64_t>(v)) {}
    Cell(bool v) : kind_(Kind::Bool), integer_(v ? 1 : 0) {}
    Cell(std::string v) : kind_(Kind::Text), text_(std::move(v)) {}
    Cell(const char* v) : Cell(std::string(v)) {}

    std::string csv() const;
    void json(std::ostream& out) const;

private:
    enum class Kind { Number, Integer, Bool, Text };
    Kind kind_;
    double number_ = 0.0;
    std::uint64_t integer_ = 0;
    std::string text_;
};

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// CSV: `# key=value` lines for the configuration, then each table as a
/// header row plus data rows, tables separated by a blank line.
/// JSON: {"config": {...}, "<table name>": [ {column: value, ...}, ... ], ...}.
void write_report(std::ostream& out, ReportFormat format,
                  std::span<const std::pair<std::string, std::string>> config, std::span<const Table> tables);

}  // namespace camspm
