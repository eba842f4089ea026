#include "camspm/report.hpp"

#include <charconv>
#include <cmath>

#include <json.hpp>

namespace camspm {

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + '"';
}

}  // namespace

std::string Cell::csv() const {
    switch (kind_) {
        case Kind::Number:
            return format_double(number_);
        case Kind::Integer:
            return std::to_string(integer_);
        case Kind::Bool:
            return integer_ ? "true" : "false";
        case Kind::Text:
            break;
    }
    return csv_quote(text_);
}

void Cell::json(std::ostream& out) const {
    switch (kind_) {
        case Kind::Number:
            // Reports only carry finite numbers; JSON has no spelling for the rest.
            out << (std::isfinite(number_) ? format_double(number_) : "null");
            return;
        case Kind::Integer:
            out << integer_;
            return;
        case Kind::Bool:
            out << (integer_ ? "true" : "false");
            return;
        case Kind::Text:
            out << nlohmann::json(text_).dump();
            return;
    }
}

void write_report(std::ostream& out, ReportFormat format,
                  std::span<const std::pair<std::string, std::string>> config, std::span<const Table> tables) {
    if (format == ReportFormat::Csv) {
        for (const auto& [k, v] : config) {
            out << "# " << k << '=' << v << '\n';
        }
        bool first = true;
        for (const auto& t : tables) {
            if (!first) {
                out << '\n';
            }
            first = false;
            for (std::size_t c = 0; c < t.columns.size(); ++c) {
                out << (c ? "," : "") << t.columns[c];
            }
            out << '\n';
            for (const auto& row : t.rows) {
                for (std::size_t c = 0; c < row.size(); ++c) {
                    out << (c ? "," : "") << row[c].csv();
                }
                out << '\n';
            }
        }
        return;
    }

    out << "{\n  \"config\": {";
    for (std::size_t i = 0; i < config.size(); ++i) {
        out << (i ? ", " : "") << nlohmann::json(config[i].first).dump() << ": "
            << nlohmann::json(config[i].second).dump();
    }
    out << '}';
    for (const auto& t : tables) {
        out << ",\n  " << nlohmann::json(t.name).dump() << ": [";
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            out << (r ? ",\n    {" : "\n    {");
            for (std::size_t c = 0; c < t.columns.size(); ++c) {
                out << (c ? ", " : "") << nlohmann::json(t.columns[c]).dump() << ": ";
                t.rows[r][c].json(out);
            }
            out << '}';
        }
        out << (t.rows.empty() ? "]" : "\n  ]");
    }
    out << "\n}\n";
}

}  // namespace camspm
