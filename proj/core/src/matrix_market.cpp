#include "camspm/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "camspm/errors.hpp"

namespace camspm {

namespace {

enum class Field { Real, Integer, Pattern };
enum class Symmetry { General, Symmetric };

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) {
        out.push_back(tok);
    }
    return out;
}

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::size_t parse_count(const std::string& tok, std::size_t line, const char* what) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) {
        throw ParseError(std::string("invalid ") + what + " '" + tok + "'", line);
    }
    return v;
}

double parse_value(const std::string& tok, std::size_t line) {
    char* end = nullptr;
    double v = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size()) {
        throw ParseError("invalid value '" + tok + "'", line);
    }
    return v;
}

}  // namespace

CooMatrix parse_matrix_market(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;

    if (!std::getline(in, line)) {
        throw ParseError("empty input; expected %%MatrixMarket banner", 1);
    }
    ++lineno;
    auto banner = split_ws(line);
    if (banner.size() != 5 || banner[0] != "%%MatrixMarket") {
        throw ParseError("malformed banner", lineno);
    }
    if (lower(banner[1]) != "matrix") {
        throw ParseError("unsupported object '" + banner[1] + "'", lineno);
    }
    if (lower(banner[2]) != "coordinate") {
        throw ParseError("unsupported format '" + banner[2] + "' (only coordinate)", lineno);
    }
    Field field;
    std::string f = lower(banner[3]);
    if (f == "real") {
        field = Field::Real;
    } else if (f == "integer") {
        field = Field::Integer;
    } else if (f == "pattern") {
        field = Field::Pattern;
    } else {
        throw ParseError("unsupported field '" + banner[3] + "'", lineno);
    }
    Symmetry sym;
    std::string s = lower(banner[4]);
    if (s == "general") {
        sym = Symmetry::General;
    } else if (s == "symmetric") {
        sym = Symmetry::Symmetric;
    } else {
        throw ParseError("unsupported symmetry '" + banner[4] + "'", lineno);
    }

    // Size line: first non-comment, non-blank line.
    std::vector<std::string> size_tok;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line) || line[0] == '%') {
            continue;
        }
        size_tok = split_ws(line);
        break;
    }
    if (size_tok.size() != 3) {
        throw ParseError("expected size line 'rows cols nnz'", lineno);
    }
    CooMatrix m;
    m.n_rows = parse_count(size_tok[0], lineno, "row count");
    m.n_cols = parse_count(size_tok[1], lineno, "column count");
    const std::size_t declared = parse_count(size_tok[2], lineno, "entry count");
    if (sym == Symmetry::Symmetric && m.n_rows != m.n_cols) {
        throw ParseError("symmetric matrix must be square", lineno);
    }

    const std::size_t want_fields = field == Field::Pattern ? 2 : 3;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::size_t read = 0;
    m.entries.reserve(declared);

    auto add = [&](std::size_t r, std::size_t c, double v) {
        if (!seen.emplace(r, c).second) {
            throw ParseError("duplicate coordinate (" + std::to_string(r + 1) + ", " +
                                 std::to_string(c + 1) + ")",
                             lineno);
        }
        if (v != 0.0) {
            m.entries.push_back({static_cast<Index>(r), static_cast<Index>(c), v});
        }
    };

    while (read < declared && std::getline(in, line)) {
        ++lineno;
        if (blank(line) || line[0] == '%') {
            continue;
        }
        auto tok = split_ws(line);
        if (tok.size() != want_fields) {
            throw ParseError("expected " + std::to_string(want_fields) + " fields, found " +
                                 std::to_string(tok.size()),
                             lineno);
        }
        std::size_t r = parse_count(tok[0], lineno, "row index");
        std::size_t c = parse_count(tok[1], lineno, "column index");
        if (r < 1 || r > m.n_rows || c < 1 || c > m.n_cols) {
            throw ParseError("index (" + tok[0] + ", " + tok[1] + ") out of range", lineno);
        }
        double v = 1.0;
        if (field != Field::Pattern) {
            v = parse_value(tok[2], lineno);
            if (field == Field::Integer && v != static_cast<double>(static_cast<long long>(v))) {
                throw ParseError("non-integer value '" + tok[2] + "' in integer matrix", lineno);
            }
        }
        --r;
        --c;
        add(r, c, v);
        if (sym == Symmetry::Symmetric && r != c) {
            add(c, r, v);
        }
        ++read;
    }
    if (read < declared) {
        throw ParseError("expected " + std::to_string(declared) + " entries, found " + std::to_string(read),
                         lineno);
    }
    while (std::getline(in, line)) {
        ++lineno;
        if (!blank(line) && line[0] != '%') {
            throw ParseError("more entries than declared", lineno);
        }
    }
    return m;
}

CooMatrix parse_matrix_market(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_matrix_market(in);
}

CooMatrix read_matrix_market(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open file", 0, path.string());
    }
    try {
        return parse_matrix_market(in);
    } catch (const ParseError& e) {
        throw ParseError(e.detail(), e.line(), path.string());
    }
}

void write_matrix_market(std::ostream& out, const CooMatrix& m) {
    out << "%%MatrixMarket matrix coordinate real general\n";
    out << m.n_rows << ' ' << m.n_cols << ' ' << m.entries.size() << '\n';
    char buf[64];
    for (const auto& e : m.entries) {
        auto [end, ec] = std::to_chars(buf, buf + sizeof buf, e.value);
        out << e.row + 1 << ' ' << e.col + 1 << ' ' << std::string_view(buf, static_cast<std::size_t>(end - buf))
            << '\n';
    }
}

void write_matrix_market(std::ostream& out, const CsrMatrix& m) {
    write_matrix_market(out, csr_to_coo(m));
}

SparseVector to_vector(const CooMatrix& m) {
    const bool as_row = m.n_rows == 1;
    if (!as_row && m.n_cols != 1) {
        throw DimensionError("vector file must be 1xN or Nx1, got " + std::to_string(m.n_rows) + "x" +
                             std::to_string(m.n_cols));
    }
    std::vector<SparseEntry> entries;
    entries.reserve(m.entries.size());
    for (const auto& e : m.entries) {
        entries.push_back({as_row ? e.col : e.row, e.value});
    }
    std::sort(entries.begin(), entries.end(),
              [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
    return SparseVector(as_row ? m.n_cols : m.n_rows, std::move(entries));
}

SparseVector read_vector_market(const std::filesystem::path& path) {
    return to_vector(read_matrix_market(path));
}

}  // namespace camspm
