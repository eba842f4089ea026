#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace camspm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based; 0 when no line applies.
class ParseError : public Error {
public:
    ParseError(const std::string& detail, std::size_t line, const std::string& file = {})
        : Error(locate(detail, line, file)), detail_(detail), line_(line) {}

    const std::string& detail() const noexcept { return detail_; }
    std::size_t line() const noexcept { return line_; }

private:
    static std::string locate(const std::string& detail, std::size_t line, const std::string& file) {
        std::string where = file;
        if (line) {
            where += (where.empty() ? "line " : ":") + std::to_string(line);
        }
        return where.empty() ? detail : where + ": " + detail;
    }

    std::string detail_;
    std::size_t line_;
};

/// Operand shapes are incompatible (or an index width is too narrow for them).
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A structure was built from data that violates its invariants.
class InvariantError : public Error {
public:
    using Error::Error;
};

/// More entries offered to a CAM/RAM array than it has rows. The caller must tile.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Several valid CAM rows asserted their match line for one compare.
class CamFault : public Error {
public:
    using Error::Error;
};

/// Bad configuration value or configuration file line.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// The simulated accelerator disagreed with the reference product.
class OracleMismatch : public Error {
public:
    OracleMismatch(std::size_t row, double expected, double got);

    std::size_t row() const noexcept { return row_; }
    double expected() const noexcept { return expected_; }
    double got() const noexcept { return got_; }

private:
    std::size_t row_;
    double expected_;
    double got_;
};

}  // namespace camspm
