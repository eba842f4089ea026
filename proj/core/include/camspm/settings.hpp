#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "camspm/config.hpp"
#include "camspm/dse.hpp"

namespace camspm {

/// Everything a report needs to be reproduced: accelerator, energy and technology constants.
struct ModelSettings {
    AcceleratorConfig accel;
    TechParams tech;

    friend bool operator==(const ModelSettings&, const ModelSettings&) = default;
};

// Plain-text configuration: one `key = value` per line, `#` starts a comment.
// Keys are exactly those listed by settings_key_values(); energies are in
// joules, areas in um^2 (bits) or mm^2 (blocks).

/// Throws ConfigError for an unknown key or a value that does not parse.
void set_setting(ModelSettings& s, std::string_view key, std::string_view value);

/// Applies every line; errors carry the 1-based line number.
void apply_settings(std::istream& in, ModelSettings& s);
void load_settings_file(const std::filesystem::path& path, ModelSettings& s);

/// All settings in a fixed order, values formatted for exact round-trip.
std::vector<std::pair<std::string, std::string>> settings_key_values(const ModelSettings& s);

}  // namespace camspm
