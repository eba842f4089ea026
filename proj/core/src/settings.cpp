#include "camspm/settings.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <string>

#include "camspm/errors.hpp"
#include "camspm/report.hpp"

namespace camspm {

namespace {

double parse_number(std::string_view key, std::string_view text) {
    std::string s(text);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
        throw ConfigError("invalid value '" + s + "' for " + std::string(key));
    }
    return v;
}

template <typename T>
T parse_integer(std::string_view key, std::string_view text) {
    const double v = parse_number(key, text);
    if (v < 0 || v != std::floor(v) || v > static_cast<double>(std::numeric_limits<T>::max())) {
        throw ConfigError("'" + std::string(text) + "' is not a valid count for " + std::string(key));
    }
    return static_cast<T>(v);
}

bool parse_bool(std::string_view key, std::string_view text) {
    if (text == "1" || text == "true" || text == "on") {
        return true;
    }
    if (text == "0" || text == "false" || text == "off") {
        return false;
    }
    throw ConfigError("invalid boolean '" + std::string(text) + "' for " + std::string(key));
}

struct Field {
    const char* key;
    std::function<std::string(const ModelSettings&)> get;
    std::function<void(ModelSettings&, std::string_view, std::string_view)> set;
};

#define CAMSPM_NUMBER(KEY, EXPR)                                                                       \
    Field {                                                                                            \
        KEY, [](const ModelSettings& s) { return format_double(s.EXPR); },                            \
            [](ModelSettings& s, std::string_view k, std::string_view v) { s.EXPR = parse_number(k, v); } \
    }
#define CAMSPM_COUNT(KEY, EXPR)                                                                              \
    Field {                                                                                                  \
        KEY, [](const ModelSettings& s) { return std::to_string(s.EXPR); },                                 \
            [](ModelSettings& s, std::string_view k, std::string_view v) {                                  \
                s.EXPR = parse_integer<decltype(s.EXPR)>(k, v);                                              \
            }                                                                                                \
    }

const std::vector<Field>& fields() {
    static const std::vector<Field> table = {
        CAMSPM_COUNT("k", accel.k),
        CAMSPM_COUNT("h", accel.h),
        CAMSPM_COUNT("w", accel.w),
        CAMSPM_COUNT("value_bits", accel.value_bits),
        CAMSPM_NUMBER("clock_hz", accel.clock_hz),
        CAMSPM_COUNT("pipeline_depth", accel.pipeline_depth),
        CAMSPM_NUMBER("memory_bw_bytes_per_s", accel.memory_bw_bytes_per_s),
        Field{"fp32_datapath", [](const ModelSettings& s) { return std::string(s.accel.fp32_datapath ? "true" : "false"); },
              [](ModelSettings& s, std::string_view k, std::string_view v) { s.accel.fp32_datapath = parse_bool(k, v); }},
        CAMSPM_NUMBER("e_compare_bit", accel.energy.compare_bit),
        CAMSPM_NUMBER("e_ram_read", accel.energy.ram_read),
        CAMSPM_NUMBER("e_write", accel.energy.write),
        CAMSPM_NUMBER("e_mul", accel.energy.mul),
        CAMSPM_NUMBER("e_add", accel.energy.add),
        CAMSPM_NUMBER("e_mem_byte", accel.energy.mem_byte),
        CAMSPM_NUMBER("feature_nm", tech.feature_nm),
        CAMSPM_COUNT("recam_layers", tech.recam_layers),
        CAMSPM_NUMBER("cmos_cam_bit_um2", tech.cmos_cam_bit_um2),
        CAMSPM_NUMBER("cmos_ram_bit_um2", tech.cmos_ram_bit_um2),
        CAMSPM_NUMBER("fpu_area_mm2", tech.fpu_area_mm2),
        CAMSPM_NUMBER("accumulator_area_mm2", tech.accumulator_area_mm2),
    };
    return table;
}

#undef CAMSPM_NUMBER
#undef CAMSPM_COUNT

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

void set_setting(ModelSettings& s, std::string_view key, std::string_view value) {
    for (const auto& f : fields()) {
        if (key == f.key) {
            f.set(s, key, trim(value));
            return;
        }
    }
    throw ConfigError("unknown setting '" + std::string(key) + "'");
}

void apply_settings(std::istream& in, ModelSettings& s) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view = line;
        if (auto hash = view.find('#'); hash != std::string_view::npos) {
            view = view.substr(0, hash);
        }
        view = trim(view);
        if (view.empty()) {
            continue;
        }
        const auto eq = view.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
        }
        try {
            set_setting(s, trim(view.substr(0, eq)), view.substr(eq + 1));
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
}

void load_settings_file(const std::filesystem::path& path, ModelSettings& s) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open configuration file " + path.string());
    }
    try {
        apply_settings(in, s);
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

std::vector<std::pair<std::string, std::string>> settings_key_values(const ModelSettings& s) {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(fields().size());
    for (const auto& f : fields()) {
        out.emplace_back(f.key, f.get(s));
    }
    return out;
}

}  // namespace camspm
