#include "camspm/dse.hpp"

#include <cmath>

#include "camspm/errors.hpp"

namespace camspm {

namespace {

constexpr double kUm2PerMm2 = 1.0e6;
constexpr double kNm2PerMm2 = 1.0e12;

}  // namespace

double TechParams::recam_bit_mm2() const noexcept {
    return 8.0 * feature_nm * feature_nm / static_cast<double>(recam_layers) / kNm2PerMm2;
}

double TechParams::reram_bit_mm2() const noexcept {
    return 4.0 * feature_nm * feature_nm / kNm2PerMm2;
}

void TechParams::validate() const {
    if (!(feature_nm > 0.0) || recam_layers < 1 || !(cmos_cam_bit_um2 > 0.0) || !(cmos_ram_bit_um2 > 0.0) ||
        !(fpu_area_mm2 > 0.0) || !(accumulator_area_mm2 > 0.0)) {
        throw ConfigError("technology areas, feature size and layer count must be positive");
    }
}

unsigned modules_from_bandwidth(double bandwidth_bytes_per_s, double clock_hz, unsigned value_bits,
                                unsigned index_bits) {
    if (!(bandwidth_bytes_per_s > 0.0) || !(clock_hz > 0.0) || value_bits == 0 || index_bits == 0) {
        throw ConfigError("bandwidth, clock and element widths must be positive");
    }
    const double bytes_per_element = static_cast<double>((value_bits + index_bits + 7) / 8);
    const double elements_per_cycle = bandwidth_bytes_per_s / (clock_hz * bytes_per_element);
    return static_cast<unsigned>(std::floor(elements_per_cycle));
}

PeakPerformance peak_performance(unsigned k, std::size_t h, double clock_hz) {
    return {2.0 * k * clock_hz, static_cast<double>(k) * static_cast<double>(h) * clock_hz};
}

double area_estimate_mm2(const AcceleratorConfig& cfg, const TechParams& tech, ImplementationStyle style) {
    tech.validate();
    const double cam_bit = style == ImplementationStyle::Cmos ? tech.cmos_cam_bit_um2 / kUm2PerMm2
                                                              : tech.recam_bit_mm2();
    const double ram_bit = style == ImplementationStyle::Cmos ? tech.cmos_ram_bit_um2 / kUm2PerMm2
                                                              : tech.reram_bit_mm2();
    const double h = static_cast<double>(cfg.h);
    const double module = h * cfg.w * cam_bit + h * cfg.value_bits * ram_bit + tech.fpu_area_mm2;
    return cfg.k * module + tech.accumulator_area_mm2;
}

CategoryTotals energy_from_events(const EnergyConstants& e, const EventCounts& ev) {
    return {
        static_cast<double>(ev.compare_bit_ops) * e.compare_bit,
        static_cast<double>(ev.ram_reads) * e.ram_read,
        static_cast<double>(ev.cam_writes) * e.write,
        static_cast<double>(ev.multiplies) * e.mul,
        static_cast<double>(ev.additions) * e.add,
        static_cast<double>(ev.mem_bytes) * e.mem_byte,
    };
}

CategoryTotals power_estimate(const AcceleratorConfig& cfg, const RunMetrics& metrics, double wall_seconds) {
    if (!(wall_seconds > 0.0)) {
        return {};
    }
    return energy_from_events(cfg.energy, metrics.events).scaled(1.0 / wall_seconds);
}

std::vector<SweepPoint> bandwidth_sweep(std::span<const double> bandwidths, const AcceleratorConfig& tmpl) {
    if (bandwidths.empty()) {
        throw ConfigError("bandwidth range is empty");
    }
    std::vector<SweepPoint> out;
    out.reserve(bandwidths.size());
    for (double bw : bandwidths) {
        const unsigned k = modules_from_bandwidth(bw, tmpl.clock_hz, tmpl.value_bits, tmpl.w);
        const auto peak = peak_performance(k, tmpl.h, tmpl.clock_hz);
        out.push_back({bw, k, peak.flops_per_s, peak.index_ops_per_s});
    }
    return out;
}

}  // namespace camspm
