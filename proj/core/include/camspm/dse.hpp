#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "camspm/config.hpp"

namespace camspm {

/// Process and layout constants for the area model.
///
/// Resistive cells are expressed in F^2: a ReCAM bit (two memristors) is
/// 8F^2/l with l vertically stacked layers, a ReRAM bit is 4F^2. The CMOS bit
/// areas and the FPU/accumulator areas are calibration constants fitted so the
/// k=15, h=2^20, w=32 CMOS design lands near 90 mm^2 at 22 nm; they describe
/// that fit, not a layout.
struct TechParams {
    double feature_nm = 22.0;
    unsigned recam_layers = 1;
    double cmos_cam_bit_um2 = 0.1188;
    double cmos_ram_bit_um2 = 0.0594;
    double fpu_area_mm2 = 0.02;
    double accumulator_area_mm2 = 0.02;

    double recam_bit_mm2() const noexcept;
    double reram_bit_mm2() const noexcept;

    /// Throws ConfigError unless every area and the layer count are positive.
    void validate() const;

    friend bool operator==(const TechParams&, const TechParams&) = default;
};

enum class ImplementationStyle { Cmos, Resistive };

/// Modules the memory system can feed: one streamed (value, index) element
/// per module per cycle. Throws ConfigError on non-positive inputs.
unsigned modules_from_bandwidth(double bandwidth_bytes_per_s, double clock_hz, unsigned value_bits,
                                unsigned index_bits);

struct PeakPerformance {
    double flops_per_s = 0.0;      // 2k per cycle: one multiply and one accumulate per module
    double index_ops_per_s = 0.0;  // k*h index matches per cycle
};

PeakPerformance peak_performance(unsigned k, std::size_t h, double clock_hz);

/// k * (h*w*cam_bit + h*value_bits*ram_bit + fpu) + accumulator, in mm^2.
double area_estimate_mm2(const AcceleratorConfig& cfg, const TechParams& tech, ImplementationStyle style);

/// Joules per category for a set of events.
CategoryTotals energy_from_events(const EnergyConstants& e, const EventCounts& events);

/// Average watts per category over `wall_seconds`; all zeros when wall_seconds <= 0.
CategoryTotals power_estimate(const AcceleratorConfig& cfg, const RunMetrics& metrics, double wall_seconds);

struct SweepPoint {
    double bandwidth_bytes_per_s = 0.0;
    unsigned k = 0;
    double peak_flops_per_s = 0.0;
    double peak_index_ops_per_s = 0.0;
};

/// One point per bandwidth, k derived from the template's clock, value_bits and w.
/// Throws ConfigError on an empty range.
std::vector<SweepPoint> bandwidth_sweep(std::span<const double> bandwidths, const AcceleratorConfig& tmpl);

/// Published SpMV power-efficiency figures quoted for comparison only; nothing here is measured.
struct LiteratureBaseline {
    std::string_view name;
    double gflops_per_w_low;
    double gflops_per_w_high;
};

inline constexpr LiteratureBaseline kGpuSpmvBaseline{"GPU SpMV (K20/GTX660, literature)", 0.1, 0.5};
inline constexpr LiteratureBaseline kMulticoreSpmvBaseline{"Multicore SpMV (literature)", 0.0, 0.03};
inline constexpr LiteratureBaseline kLiteratureBaselines[] = {kGpuSpmvBaseline, kMulticoreSpmvBaseline};

}  // namespace camspm
