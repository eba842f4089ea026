#pragma once

#include <cstddef>
#include <cstdint>

namespace camspm {

/// Per-event energies in joules. Defaults are documented calibration choices:
/// compare energy sits under the 1 fJ/bit bound quoted for ReCAM, and
/// `mem_byte` prices only the accelerator side of the memory interface
/// (off-chip DRAM energy is not part of the accelerator's power envelope).
struct EnergyConstants {
    double compare_bit = 0.1e-15;  // per participating CAM bit per compare
    double ram_read = 0.5e-12;     // per RAM word read on a match
    double write = 1.0e-12;        // per (index, value) row written at load
    double mul = 3.0e-12;          // per floating-point multiply
    double add = 1.0e-12;          // per floating-point accumulate
    double mem_byte = 0.25e-12;    // per byte crossing the memory interface

    friend bool operator==(const EnergyConstants&, const EnergyConstants&) = default;
};

struct AcceleratorConfig {
    unsigned k = 15;                       // acceleration modules
    std::size_t h = 512;                   // CAM/RAM rows per module
    unsigned w = 32;                       // CAM index width, bits
    unsigned value_bits = 32;              // value word length used by traffic/area models
    double clock_hz = 2.0e9;
    unsigned pipeline_depth = 6;           // fill latency; one stage per algorithm step
    double memory_bw_bytes_per_s = 250.0e9;
    bool fp32_datapath = false;            // round the datapath to binary32
    EnergyConstants energy;

    /// Throws ConfigError when k, h, w, pipeline_depth or the clock are out of range.
    void validate() const;

    /// Bytes per streamed (value, index) element: ceil((value_bits + w) / 8).
    unsigned element_bytes() const noexcept { return (value_bits + w + 7) / 8; }

    friend bool operator==(const AcceleratorConfig&, const AcceleratorConfig&) = default;
};

/// Energy (joules) or power (watts) split by consumer.
struct CategoryTotals {
    double compare = 0.0;
    double ram_read = 0.0;
    double write = 0.0;
    double multiply = 0.0;
    double accumulate = 0.0;
    double memory = 0.0;

    double total() const noexcept { return compare + ram_read + write + multiply + accumulate + memory; }
    CategoryTotals& operator+=(const CategoryTotals& o) noexcept;
    CategoryTotals scaled(double factor) const noexcept;
};

struct EventCounts {
    std::uint64_t compare_bit_ops = 0;
    std::uint64_t ram_reads = 0;
    std::uint64_t cam_writes = 0;
    std::uint64_t multiplies = 0;
    std::uint64_t additions = 0;
    std::uint64_t mem_bytes = 0;

    EventCounts& operator+=(const EventCounts& o) noexcept;
    friend bool operator==(const EventCounts&, const EventCounts&) = default;
};

struct RunMetrics {
    std::uint64_t cycles = 0;
    std::uint64_t inner_iterations = 0;   // compare cycles
    std::uint64_t index_match_ops = 0;    // k * h per compare cycle
    std::uint64_t fetched_elements = 0;   // A nonzeros streamed, summed over passes
    std::uint64_t flops = 0;              // 2 per fetched element
    std::uint64_t mem_read_bytes = 0;
    std::uint64_t mem_write_bytes = 0;
    std::uint64_t passes = 0;             // tiles of B processed
    EventCounts events;
    CategoryTotals energy_joules;

    double seconds(double clock_hz) const noexcept { return static_cast<double>(cycles) / clock_hz; }
};

}  // namespace camspm
