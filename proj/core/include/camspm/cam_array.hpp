#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "camspm/sparse.hpp"

namespace camspm {

/// Search pattern placed in the INDEX register. A mask bit of 1 means the
/// column is compared; 0 leaves the bit/bit-not lines floating so the column
/// never discharges the match line.
struct CompareKey {
    std::uint64_t key_bits = 0;
    std::uint64_t mask = 0;

    /// Key comparing all `width` bits of `index`.
    static CompareKey exact(std::uint64_t index, unsigned width);
};

/// Raw event counts that the energy model converts to joules.
struct CamEnergyTally {
    std::uint64_t compare_bit_ops = 0;  // rows x unmasked bits, summed over compares
    std::uint64_t ram_reads = 0;        // words read on a match
    std::uint64_t writes = 0;           // (index, value) pairs written during load

    friend bool operator==(const CamEnergyTally&, const CamEnergyTally&) = default;
};

struct CamRow {
    std::uint64_t index_bits = 0;
    double value = 0.0;
    bool valid = false;
};

/// One acceleration module: a CAM array of `height` rows x `index_width` bits
/// juxtaposed with a RAM array holding one value per row. A match line in the
/// CAM drives the word line of the same RAM row.
///
/// Only rows that have ever been written are materialized, so a logically
/// tall array (h = 2^20) costs memory proportional to what was loaded.
class CamRamArray {
public:
    CamRamArray(std::size_t height, unsigned index_width);

    std::size_t height() const noexcept { return height_; }
    unsigned index_width() const noexcept { return width_; }

    /// Writes entries into rows 0..n-1 and invalidates the rest.
    /// Throws CapacityError if n > height, InvariantError on duplicate or
    /// too-wide indices. The array is unchanged when it throws.
    void load_segment(std::span<const SparseEntry> entries);

    /// Row whose unmasked index bits equal the key's, or nullopt.
    /// Counts height * popcount(mask) compare bit-ops whatever the outcome.
    /// Throws CamFault if more than one valid row matches.
    std::optional<std::size_t> compare_select(const CompareKey& key);

    /// Compare on the full index followed by a RAM read of the selected row.
    /// A miss yields 0.0 and no RAM read.
    double search_and_read(std::uint64_t index) { return search(index).value_or(0.0); }

    /// As search_and_read, but reports a miss as nullopt.
    std::optional<double> search(std::uint64_t index);

    /// 1 - max_row(write_count) / budget, floored at 0.
    double endurance_headroom(std::uint64_t budget) const;

    std::uint64_t write_count(std::size_t row) const;
    std::uint64_t max_write_count() const noexcept { return max_writes_; }
    std::size_t valid_rows() const noexcept { return lookup_.size(); }
    const CamEnergyTally& tally() const noexcept { return tally_; }
    CamRow row(std::size_t r) const;

    /// Debug dump, one valid row per line: `<row> <index bits, MSB first> <value>`.
    std::string dump() const;

    /// Rebuilds an array from dump() text; each listed row counts as one write.
    static CamRamArray from_dump(std::string_view text, std::size_t height, unsigned index_width);

private:
    std::uint64_t width_mask() const noexcept;

    std::size_t height_;
    unsigned width_;
    std::vector<CamRow> rows_;                 // materialized prefix of the array
    std::vector<std::uint64_t> write_count_;   // parallel to rows_
    std::uint64_t max_writes_ = 0;
    std::unordered_map<std::uint64_t, std::size_t> lookup_;  // valid index -> row
    CamEnergyTally tally_;
};

/// 1 - max_writes / budget, floored at 0. Throws std::invalid_argument if budget == 0.
double endurance_headroom(std::uint64_t max_writes, std::uint64_t budget);

}  // namespace camspm
