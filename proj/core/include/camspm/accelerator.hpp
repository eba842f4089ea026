#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "camspm/cam_array.hpp"
#include "camspm/config.hpp"
#include "camspm/sparse.hpp"

namespace camspm {

/// One lane of an inner iteration: module `module` matched column `column`
/// of A against its copy of B.
struct LaneResult {
    unsigned module = 0;
    Index column = 0;
    double a_value = 0.0;
    double b_value = 0.0;  // 0.0 on a CAM miss
    bool hit = false;
    double product = 0.0;
};

/// One pass through steps 1-5 for up to k elements of a row.
struct InnerIteration {
    std::size_t pass = 0;
    std::size_t row = 0;
    std::span<const LaneResult> lanes;
    double iteration_sum = 0.0;  // lanes summed in module order
    double running_sum = 0.0;    // row accumulator after this iteration
};

using IterationObserver = std::function<void(const InnerIteration&)>;

struct SpmspvResult {
    SparseVector c;
    RunMetrics metrics;
};

struct SpmspmResult {
    CsrMatrix c;
    RunMetrics metrics;
};

/// Number of h-row tiles needed to hold nnz_b entries; at least 1.
std::size_t plan_tiles(std::size_t nnz_b, std::size_t h);

/// Smallest w with 2^w >= max(n, 2).
unsigned required_index_width(std::size_t n);

/// k CAM/RAM modules, their multipliers, and the shared accumulator.
///
/// load_vector() copies B into every module (tile 0 when B is taller than h).
/// multiply() then streams A row by row, ceil(nzr_j / k) inner iterations per
/// nonzero row, re-streaming A once per tile of B. While B fits in one tile,
/// repeated multiply() calls reuse the loaded arrays without rewriting them.
class Accelerator {
public:
    explicit Accelerator(AcceleratorConfig cfg);

    const AcceleratorConfig& config() const noexcept { return cfg_; }

    /// Throws DimensionError if w is too narrow for b.length().
    void load_vector(const SparseVector& b);

    /// Throws DimensionError if no vector is loaded or a.n_cols() != B length.
    SpmspvResult multiply(const CsrMatrix& a, const IterationObserver& observe = {});

    const CamRamArray& module(std::size_t m) const { return modules_.at(m); }
    std::size_t passes() const noexcept { return tiles_.size(); }

private:
    void load_tile(std::size_t t);
    CamEnergyTally module_tally() const;

    AcceleratorConfig cfg_;
    std::vector<CamRamArray> modules_;
    std::optional<SparseVector> b_;
    std::vector<std::span<const SparseEntry>> tiles_;
    std::optional<std::size_t> resident_tile_;
    CamEnergyTally charged_;                  // module activity already billed to a run
    std::uint64_t pending_read_bytes_ = 0;    // B traffic not yet billed
};

/// C = A * B on a fresh accelerator. Summation order per row: lanes in module
/// order, then the previous running sum; tile partials added in tile order.
/// C_j is stored only when nonzero.
SpmspvResult spmspv(const CsrMatrix& a, const SparseVector& b, const AcceleratorConfig& cfg,
                    const IterationObserver& observe = {});

/// C = A * B column by column: column c of C is spmspv(A, column c of B).
/// Metrics sum over columns with a single pipeline fill.
SpmspmResult spmspm(const CsrMatrix& a, const CsrMatrix& b, const AcceleratorConfig& cfg);

}  // namespace camspm
