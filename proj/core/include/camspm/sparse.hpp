#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace camspm {

using Index = std::uint32_t;

struct CooEntry {
    Index row = 0;
    Index col = 0;
    double value = 0.0;

    friend bool operator==(const CooEntry&, const CooEntry&) = default;
};

/// Coordinate-list matrix. Interchange form between file ingestion and CSR.
struct CooMatrix {
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::vector<CooEntry> entries;
};

/// Throws InvariantError on out-of-range coordinates or duplicate (row, col) pairs.
void validate(const CooMatrix& m);

struct SparseEntry {
    Index index = 0;
    double value = 0.0;

    friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Sparse vector of logical length N: strictly increasing indices, no stored zeros.
class SparseVector {
public:
    SparseVector() = default;
    explicit SparseVector(std::size_t length) : length_(length) {}
    SparseVector(std::size_t length, std::vector<SparseEntry> entries);

    std::size_t length() const noexcept { return length_; }
    std::size_t nnz() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    std::span<const SparseEntry> entries() const noexcept { return entries_; }

    /// Stored value at `index`, or 0.0 when absent.
    double value_at(std::size_t index) const;

    friend bool operator==(const SparseVector&, const SparseVector&) = default;

private:
    std::size_t length_ = 0;
    std::vector<SparseEntry> entries_;
};

/// Compressed sparse row matrix with sorted, unique column indices per row.
class CsrMatrix {
public:
    CsrMatrix() : row_start_{0} {}
    CsrMatrix(std::size_t n_rows, std::size_t n_cols, std::vector<std::size_t> row_start,
              std::vector<Index> col_idx, std::vector<double> values);

    static CsrMatrix identity(std::size_t n);
    static CsrMatrix zeros(std::size_t n_rows, std::size_t n_cols);

    std::size_t n_rows() const noexcept { return n_rows_; }
    std::size_t n_cols() const noexcept { return n_cols_; }
    std::size_t nnz() const noexcept { return col_idx_.size(); }
    std::size_t row_nnz(std::size_t j) const { return row_start_[j + 1] - row_start_[j]; }

    std::span<const std::size_t> row_start() const noexcept { return row_start_; }
    std::span<const Index> col_idx() const noexcept { return col_idx_; }
    std::span<const double> values() const noexcept { return values_; }

    std::span<const Index> row_cols(std::size_t j) const {
        return std::span<const Index>(col_idx_).subspan(row_start_[j], row_nnz(j));
    }
    std::span<const double> row_values(std::size_t j) const {
        return std::span<const double>(values_).subspan(row_start_[j], row_nnz(j));
    }

    friend bool operator==(const CsrMatrix&, const CsrMatrix&) = default;

private:
    std::size_t n_rows_ = 0;
    std::size_t n_cols_ = 0;
    std::vector<std::size_t> row_start_;
    std::vector<Index> col_idx_;
    std::vector<double> values_;
};

CsrMatrix coo_to_csr(const CooMatrix& m);
CooMatrix csr_to_coo(const CsrMatrix& m);
CsrMatrix transpose(const CsrMatrix& m);

/// Row j as a sparse vector of length n_cols. Throws DimensionError if j is out of range.
SparseVector extract_row(const CsrMatrix& m, std::size_t j);

/// Column c as a sparse vector of length n_rows. Throws DimensionError if c is out of range.
SparseVector extract_column(const CsrMatrix& m, std::size_t c);

/// Builds a CSR matrix from a dense row-major buffer, dropping exact zeros.
CsrMatrix from_dense(std::size_t n_rows, std::size_t n_cols, std::span<const double> row_major);
std::vector<double> to_dense(const CsrMatrix& m);

}  // namespace camspm
