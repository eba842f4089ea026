#include "camspm/sparse.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "camspm/errors.hpp"

namespace camspm {

OracleMismatch::OracleMismatch(std::size_t row, double expected, double got)
    : Error("oracle mismatch at row " + std::to_string(row) + ": expected " +
            std::to_string(expected) + ", got " + std::to_string(got)),
      row_(row),
      expected_(expected),
      got_(got) {}

namespace {

void sort_row_major(std::vector<CooEntry>& entries) {
    std::sort(entries.begin(), entries.end(), [](const CooEntry& a, const CooEntry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
}

}  // namespace

void validate(const CooMatrix& m) {
    for (const auto& e : m.entries) {
        if (e.row >= m.n_rows || e.col >= m.n_cols) {
            throw InvariantError("COO entry (" + std::to_string(e.row) + ", " +
                                 std::to_string(e.col) + ") outside " +
                                 std::to_string(m.n_rows) + "x" + std::to_string(m.n_cols));
        }
    }
    std::vector<CooEntry> sorted = m.entries;
    sort_row_major(sorted);
    auto dup = std::adjacent_find(sorted.begin(), sorted.end(), [](const CooEntry& a, const CooEntry& b) {
        return a.row == b.row && a.col == b.col;
    });
    if (dup != sorted.end()) {
        throw InvariantError("duplicate COO coordinate (" + std::to_string(dup->row) + ", " +
                             std::to_string(dup->col) + ")");
    }
}

SparseVector::SparseVector(std::size_t length, std::vector<SparseEntry> entries)
    : length_(length), entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& e = entries_[i];
        if (e.index >= length_) {
            throw InvariantError("sparse vector index " + std::to_string(e.index) +
                                 " not below length " + std::to_string(length_));
        }
        if (i > 0 && entries_[i - 1].index >= e.index) {
            throw InvariantError("sparse vector indices must be strictly increasing");
        }
        if (e.value == 0.0) {
            throw InvariantError("sparse vector stores an explicit zero at index " +
                                 std::to_string(e.index));
        }
    }
}

double SparseVector::value_at(std::size_t index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const SparseEntry& e, std::size_t i) { return e.index < i; });
    return (it != entries_.end() && it->index == index) ? it->value : 0.0;
}

CsrMatrix::CsrMatrix(std::size_t n_rows, std::size_t n_cols, std::vector<std::size_t> row_start,
                     std::vector<Index> col_idx, std::vector<double> values)
    : n_rows_(n_rows),
      n_cols_(n_cols),
      row_start_(std::move(row_start)),
      col_idx_(std::move(col_idx)),
      values_(std::move(values)) {
    if (row_start_.size() != n_rows_ + 1) {
        throw InvariantError("row_start must hold n_rows + 1 offsets");
    }
    if (row_start_.front() != 0) {
        throw InvariantError("row_start[0] must be 0");
    }
    if (row_start_.back() != col_idx_.size() || col_idx_.size() != values_.size()) {
        throw InvariantError("row_start[n_rows], len(col_idx) and len(values) must agree");
    }
    for (std::size_t j = 0; j < n_rows_; ++j) {
        if (row_start_[j] > row_start_[j + 1]) {
            throw InvariantError("row_start decreases at row " + std::to_string(j));
        }
        for (std::size_t p = row_start_[j]; p < row_start_[j + 1]; ++p) {
            if (col_idx_[p] >= n_cols_) {
                throw InvariantError("column index " + std::to_string(col_idx_[p]) +
                                     " out of range in row " + std::to_string(j));
            }
            if (p > row_start_[j] && col_idx_[p - 1] >= col_idx_[p]) {
                throw InvariantError("column indices not strictly increasing in row " +
                                     std::to_string(j));
            }
        }
    }
}

CsrMatrix CsrMatrix::identity(std::size_t n) {
    std::vector<std::size_t> rs(n + 1);
    std::iota(rs.begin(), rs.end(), std::size_t{0});
    std::vector<Index> ci(n);
    std::iota(ci.begin(), ci.end(), Index{0});
    return CsrMatrix(n, n, std::move(rs), std::move(ci), std::vector<double>(n, 1.0));
}

CsrMatrix CsrMatrix::zeros(std::size_t n_rows, std::size_t n_cols) {
    return CsrMatrix(n_rows, n_cols, std::vector<std::size_t>(n_rows + 1, 0), {}, {});
}

CsrMatrix coo_to_csr(const CooMatrix& m) {
    validate(m);
    std::vector<CooEntry> sorted = m.entries;
    sort_row_major(sorted);

    std::vector<std::size_t> row_start(m.n_rows + 1, 0);
    std::vector<Index> col_idx;
    std::vector<double> values;
    col_idx.reserve(sorted.size());
    values.reserve(sorted.size());
    for (const auto& e : sorted) {
        ++row_start[e.row + 1];
        col_idx.push_back(e.col);
        values.push_back(e.value);
    }
    std::partial_sum(row_start.begin(), row_start.end(), row_start.begin());
    return CsrMatrix(m.n_rows, m.n_cols, std::move(row_start), std::move(col_idx), std::move(values));
}

CooMatrix csr_to_coo(const CsrMatrix& m) {
    CooMatrix out{m.n_rows(), m.n_cols(), {}};
    out.entries.reserve(m.nnz());
    for (std::size_t j = 0; j < m.n_rows(); ++j) {
        auto cols = m.row_cols(j);
        auto vals = m.row_values(j);
        for (std::size_t p = 0; p < cols.size(); ++p) {
            out.entries.push_back({static_cast<Index>(j), cols[p], vals[p]});
        }
    }
    return out;
}

CsrMatrix transpose(const CsrMatrix& m) {
    std::vector<std::size_t> row_start(m.n_cols() + 1, 0);
    for (Index c : m.col_idx()) {
        ++row_start[c + 1];
    }
    std::partial_sum(row_start.begin(), row_start.end(), row_start.begin());

    std::vector<std::size_t> next(row_start.begin(), row_start.end() - 1);
    std::vector<Index> col_idx(m.nnz());
    std::vector<double> values(m.nnz());
    // Walking source rows in order keeps each output row sorted.
    for (std::size_t j = 0; j < m.n_rows(); ++j) {
        auto cols = m.row_cols(j);
        auto vals = m.row_values(j);
        for (std::size_t p = 0; p < cols.size(); ++p) {
            std::size_t dst = next[cols[p]]++;
            col_idx[dst] = static_cast<Index>(j);
            values[dst] = vals[p];
        }
    }
    return CsrMatrix(m.n_cols(), m.n_rows(), std::move(row_start), std::move(col_idx), std::move(values));
}

SparseVector extract_row(const CsrMatrix& m, std::size_t j) {
    if (j >= m.n_rows()) {
        throw DimensionError("row " + std::to_string(j) + " out of range for " +
                             std::to_string(m.n_rows()) + " rows");
    }
    std::vector<SparseEntry> entries;
    auto cols = m.row_cols(j);
    auto vals = m.row_values(j);
    entries.reserve(cols.size());
    for (std::size_t p = 0; p < cols.size(); ++p) {
        if (vals[p] != 0.0) {
            entries.push_back({cols[p], vals[p]});
        }
    }
    return SparseVector(m.n_cols(), std::move(entries));
}

SparseVector extract_column(const CsrMatrix& m, std::size_t c) {
    if (c >= m.n_cols()) {
        throw DimensionError("column " + std::to_string(c) + " out of range for " +
                             std::to_string(m.n_cols()) + " columns");
    }
    std::vector<SparseEntry> entries;
    for (std::size_t j = 0; j < m.n_rows(); ++j) {
        auto cols = m.row_cols(j);
        auto it = std::lower_bound(cols.begin(), cols.end(), static_cast<Index>(c));
        if (it != cols.end() && *it == c) {
            double v = m.row_values(j)[static_cast<std::size_t>(it - cols.begin())];
            if (v != 0.0) {
                entries.push_back({static_cast<Index>(j), v});
            }
        }
    }
    return SparseVector(m.n_rows(), std::move(entries));
}

CsrMatrix from_dense(std::size_t n_rows, std::size_t n_cols, std::span<const double> row_major) {
    if (row_major.size() != n_rows * n_cols) {
        throw DimensionError("dense buffer size does not match " + std::to_string(n_rows) + "x" +
                             std::to_string(n_cols));
    }
    std::vector<std::size_t> row_start(n_rows + 1, 0);
    std::vector<Index> col_idx;
    std::vector<double> values;
    for (std::size_t j = 0; j < n_rows; ++j) {
        for (std::size_t c = 0; c < n_cols; ++c) {
            double v = row_major[j * n_cols + c];
            if (v != 0.0) {
                col_idx.push_back(static_cast<Index>(c));
                values.push_back(v);
            }
        }
        row_start[j + 1] = col_idx.size();
    }
    return CsrMatrix(n_rows, n_cols, std::move(row_start), std::move(col_idx), std::move(values));
}

std::vector<double> to_dense(const CsrMatrix& m) {
    std::vector<double> dense(m.n_rows() * m.n_cols(), 0.0);
    for (std::size_t j = 0; j < m.n_rows(); ++j) {
        auto cols = m.row_cols(j);
        auto vals = m.row_values(j);
        for (std::size_t p = 0; p < cols.size(); ++p) {
            dense[j * m.n_cols() + cols[p]] = vals[p];
        }
    }
    return dense;
}

}  // namespace camspm
