#pragma once

// Independent reference computations used only by tests. None of these call
// into the accelerator or the library oracles; they exist so that each check
// compares two separately written routes.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "camspm/sparse.hpp"

namespace camspm::reference {

/// Dense A (row-major, every column visited) times dense B, ascending column order.
inline std::vector<double> dense_matvec(const CsrMatrix& a, const SparseVector& b) {
    std::vector<double> dense_a(a.n_rows() * a.n_cols(), 0.0);
    for (std::size_t j = 0; j < a.n_rows(); ++j) {
        for (std::size_t p = a.row_start()[j]; p < a.row_start()[j + 1]; ++p) {
            dense_a[j * a.n_cols() + a.col_idx()[p]] = a.values()[p];
        }
    }
    std::vector<double> dense_b(b.length(), 0.0);
    for (const auto& e : b.entries()) {
        dense_b[e.index] = e.value;
    }
    std::vector<double> c(a.n_rows(), 0.0);
    for (std::size_t j = 0; j < a.n_rows(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.n_cols(); ++i) {
            s += dense_a[j * a.n_cols() + i] * dense_b[i];
        }
        c[j] = s;
    }
    return c;
}

/// C(i,j) = sum over A's row i of A(i,t) * B(t,j), looking B(t,j) up by binary search.
inline std::vector<double> per_element_matmul(const CsrMatrix& a, const CsrMatrix& b) {
    std::vector<double> c(a.n_rows() * b.n_cols(), 0.0);
    for (std::size_t i = 0; i < a.n_rows(); ++i) {
        for (std::size_t j = 0; j < b.n_cols(); ++j) {
            double s = 0.0;
            auto acols = a.row_cols(i);
            auto avals = a.row_values(i);
            for (std::size_t p = 0; p < acols.size(); ++p) {
                auto bcols = b.row_cols(acols[p]);
                auto it = std::lower_bound(bcols.begin(), bcols.end(), static_cast<Index>(j));
                if (it != bcols.end() && *it == j) {
                    s += avals[p] * b.row_values(acols[p])[static_cast<std::size_t>(it - bcols.begin())];
                }
            }
            c[i * b.n_cols() + j] = s;
        }
    }
    return c;
}

/// Cycle count from a clocked fetch unit: each cycle it issues up to k
/// elements, never mixing two rows in one issue group, replaying the whole
/// element stream once per tile of B. Adds the pipeline fill at the end.
inline std::uint64_t event_stepped_cycles(const CsrMatrix& a, std::size_t nnz_b, std::size_t h, unsigned k,
                                          unsigned pipeline_depth) {
    const std::size_t tiles = std::max<std::size_t>(1, (nnz_b + h - 1) / h);
    std::uint64_t cycle = 0;
    for (std::size_t t = 0; t < tiles; ++t) {
        std::deque<std::size_t> stream;  // row id of each streamed element
        for (std::size_t j = 0; j < a.n_rows(); ++j) {
            for (std::size_t p = 0; p < a.row_nnz(j); ++p) {
                stream.push_back(j);
            }
        }
        while (!stream.empty()) {
            const std::size_t row = stream.front();
            unsigned issued = 0;
            while (!stream.empty() && stream.front() == row && issued < k) {
                stream.pop_front();
                ++issued;
            }
            ++cycle;
        }
    }
    return cycle + pipeline_depth;
}

struct ScanRow {
    std::uint64_t bits;
    bool valid;
};

/// Every valid row whose unmasked bits equal the key's.
inline std::vector<std::size_t> brute_force_matches(const std::vector<ScanRow>& rows, std::uint64_t key,
                                                    std::uint64_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        bool all_equal = rows[r].valid;
        for (unsigned bit = 0; bit < 64 && all_equal; ++bit) {
            if (((mask >> bit) & 1u) && (((rows[r].bits >> bit) & 1u) != ((key >> bit) & 1u))) {
                all_equal = false;
            }
        }
        if (all_equal) {
            out.push_back(r);
        }
    }
    return out;
}

}  // namespace camspm::reference
