#pragma once

#include <cstddef>
#include <optional>

#include "camspm/sparse.hpp"

namespace camspm {

// Reference products. Both scatter into dense storage and sum in ascending
// inner index, then drop exact zeros from the result.

/// C = A * B. Throws DimensionError if A.n_cols != B.length.
SparseVector oracle_spmspv(const CsrMatrix& a, const SparseVector& b);

/// C = A * B by dense triple loop. Throws DimensionError if A.n_cols != B.n_rows.
CsrMatrix oracle_spmspm(const CsrMatrix& a, const CsrMatrix& b);

struct ValueMismatch {
    std::size_t index = 0;
    double expected = 0.0;
    double got = 0.0;
};

/// First position where |got - expected| > rel_tol * (1 + |expected|), treating
/// absent entries as zero. rel_tol = 0 demands bit-exact agreement.
std::optional<ValueMismatch> first_mismatch(const SparseVector& expected, const SparseVector& got,
                                            double rel_tol);

/// Throws OracleMismatch at the first out-of-tolerance row (also on a length mismatch).
void check_against_oracle(const SparseVector& expected, const SparseVector& got, double rel_tol);

}  // namespace camspm
