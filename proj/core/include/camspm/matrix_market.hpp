#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string_view>

#include "camspm/sparse.hpp"

namespace camspm {

// Matrix Market coordinate subset:
//   %%MatrixMarket matrix coordinate <real|integer|pattern> <general|symmetric>
// Indices in the file are 1-based. Symmetric storage is expanded to both
// triangles, pattern entries read as 1.0 and explicit zeros are dropped.
// Anything else (array, complex, hermitian, skew-symmetric) is rejected with
// a ParseError carrying the offending line number.

CooMatrix parse_matrix_market(std::istream& in);
CooMatrix parse_matrix_market(std::string_view text);
CooMatrix read_matrix_market(const std::filesystem::path& path);

/// Writes `general real` coordinate format with round-trip precision.
void write_matrix_market(std::ostream& out, const CooMatrix& m);
void write_matrix_market(std::ostream& out, const CsrMatrix& m);

/// A 1xN or Nx1 Matrix Market matrix read as a sparse vector.
SparseVector read_vector_market(const std::filesystem::path& path);
SparseVector to_vector(const CooMatrix& m);

}  // namespace camspm
