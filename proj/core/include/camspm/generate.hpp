#pragma once

#include <cstddef>
#include <cstdint>

#include "camspm/sparse.hpp"

namespace camspm {

/// Distribution of generated nonzero values.
///  - Uniform: uniform on [-1, 1), an exact zero is redrawn.
///  - Integer: uniform on the integers {-9..-1, 1..9}; products and sums stay
///    exact in double precision, so accelerator/oracle comparisons can be bit-exact.
enum class ValueDistribution { Uniform, Integer };

/// Random CSR matrix where each position is nonzero independently with
/// probability `density` (a Bernoulli process, sampled by geometric gaps).
/// Deterministic for a fixed seed. Throws std::invalid_argument unless 0 <= density <= 1.
CsrMatrix gen_random_csr(std::size_t n_rows, std::size_t n_cols, double density, std::uint64_t seed,
                         ValueDistribution dist = ValueDistribution::Uniform);

/// Random sparse vector with the same position/value model as gen_random_csr.
SparseVector gen_random_vector(std::size_t length, double density, std::uint64_t seed,
                               ValueDistribution dist = ValueDistribution::Uniform);

}  // namespace camspm
