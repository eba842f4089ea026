#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "camspm/errors.hpp"
#include "camspm/generate.hpp"
#include "camspm/matrix_market.hpp"
#include "camspm/oracle.hpp"
#include "camspm/sparse.hpp"
#include "reference.hpp"

using namespace camspm;

TEST(CooToCsr, EmptyMatrix) {
    CooMatrix m{2, 2, {}};
    CsrMatrix c = coo_to_csr(m);
    EXPECT_EQ(std::vector<std::size_t>(c.row_start().begin(), c.row_start().end()),
              (std::vector<std::size_t>{0, 0, 0}));
    EXPECT_TRUE(c.col_idx().empty());
    EXPECT_TRUE(c.values().empty());
}

TEST(CooToCsr, TwoEntries) {
    CooMatrix m{2, 2, {{1, 0, 3.0}, {0, 1, 2.0}}};
    CsrMatrix c = coo_to_csr(m);
    EXPECT_EQ(std::vector<std::size_t>(c.row_start().begin(), c.row_start().end()),
              (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(std::vector<Index>(c.col_idx().begin(), c.col_idx().end()), (std::vector<Index>{1, 0}));
    EXPECT_EQ(std::vector<double>(c.values().begin(), c.values().end()), (std::vector<double>{2.0, 3.0}));
}

TEST(CooToCsr, RejectsDuplicatesAndOutOfRange) {
    EXPECT_THROW(coo_to_csr(CooMatrix{2, 2, {{0, 0, 1.0}, {0, 0, 2.0}}}), InvariantError);
    EXPECT_THROW(coo_to_csr(CooMatrix{2, 2, {{2, 0, 1.0}}}), InvariantError);
    EXPECT_THROW(coo_to_csr(CooMatrix{2, 2, {{0, 5, 1.0}}}), InvariantError);
}

TEST(CooToCsr, RoundTripProperty) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        CsrMatrix a = gen_random_csr(50, 50, 0.05, seed);
        EXPECT_EQ(coo_to_csr(csr_to_coo(a)), a) << "seed " << seed;
    }
}

TEST(CsrMatrix, ConstructorEnforcesInvariants) {
    EXPECT_THROW(CsrMatrix(2, 2, {0, 1}, {0}, {1.0}), InvariantError);             // short row_start
    EXPECT_THROW(CsrMatrix(1, 2, {1, 1}, {0}, {1.0}), InvariantError);             // row_start[0] != 0
    EXPECT_THROW(CsrMatrix(1, 3, {0, 2}, {2, 1}, {1.0, 2.0}), InvariantError);     // unsorted
    EXPECT_THROW(CsrMatrix(1, 3, {0, 2}, {1, 1}, {1.0, 2.0}), InvariantError);     // repeated column
    EXPECT_THROW(CsrMatrix(1, 2, {0, 1}, {2}, {1.0}), InvariantError);             // column out of range
    EXPECT_THROW(CsrMatrix(2, 2, {0, 2, 1}, {0, 1}, {1.0, 1.0}), InvariantError);  // decreasing
    EXPECT_NO_THROW(CsrMatrix(2, 3, {0, 2, 3}, {0, 2, 1}, {1.0, 2.0, 3.0}));
}

TEST(SparseVector, ConstructorEnforcesInvariants) {
    EXPECT_THROW(SparseVector(4, {{2, 1.0}, {1, 1.0}}), InvariantError);
    EXPECT_THROW(SparseVector(4, {{1, 1.0}, {1, 2.0}}), InvariantError);
    EXPECT_THROW(SparseVector(4, {{4, 1.0}}), InvariantError);
    EXPECT_THROW(SparseVector(4, {{0, 0.0}}), InvariantError);
    SparseVector v(4, {{1, 2.5}, {3, -1.0}});
    EXPECT_EQ(v.value_at(1), 2.5);
    EXPECT_EQ(v.value_at(2), 0.0);
    EXPECT_EQ(v.value_at(3), -1.0);
}

TEST(ExtractRow, IdentityRow) {
    SparseVector r = extract_row(CsrMatrix::identity(3), 1);
    EXPECT_EQ(r.length(), 3u);
    ASSERT_EQ(r.nnz(), 1u);
    EXPECT_EQ(r.entries()[0], (SparseEntry{1, 1.0}));
}

TEST(ExtractRow, EmptyRow) {
    CsrMatrix a(2, 3, {0, 1, 1}, {2}, {4.0});
    SparseVector r = extract_row(a, 1);
    EXPECT_TRUE(r.empty());
    EXPECT_EQ(r.length(), 3u);
}

TEST(ExtractRow, OutOfRange) {
    EXPECT_THROW(extract_row(CsrMatrix::identity(3), 3), DimensionError);
}

TEST(ExtractRow, MatchesEntryScanOnParsedMatrix) {
    CooMatrix coo = read_matrix_market(CAMSPM_CORPUS "/symmetric_120.mtx");
    CsrMatrix a = coo_to_csr(coo);
    for (std::size_t j = 0; j < a.n_rows(); ++j) {
        std::vector<SparseEntry> scanned;
        for (const auto& e : coo.entries) {
            if (e.row == j) {
                scanned.push_back({e.col, e.value});
            }
        }
        std::sort(scanned.begin(), scanned.end(),
                  [](const SparseEntry& x, const SparseEntry& y) { return x.index < y.index; });
        EXPECT_EQ(extract_row(a, j), SparseVector(a.n_cols(), scanned)) << "row " << j;
    }
}

TEST(Transpose, InvolutionAndColumns) {
    CsrMatrix a = gen_random_csr(17, 23, 0.2, 3);
    CsrMatrix t = transpose(a);
    EXPECT_EQ(t.n_rows(), 23u);
    EXPECT_EQ(transpose(t), a);
    for (std::size_t c = 0; c < a.n_cols(); ++c) {
        EXPECT_EQ(extract_column(a, c), extract_row(t, c));
    }
}

// Worked example row: (4,56) (10,16) (12,78) (20,12) against B{4:98, 10:40, 12:32}.
TEST(OracleSpmspv, WorkedExampleRow) {
    CsrMatrix a(1, 21, {0, 4}, {4, 10, 12, 20}, {56, 16, 78, 12});
    SparseVector b(21, {{4, 98}, {10, 40}, {12, 32}});
    SparseVector c = oracle_spmspv(a, b);
    ASSERT_EQ(c.nnz(), 1u);
    EXPECT_EQ(c.entries()[0].value, 56.0 * 98 + 16.0 * 40 + 78.0 * 32 + 0.0);
    EXPECT_EQ(c.entries()[0].value, 8624.0);
}

TEST(OracleSpmspv, IdentityAndEmpty) {
    SparseVector b(5, {{0, 1.5}, {3, -2.0}});
    EXPECT_EQ(oracle_spmspv(CsrMatrix::identity(5), b), b);
    EXPECT_TRUE(oracle_spmspv(gen_random_csr(5, 5, 0.5, 1), SparseVector(5)).empty());
    EXPECT_THROW(oracle_spmspv(CsrMatrix::identity(4), b), DimensionError);
}

TEST(OracleSpmspv, DropsExactCancellation) {
    CsrMatrix a(1, 2, {0, 2}, {0, 1}, {1.0, -1.0});
    SparseVector b(2, {{0, 3.0}, {1, 3.0}});
    EXPECT_TRUE(oracle_spmspv(a, b).empty());
}

TEST(OracleSpmspv, MatchesDenseComputationBitExact) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t n = 10 + seed * 7;
        CsrMatrix a = gen_random_csr(n, n, 0.1, seed);
        SparseVector b = extract_row(transpose(a), seed % n);
        SparseVector c = oracle_spmspv(a, b);
        std::vector<double> dense = reference::dense_matvec(a, b);
        for (std::size_t j = 0; j < n; ++j) {
            if (dense[j] == 0.0) {
                EXPECT_EQ(c.value_at(j), 0.0);
            } else {
                EXPECT_EQ(c.value_at(j), dense[j]) << "seed " << seed << " row " << j;
            }
        }
    }
}

TEST(OracleSpmspm, HandExample) {
    CsrMatrix a = from_dense(2, 2, std::vector<double>{1, 0, 2, 3});
    CsrMatrix b = from_dense(2, 2, std::vector<double>{0, 4, 5, 0});
    EXPECT_EQ(oracle_spmspm(a, b), from_dense(2, 2, std::vector<double>{0, 4, 15, 8}));
}

TEST(OracleSpmspm, RightIdentity) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        CsrMatrix a = gen_random_csr(12, 9, 0.3, seed);
        EXPECT_EQ(oracle_spmspm(a, CsrMatrix::identity(9)), a);
    }
    EXPECT_THROW(oracle_spmspm(CsrMatrix::identity(3), CsrMatrix::identity(4)), DimensionError);
}

TEST(OracleSpmspm, MatchesPerElementOracle) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        CsrMatrix a = gen_random_csr(20, 20, 0.2, seed);
        CsrMatrix b = gen_random_csr(20, 20, 0.2, seed + 100);
        EXPECT_EQ(oracle_spmspm(a, b), from_dense(20, 20, reference::per_element_matmul(a, b))) << "seed " << seed;
    }
}

TEST(Generator, DensityZeroIsEmpty) {
    CsrMatrix a = gen_random_csr(30, 40, 0.0, 9);
    EXPECT_EQ(a.nnz(), 0u);
    EXPECT_EQ(a.n_rows(), 30u);
    EXPECT_EQ(a.n_cols(), 40u);
}

TEST(Generator, DensityOneIsFull) {
    EXPECT_EQ(gen_random_csr(7, 9, 1.0, 9).nnz(), 63u);
}

TEST(Generator, Deterministic) {
    EXPECT_EQ(gen_random_csr(64, 64, 0.1, 42), gen_random_csr(64, 64, 0.1, 42));
    EXPECT_NE(gen_random_csr(64, 64, 0.1, 42), gen_random_csr(64, 64, 0.1, 43));
    EXPECT_EQ(gen_random_vector(100, 0.3, 5), gen_random_vector(100, 0.3, 5));
}

TEST(Generator, NnzWithinThreeSigmaOfBinomialMean) {
    // n = 100x100, p = 0.05: mean 500, sigma = sqrt(10000 * 0.05 * 0.95) = 21.79.
    const double sigma = std::sqrt(10000 * 0.05 * 0.95);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const double nnz = static_cast<double>(gen_random_csr(100, 100, 0.05, seed).nnz());
        EXPECT_LE(std::fabs(nnz - 500.0), 3 * sigma) << "seed " << seed;
    }
}

TEST(Generator, ValueDistributions) {
    CsrMatrix ints = gen_random_csr(40, 40, 0.3, 1, ValueDistribution::Integer);
    for (double v : ints.values()) {
        EXPECT_NE(v, 0.0);
        EXPECT_EQ(v, std::round(v));
        EXPECT_LE(std::fabs(v), 9.0);
    }
    CsrMatrix reals = gen_random_csr(40, 40, 0.3, 1, ValueDistribution::Uniform);
    for (double v : reals.values()) {
        EXPECT_NE(v, 0.0);
        EXPECT_GE(v, -1.0);
        EXPECT_LT(v, 1.0);
    }
}

TEST(Generator, RejectsInvalidDensity) {
    EXPECT_THROW(gen_random_csr(3, 3, -0.1, 0), std::invalid_argument);
    EXPECT_THROW(gen_random_csr(3, 3, 1.5, 0), std::invalid_argument);
}
