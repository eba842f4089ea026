#include "camspm/oracle.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "camspm/errors.hpp"

namespace camspm {

SparseVector oracle_spmspv(const CsrMatrix& a, const SparseVector& b) {
    if (a.n_cols() != b.length()) {
        throw DimensionError("A has " + std::to_string(a.n_cols()) + " columns but B has length " +
                             std::to_string(b.length()));
    }
    std::vector<double> dense_b(b.length(), 0.0);
    for (const auto& e : b.entries()) {
        dense_b[e.index] = e.value;
    }
    std::vector<SparseEntry> out;
    for (std::size_t j = 0; j < a.n_rows(); ++j) {
        auto cols = a.row_cols(j);
        auto vals = a.row_values(j);
        double sum = 0.0;
        for (std::size_t p = 0; p < cols.size(); ++p) {
            sum += vals[p] * dense_b[cols[p]];
        }
        if (sum != 0.0) {
            out.push_back({static_cast<Index>(j), sum});
        }
    }
    return SparseVector(a.n_rows(), std::move(out));
}

CsrMatrix oracle_spmspm(const CsrMatrix& a, const CsrMatrix& b) {
    if (a.n_cols() != b.n_rows()) {
        throw DimensionError("A has " + std::to_string(a.n_cols()) + " columns but B has " +
                             std::to_string(b.n_rows()) + " rows");
    }
    const std::size_t n = a.n_rows();
    const std::size_t inner = a.n_cols();
    const std::size_t m = b.n_cols();
    std::vector<double> da = to_dense(a);
    std::vector<double> db = to_dense(b);
    std::vector<double> dc(n * m, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            double sum = 0.0;
            for (std::size_t t = 0; t < inner; ++t) {
                sum += da[i * inner + t] * db[t * m + j];
            }
            dc[i * m + j] = sum;
        }
    }
    return from_dense(n, m, dc);
}

std::optional<ValueMismatch> first_mismatch(const SparseVector& expected, const SparseVector& got,
                                            double rel_tol) {
    auto e = expected.entries();
    auto g = got.entries();
    std::size_t ie = 0;
    std::size_t ig = 0;
    while (ie < e.size() || ig < g.size()) {
        std::size_t idx;
        double ev = 0.0;
        double gv = 0.0;
        if (ig == g.size() || (ie < e.size() && e[ie].index < g[ig].index)) {
            idx = e[ie].index;
            ev = e[ie++].value;
        } else if (ie == e.size() || g[ig].index < e[ie].index) {
            idx = g[ig].index;
            gv = g[ig++].value;
        } else {
            idx = e[ie].index;
            ev = e[ie++].value;
            gv = g[ig++].value;
        }
        if (std::fabs(gv - ev) > rel_tol * (1.0 + std::fabs(ev)) || std::isnan(gv) != std::isnan(ev)) {
            return ValueMismatch{idx, ev, gv};
        }
    }
    return std::nullopt;
}

void check_against_oracle(const SparseVector& expected, const SparseVector& got, double rel_tol) {
    if (expected.length() != got.length()) {
        throw DimensionError("result length " + std::to_string(got.length()) + " differs from oracle length " +
                             std::to_string(expected.length()));
    }
    if (auto mm = first_mismatch(expected, got, rel_tol)) {
        throw OracleMismatch(mm->index, mm->expected, mm->got);
    }
}

}  // namespace camspm
