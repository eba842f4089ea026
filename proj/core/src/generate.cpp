#include "camspm/generate.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace camspm {

namespace {

class ValueSource {
public:
    ValueSource(ValueDistribution dist, std::mt19937_64& rng) : dist_(dist), rng_(rng) {}

    double next() {
        if (dist_ == ValueDistribution::Integer) {
            int v = 0;
            while (v == 0) {
                v = ints_(rng_);
            }
            return static_cast<double>(v);
        }
        double v = 0.0;
        while (v == 0.0) {
            v = reals_(rng_);
        }
        return v;
    }

private:
    ValueDistribution dist_;
    std::mt19937_64& rng_;
    std::uniform_int_distribution<int> ints_{-9, 9};
    std::uniform_real_distribution<double> reals_{-1.0, 1.0};
};

// Visits positions 0..total-1 selected by a Bernoulli(density) process.
template <typename Visit>
void bernoulli_positions(std::size_t total, double density, std::mt19937_64& rng, Visit&& visit) {
    if (!(density >= 0.0 && density <= 1.0)) {
        throw std::invalid_argument("density must lie in [0, 1]");
    }
    if (density == 0.0 || total == 0) {
        return;
    }
    if (density == 1.0) {
        for (std::size_t pos = 0; pos < total; ++pos) {
            visit(pos);
        }
        return;
    }
    std::geometric_distribution<std::size_t> gap(density);
    std::size_t pos = gap(rng);
    while (pos < total) {
        visit(pos);
        std::size_t skip = gap(rng);
        if (skip >= total - pos) {
            break;
        }
        pos += skip + 1;
    }
}

}  // namespace

CsrMatrix gen_random_csr(std::size_t n_rows, std::size_t n_cols, double density, std::uint64_t seed,
                         ValueDistribution dist) {
    std::mt19937_64 rng(seed);
    ValueSource values(dist, rng);

    std::vector<std::size_t> row_start(n_rows + 1, 0);
    std::vector<Index> col_idx;
    std::vector<double> vals;
    bernoulli_positions(n_rows * n_cols, density, rng, [&](std::size_t pos) {
        ++row_start[pos / n_cols + 1];
        col_idx.push_back(static_cast<Index>(pos % n_cols));
        vals.push_back(values.next());
    });
    for (std::size_t j = 0; j < n_rows; ++j) {
        row_start[j + 1] += row_start[j];
    }
    return CsrMatrix(n_rows, n_cols, std::move(row_start), std::move(col_idx), std::move(vals));
}

SparseVector gen_random_vector(std::size_t length, double density, std::uint64_t seed, ValueDistribution dist) {
    std::mt19937_64 rng(seed);
    ValueSource values(dist, rng);
    std::vector<SparseEntry> entries;
    bernoulli_positions(length, density, rng, [&](std::size_t pos) {
        entries.push_back({static_cast<Index>(pos), values.next()});
    });
    return SparseVector(length, std::move(entries));
}

}  // namespace camspm
