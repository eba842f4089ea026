#include "camspm/accelerator.hpp"

#include <algorithm>
#include <string>

#include "camspm/dse.hpp"
#include "camspm/errors.hpp"

namespace camspm {

void AcceleratorConfig::validate() const {
    if (k < 1) {
        throw ConfigError("k must be at least 1");
    }
    if (h < 1) {
        throw ConfigError("h must be at least 1");
    }
    if (w < 1 || w > 64) {
        throw ConfigError("w must be in [1, 64]");
    }
    if (value_bits < 1) {
        throw ConfigError("value_bits must be positive");
    }
    if (pipeline_depth < 1) {
        throw ConfigError("pipeline_depth must be at least 1");
    }
    if (!(clock_hz > 0.0)) {
        throw ConfigError("clock_hz must be positive");
    }
    if (!(memory_bw_bytes_per_s > 0.0)) {
        throw ConfigError("memory bandwidth must be positive");
    }
}

CategoryTotals& CategoryTotals::operator+=(const CategoryTotals& o) noexcept {
    compare += o.compare;
    ram_read += o.ram_read;
    write += o.write;
    multiply += o.multiply;
    accumulate += o.accumulate;
    memory += o.memory;
    return *this;
}

CategoryTotals CategoryTotals::scaled(double factor) const noexcept {
    return {compare * factor, ram_read * factor, write * factor,
            multiply * factor, accumulate * factor, memory * factor};
}

EventCounts& EventCounts::operator+=(const EventCounts& o) noexcept {
    compare_bit_ops += o.compare_bit_ops;
    ram_reads += o.ram_reads;
    cam_writes += o.cam_writes;
    multiplies += o.multiplies;
    additions += o.additions;
    mem_bytes += o.mem_bytes;
    return *this;
}

std::size_t plan_tiles(std::size_t nnz_b, std::size_t h) {
    if (h == 0) {
        throw ConfigError("h must be at least 1");
    }
    return std::max<std::size_t>(1, (nnz_b + h - 1) / h);
}

unsigned required_index_width(std::size_t n) {
    unsigned w = 1;
    while (w < 64 && (std::size_t{1} << w) < n) {
        ++w;
    }
    return w;
}

namespace {

class Datapath {
public:
    explicit Datapath(bool fp32) : fp32_(fp32) {}
    double operator()(double v) const { return fp32_ ? static_cast<double>(static_cast<float>(v)) : v; }

private:
    bool fp32_;
};

}  // namespace

Accelerator::Accelerator(AcceleratorConfig cfg) : cfg_(std::move(cfg)) {
    cfg_.validate();
    modules_.reserve(cfg_.k);
    for (unsigned m = 0; m < cfg_.k; ++m) {
        modules_.emplace_back(cfg_.h, cfg_.w);
    }
}

void Accelerator::load_vector(const SparseVector& b) {
    if (cfg_.w < required_index_width(b.length())) {
        throw DimensionError("index width " + std::to_string(cfg_.w) + " too small for vector length " +
                             std::to_string(b.length()) + " (need " +
                             std::to_string(required_index_width(b.length())) + ")");
    }
    const Datapath round(cfg_.fp32_datapath);
    std::vector<SparseEntry> stored;
    stored.reserve(b.nnz());
    for (const auto& e : b.entries()) {
        stored.push_back({e.index, round(e.value)});
    }
    // Rounding to binary32 can flush tiny values to zero; those are no longer nonzeros.
    std::erase_if(stored, [](const SparseEntry& e) { return e.value == 0.0; });
    b_.emplace(b.length(), std::move(stored));

    tiles_.clear();
    auto entries = b_->entries();
    const std::size_t n_tiles = plan_tiles(entries.size(), cfg_.h);
    for (std::size_t t = 0; t < n_tiles; ++t) {
        const std::size_t first = t * cfg_.h;
        tiles_.push_back(entries.subspan(first, std::min(cfg_.h, entries.size() - first)));
    }
    resident_tile_.reset();
    load_tile(0);
}

void Accelerator::load_tile(std::size_t t) {
    // B is fetched once per tile and broadcast to the k modules.
    for (auto& module : modules_) {
        module.load_segment(tiles_[t]);
    }
    pending_read_bytes_ += tiles_[t].size() * cfg_.element_bytes();
    resident_tile_ = t;
}

CamEnergyTally Accelerator::module_tally() const {
    CamEnergyTally sum;
    for (const auto& module : modules_) {
        sum.compare_bit_ops += module.tally().compare_bit_ops;
        sum.ram_reads += module.tally().ram_reads;
        sum.writes += module.tally().writes;
    }
    return sum;
}

SpmspvResult Accelerator::multiply(const CsrMatrix& a, const IterationObserver& observe) {
    if (!b_) {
        throw DimensionError("no multiplicand vector loaded");
    }
    if (a.n_cols() != b_->length()) {
        throw DimensionError("A has " + std::to_string(a.n_cols()) + " columns but B has length " +
                             std::to_string(b_->length()));
    }

    const Datapath round(cfg_.fp32_datapath);
    const unsigned k = cfg_.k;
    RunMetrics m;
    std::vector<double> partial(a.n_rows(), 0.0);
    std::vector<LaneResult> lanes(k);

    for (std::size_t t = 0; t < tiles_.size(); ++t) {
        if (resident_tile_ != t) {
            load_tile(t);
        }
        for (std::size_t j = 0; j < a.n_rows(); ++j) {
            const std::size_t nzr = a.row_nnz(j);
            if (nzr == 0) {
                continue;
            }
            auto cols = a.row_cols(j);
            auto vals = a.row_values(j);
            double row_sum = 0.0;  // step 0: reset REG
            for (std::size_t s = 0; s < nzr; s += k) {
                const std::size_t active = std::min<std::size_t>(k, nzr - s);
                double iteration_sum = 0.0;
                for (std::size_t lane = 0; lane < active; ++lane) {
                    LaneResult& r = lanes[lane];
                    r.module = static_cast<unsigned>(lane);
                    r.column = cols[s + lane];
                    r.a_value = round(vals[s + lane]);
                    auto b_value = modules_[lane].search(r.column);
                    r.hit = b_value.has_value();
                    r.b_value = b_value.value_or(0.0);
                    r.product = round(r.a_value * r.b_value);
                    iteration_sum = lane == 0 ? r.product : round(iteration_sum + r.product);
                }
                row_sum = round(iteration_sum + row_sum);
                ++m.inner_iterations;
                if (observe) {
                    observe(InnerIteration{t, j, std::span<const LaneResult>(lanes.data(), active),
                                           iteration_sum, row_sum});
                }
            }
            m.fetched_elements += nzr;
            partial[j] = round(partial[j] + row_sum);
        }
        m.mem_read_bytes += a.nnz() * cfg_.element_bytes();
    }

    std::vector<SparseEntry> c;
    for (std::size_t j = 0; j < partial.size(); ++j) {
        if (partial[j] != 0.0) {
            c.push_back({static_cast<Index>(j), partial[j]});
        }
    }

    const std::uint64_t eb = cfg_.element_bytes();
    m.passes = tiles_.size();
    m.cycles = cfg_.pipeline_depth + m.inner_iterations;
    m.index_match_ops = m.inner_iterations * k * static_cast<std::uint64_t>(cfg_.h);
    m.flops = 2 * m.fetched_elements;
    m.mem_read_bytes += pending_read_bytes_;
    m.mem_write_bytes = c.size() * eb;

    // Module activity since the previous run, including loads done by load_vector().
    const CamEnergyTally now = module_tally();
    m.events.compare_bit_ops = now.compare_bit_ops - charged_.compare_bit_ops;
    m.events.ram_reads = now.ram_reads - charged_.ram_reads;
    m.events.cam_writes = now.writes - charged_.writes;
    charged_ = now;
    m.events.multiplies = m.fetched_elements;
    m.events.additions = m.fetched_elements;
    m.events.mem_bytes = m.mem_read_bytes + m.mem_write_bytes;
    m.energy_joules = energy_from_events(cfg_.energy, m.events);

    pending_read_bytes_ = 0;
    return {SparseVector(a.n_rows(), std::move(c)), m};
}

SpmspvResult spmspv(const CsrMatrix& a, const SparseVector& b, const AcceleratorConfig& cfg,
                    const IterationObserver& observe) {
    if (a.n_cols() != b.length()) {
        throw DimensionError("A has " + std::to_string(a.n_cols()) + " columns but B has length " +
                             std::to_string(b.length()));
    }
    Accelerator acc(cfg);
    acc.load_vector(b);
    return acc.multiply(a, observe);
}

SpmspmResult spmspm(const CsrMatrix& a, const CsrMatrix& b, const AcceleratorConfig& cfg) {
    if (a.n_cols() != b.n_rows()) {
        throw DimensionError("A has " + std::to_string(a.n_cols()) + " columns but B has " +
                             std::to_string(b.n_rows()) + " rows");
    }
    Accelerator acc(cfg);
    const CsrMatrix bt = transpose(b);
    CooMatrix out{a.n_rows(), b.n_cols(), {}};
    RunMetrics total;
    for (std::size_t col = 0; col < b.n_cols(); ++col) {
        acc.load_vector(extract_row(bt, col));
        auto [c, m] = acc.multiply(a);
        for (const auto& e : c.entries()) {
            out.entries.push_back({e.index, static_cast<Index>(col), e.value});
        }
        // Columns stream back to back through one filled pipeline.
        total.cycles += m.cycles - cfg.pipeline_depth;
        total.inner_iterations += m.inner_iterations;
        total.index_match_ops += m.index_match_ops;
        total.fetched_elements += m.fetched_elements;
        total.flops += m.flops;
        total.mem_read_bytes += m.mem_read_bytes;
        total.mem_write_bytes += m.mem_write_bytes;
        total.passes += m.passes;
        total.events += m.events;
        total.energy_joules += m.energy_joules;
    }
    total.cycles += cfg.pipeline_depth;
    return {coo_to_csr(out), total};
}

}  // namespace camspm
