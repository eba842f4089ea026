#include "camspm/harness.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <future>
#include <random>
#include <regex>

#include "camspm/dse.hpp"
#include "camspm/errors.hpp"
#include "camspm/matrix_market.hpp"
#include "camspm/oracle.hpp"

namespace camspm {

GeneratorSpec parse_generator_spec(std::string_view text, ValueDistribution dist) {
    static const std::regex re(R"(^(\d+)x(\d+):([0-9.eE+-]+):(\d+)$)");
    std::cmatch m;
    if (!std::regex_match(text.begin(), text.end(), m, re)) {
        throw ConfigError("generator spec must look like ROWSxCOLS:DENSITY:SEED, got '" + std::string(text) + "'");
    }
    GeneratorSpec g;
    g.n_rows = std::stoull(m[1].str());
    g.n_cols = std::stoull(m[2].str());
    g.density = std::stod(m[3].str());
    g.seed = std::stoull(m[4].str());
    g.dist = dist;
    if (!(g.density >= 0.0 && g.density <= 1.0)) {
        throw ConfigError("generator density must lie in [0, 1]");
    }
    return g;
}

MatrixSource MatrixSource::file(const std::filesystem::path& path) {
    return {path.stem().string(), path, std::nullopt};
}

MatrixSource MatrixSource::generated(const GeneratorSpec& g) {
    std::string id = "gen-" + std::to_string(g.n_rows) + "x" + std::to_string(g.n_cols) + "-d" +
                     format_double(g.density) + "-s" + std::to_string(g.seed);
    return {std::move(id), {}, g};
}

CsrMatrix MatrixSource::load() const {
    if (generator) {
        return gen_random_csr(generator->n_rows, generator->n_cols, generator->density, generator->seed,
                              generator->dist);
    }
    return coo_to_csr(read_matrix_market(path));
}

std::vector<MatrixSource> expand_sources(std::span<const std::filesystem::path> paths) {
    std::vector<MatrixSource> out;
    for (const auto& p : paths) {
        if (std::filesystem::is_directory(p)) {
            std::vector<std::filesystem::path> files;
            for (const auto& entry : std::filesystem::directory_iterator(p)) {
                if (entry.is_regular_file() && entry.path().extension() == ".mtx") {
                    files.push_back(entry.path());
                }
            }
            std::sort(files.begin(), files.end());
            for (const auto& f : files) {
                out.push_back(MatrixSource::file(f));
            }
        } else {
            out.push_back(MatrixSource::file(p));
        }
    }
    return out;
}

MatrixInfo matrix_info(std::string id, const CsrMatrix& m) {
    MatrixInfo info;
    info.id = std::move(id);
    info.n_rows = m.n_rows();
    info.n_cols = m.n_cols();
    info.nnz = m.nnz();
    for (std::size_t j = 0; j < m.n_rows(); ++j) {
        info.max_row_nnz = std::max(info.max_row_nnz, m.row_nnz(j));
    }
    info.mean_row_nnz = m.n_rows() ? static_cast<double>(m.nnz()) / static_cast<double>(m.n_rows()) : 0.0;
    info.required_w = required_index_width(m.n_cols());
    return info;
}

MatrixInfo cmd_info(const MatrixSource& source) {
    return matrix_info(source.id, source.load());
}

Table info_table(std::span<const MatrixInfo> infos) {
    Table t{"matrices", {"matrix", "n_rows", "n_cols", "nnz", "max_row_nnz", "mean_row_nnz", "required_w"}, {}};
    for (const auto& i : infos) {
        t.rows.push_back({i.id, std::uint64_t{i.n_rows}, std::uint64_t{i.n_cols}, std::uint64_t{i.nnz},
                          std::uint64_t{i.max_row_nnz}, i.mean_row_nnz, i.required_w});
    }
    return t;
}

double oracle_tolerance(const AcceleratorConfig& cfg) {
    return cfg.fp32_datapath ? 1e-4 : 1e-12;
}

RunRow run_single(std::string matrix_id, const CsrMatrix& a, const SparseVector& b, std::string vector_source,
                  std::uint64_t seed, unsigned repetition, const ModelSettings& settings) {
    const AcceleratorConfig& cfg = settings.accel;
    auto [c, metrics] = spmspv(a, b, cfg);
    check_against_oracle(oracle_spmspv(a, b), c, oracle_tolerance(cfg));

    RunRow row;
    row.matrix = std::move(matrix_id);
    row.seed = seed;
    row.repetition = repetition;
    row.n_rows = a.n_rows();
    row.n_cols = a.n_cols();
    row.nnz = a.nnz();
    row.vector_source = std::move(vector_source);
    row.vector_nnz = b.nnz();
    row.k = cfg.k;
    row.h = cfg.h;
    row.w = cfg.w;
    row.metrics = metrics;
    row.seconds = metrics.seconds(cfg.clock_hz);
    row.gflops = static_cast<double>(metrics.flops) / row.seconds / 1e9;
    row.index_ops_per_s = static_cast<double>(metrics.index_match_ops) / row.seconds;
    row.utilization = metrics.inner_iterations
                          ? static_cast<double>(metrics.fetched_elements) /
                                (static_cast<double>(metrics.inner_iterations) * cfg.k)
                          : 0.0;
    row.watts = power_estimate(cfg, metrics, row.seconds);
    const double total_w = row.watts.total();
    row.gflops_per_w = total_w > 0.0 ? row.gflops / total_w : 0.0;
    row.oracle_match = true;
    row.result = std::move(c);
    return row;
}

namespace {

struct Job {
    std::size_t matrix = 0;
    unsigned repetition = 0;
};

RunRow run_job(const ExperimentSpec& spec, const CsrMatrix& a, const std::optional<SparseVector>& fixed_b,
               const Job& job) {
    const MatrixSource& src = spec.matrices[job.matrix];
    const std::uint64_t seed = spec.seed + job.repetition;
    if (fixed_b) {
        return run_single(src.id, a, *fixed_b, "file", seed, job.repetition, spec.settings);
    }
    std::vector<std::size_t> nonempty;
    for (std::size_t j = 0; j < a.n_rows(); ++j) {
        if (a.row_nnz(j) > 0) {
            nonempty.push_back(j);
        }
    }
    if (nonempty.empty()) {
        return run_single(src.id, a, SparseVector(a.n_cols()), "none", seed, job.repetition, spec.settings);
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, nonempty.size() - 1);
    const std::size_t j = nonempty[pick(rng)];
    return run_single(src.id, a, extract_row(a, j), "row:" + std::to_string(j), seed, job.repetition,
                      spec.settings);
}

}  // namespace

std::vector<RunRow> cmd_run(const ExperimentSpec& spec) {
    if (spec.matrices.empty()) {
        throw ConfigError("at least one matrix source is required");
    }
    if (spec.repetitions == 0) {
        throw ConfigError("repetitions must be at least 1");
    }
    spec.settings.accel.validate();

    std::optional<SparseVector> fixed_b;
    if (spec.vector_file) {
        fixed_b = read_vector_market(*spec.vector_file);
    }
    std::vector<CsrMatrix> matrices;
    matrices.reserve(spec.matrices.size());
    for (const auto& src : spec.matrices) {
        matrices.push_back(src.load());
    }

    std::vector<Job> jobs;
    for (std::size_t m = 0; m < matrices.size(); ++m) {
        for (unsigned r = 0; r < spec.repetitions; ++r) {
            jobs.push_back({m, r});
        }
    }

    std::vector<RunRow> rows(jobs.size());
    const std::size_t width = std::max(1u, spec.jobs);
    for (std::size_t first = 0; first < jobs.size(); first += width) {
        const std::size_t last = std::min(jobs.size(), first + width);
        if (width == 1) {
            rows[first] = run_job(spec, matrices[jobs[first].matrix], fixed_b, jobs[first]);
            continue;
        }
        std::vector<std::future<RunRow>> batch;
        for (std::size_t i = first; i < last; ++i) {
            batch.push_back(std::async(std::launch::async, [&, i] {
                return run_job(spec, matrices[jobs[i].matrix], fixed_b, jobs[i]);
            }));
        }
        // get() in input order so the first failing job (by position) is the one reported.
        for (std::size_t i = first; i < last; ++i) {
            rows[i] = batch[i - first].get();
        }
    }
    return rows;
}

Table run_table(std::span<const RunRow> rows) {
    Table t{"runs",
            {"matrix", "seed", "repetition", "n_rows", "n_cols", "nnz", "vector_source", "vector_nnz", "k", "h", "w",
             "passes", "cycles", "inner_iterations", "seconds", "gflops", "index_ops_per_s", "utilization",
             "watts_compare", "watts_ram_read", "watts_write", "watts_multiply", "watts_accumulate",
             "watts_memory", "watts_total", "gflops_per_w", "oracle_match"},
            {}};
    for (const auto& r : rows) {
        t.rows.push_back({r.matrix,
                          r.seed,
                          r.repetition,
                          std::uint64_t{r.n_rows},
                          std::uint64_t{r.n_cols},
                          std::uint64_t{r.nnz},
                          r.vector_source,
                          std::uint64_t{r.vector_nnz},
                          r.k,
                          std::uint64_t{r.h},
                          r.w,
                          r.metrics.passes,
                          r.metrics.cycles,
                          r.metrics.inner_iterations,
                          r.seconds,
                          r.gflops,
                          r.index_ops_per_s,
                          r.utilization,
                          r.watts.compare,
                          r.watts.ram_read,
                          r.watts.write,
                          r.watts.multiply,
                          r.watts.accumulate,
                          r.watts.memory,
                          r.watts.total(),
                          r.gflops_per_w,
                          r.oracle_match});
    }
    return t;
}

namespace {

SummaryRow summarize(std::string metric, std::vector<double> values) {
    SummaryRow s{std::move(metric), 0.0, 0.0, 0.0};
    if (values.empty()) {
        return s;
    }
    std::sort(values.begin(), values.end());
    s.min = values.front();
    s.max = values.back();
    const std::size_t n = values.size();
    s.median = n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
    return s;
}

}  // namespace

BenchReport cmd_bench(const ExperimentSpec& spec) {
    BenchReport report;
    report.rows = cmd_run(spec);
    std::vector<double> gflops;
    std::vector<double> efficiency;
    std::vector<double> watts;
    std::vector<double> utilization;
    for (const auto& r : report.rows) {
        gflops.push_back(r.gflops);
        efficiency.push_back(r.gflops_per_w);
        watts.push_back(r.watts.total());
        utilization.push_back(r.utilization);
    }
    report.summary.push_back(summarize("gflops", std::move(gflops)));
    report.summary.push_back(summarize("gflops_per_w", std::move(efficiency)));
    report.summary.push_back(summarize("watts_total", std::move(watts)));
    report.summary.push_back(summarize("utilization", std::move(utilization)));
    return report;
}

Table summary_table(std::span<const SummaryRow> summary) {
    Table t{"summary", {"metric", "min", "median", "max"}, {}};
    for (const auto& s : summary) {
        t.rows.push_back({s.metric, s.min, s.median, s.max});
    }
    return t;
}

Table baseline_table() {
    Table t{"baselines", {"baseline", "gflops_per_w_low", "gflops_per_w_high", "kind"}, {}};
    for (const auto& b : kLiteratureBaselines) {
        t.rows.push_back({std::string(b.name), b.gflops_per_w_low, b.gflops_per_w_high, "literature constant"});
    }
    return t;
}

std::vector<DseRow> cmd_dse(std::span<const double> bandwidths, const ModelSettings& settings) {
    std::vector<DseRow> out;
    for (const auto& p : bandwidth_sweep(bandwidths, settings.accel)) {
        AcceleratorConfig cfg = settings.accel;
        cfg.k = p.k;
        out.push_back({p, area_estimate_mm2(cfg, settings.tech, ImplementationStyle::Cmos),
                       area_estimate_mm2(cfg, settings.tech, ImplementationStyle::Resistive)});
    }
    return out;
}

Table dse_table(std::span<const DseRow> rows) {
    Table t{"sweep",
            {"bandwidth_bytes_per_s", "k", "peak_flops_per_s", "peak_index_ops_per_s", "area_cmos_mm2",
             "area_resistive_mm2", "area_ratio"},
            {}};
    for (const auto& r : rows) {
        t.rows.push_back({r.point.bandwidth_bytes_per_s, r.point.k, r.point.peak_flops_per_s,
                          r.point.peak_index_ops_per_s, r.area_cmos_mm2, r.area_resistive_mm2,
                          r.area_cmos_mm2 / r.area_resistive_mm2});
    }
    return t;
}

std::vector<double> bandwidth_range(double start, double stop, double step) {
    if (!(start > 0.0) || !(step > 0.0) || stop < start) {
        throw ConfigError("bandwidth range needs 0 < start <= stop and step > 0");
    }
    std::vector<double> out;
    // Index-based so accumulated rounding cannot skip or duplicate the last point.
    const auto n = static_cast<std::size_t>(std::floor((stop - start) / step * (1.0 + 1e-12))) + 1;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(start + static_cast<double>(i) * step);
    }
    return out;
}

}  // namespace camspm
