#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "camspm/accelerator.hpp"
#include "camspm/generate.hpp"
#include "camspm/report.hpp"
#include "camspm/settings.hpp"

namespace camspm {

struct GeneratorSpec {
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    double density = 0.0;
    std::uint64_t seed = 0;
    ValueDistribution dist = ValueDistribution::Integer;
};

/// Parses `ROWSxCOLS:DENSITY:SEED`, e.g. `100x100:0.05:7`. Throws ConfigError.
GeneratorSpec parse_generator_spec(std::string_view text, ValueDistribution dist = ValueDistribution::Integer);

/// A Matrix Market file or a generator invocation.
struct MatrixSource {
    std::string id;
    std::filesystem::path path;
    std::optional<GeneratorSpec> generator;

    static MatrixSource file(const std::filesystem::path& path);
    static MatrixSource generated(const GeneratorSpec& g);

    CsrMatrix load() const;
};

/// Files stay as given; directories expand to their *.mtx files in name order.
std::vector<MatrixSource> expand_sources(std::span<const std::filesystem::path> paths);

struct ExperimentSpec {
    std::vector<MatrixSource> matrices;
    std::optional<std::filesystem::path> vector_file;  // otherwise a random nonempty row of each matrix
    std::uint64_t seed = 1;
    unsigned repetitions = 1;
    unsigned jobs = 1;
    ModelSettings settings;
};

struct MatrixInfo {
    std::string id;
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::size_t nnz = 0;
    std::size_t max_row_nnz = 0;
    double mean_row_nnz = 0.0;
    unsigned required_w = 0;  // ceil(log2 n_cols), at least 1
};

MatrixInfo matrix_info(std::string id, const CsrMatrix& m);
MatrixInfo cmd_info(const MatrixSource& source);
Table info_table(std::span<const MatrixInfo> infos);

struct RunRow {
    std::string matrix;
    std::uint64_t seed = 0;
    unsigned repetition = 0;
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::size_t nnz = 0;
    std::string vector_source;  // "row:<j>", "file", or "none" for a matrix without nonzero rows
    std::size_t vector_nnz = 0;
    unsigned k = 0;
    std::size_t h = 0;
    unsigned w = 0;
    RunMetrics metrics;
    double seconds = 0.0;
    double gflops = 0.0;
    double index_ops_per_s = 0.0;
    double utilization = 0.0;  // fetched elements / (inner iterations * k)
    CategoryTotals watts;
    double gflops_per_w = 0.0;
    bool oracle_match = false;
    SparseVector result;
};

/// Relative tolerance for the oracle check: 1e-12 on the binary64 datapath, 1e-4 on binary32.
double oracle_tolerance(const AcceleratorConfig& cfg);

/// Simulates A*B, checks it against the reference product and derives the report row.
/// Throws OracleMismatch when the check fails.
RunRow run_single(std::string matrix_id, const CsrMatrix& a, const SparseVector& b, std::string vector_source,
                  std::uint64_t seed, unsigned repetition, const ModelSettings& settings);

/// One row per (matrix, repetition) in input order. Repetition r uses seed + r
/// to pick the multiplicand row.
std::vector<RunRow> cmd_run(const ExperimentSpec& spec);
Table run_table(std::span<const RunRow> rows);

struct SummaryRow {
    std::string metric;
    double min = 0.0;
    double median = 0.0;
    double max = 0.0;
};

struct BenchReport {
    std::vector<RunRow> rows;
    std::vector<SummaryRow> summary;
};

BenchReport cmd_bench(const ExperimentSpec& spec);
Table summary_table(std::span<const SummaryRow> summary);
Table baseline_table();

struct DseRow {
    SweepPoint point;
    double area_cmos_mm2 = 0.0;
    double area_resistive_mm2 = 0.0;
};

/// Bandwidth sweep plus CMOS and resistive area at each derived k.
std::vector<DseRow> cmd_dse(std::span<const double> bandwidths, const ModelSettings& settings);
Table dse_table(std::span<const DseRow> rows);

/// `start`, `start+step`, ... up to and including `stop` (within rounding).
std::vector<double> bandwidth_range(double start, double stop, double step);

}  // namespace camspm
