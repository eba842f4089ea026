#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "camspm/errors.hpp"
#include "camspm/harness.hpp"
#include "camspm/matrix_market.hpp"
#include "camspm/oracle.hpp"

using namespace camspm;

namespace {

const std::filesystem::path kData = CAMSPM_TEST_DATA;
const std::filesystem::path kCorpus = CAMSPM_CORPUS;

std::string render(const std::vector<RunRow>& rows, const ModelSettings& s, ReportFormat f) {
    std::ostringstream out;
    Table t = run_table(rows);
    write_report(out, f, settings_key_values(s), std::span<const Table>(&t, 1));
    return out.str();
}

ExperimentSpec corpus_spec() {
    ExperimentSpec spec;
    std::vector<std::filesystem::path> dirs{kCorpus};
    spec.matrices = expand_sources(dirs);
    spec.repetitions = 2;
    return spec;
}

}  // namespace

TEST(Info, IdentityMatrix) {
    auto info = matrix_info("eye3", CsrMatrix::identity(3));
    EXPECT_EQ(info.n_rows, 3u);
    EXPECT_EQ(info.nnz, 3u);
    EXPECT_EQ(info.max_row_nnz, 1u);
    EXPECT_DOUBLE_EQ(info.mean_row_nnz, 1.0);
    EXPECT_EQ(info.required_w, 2u);
}

TEST(Info, GeneratedSourceMatchesFormula) {
    GeneratorSpec g = parse_generator_spec("300x200:0.03:11");
    EXPECT_EQ(g.n_rows, 300u);
    EXPECT_EQ(g.n_cols, 200u);
    EXPECT_EQ(g.seed, 11u);
    auto info = cmd_info(MatrixSource::generated(g));
    CsrMatrix m = MatrixSource::generated(g).load();
    EXPECT_EQ(info.nnz, m.nnz());
    // Binomial(60000, 0.03) has mean 1800 and standard deviation ~42.
    EXPECT_NEAR(static_cast<double>(info.nnz), 1800.0, 5 * 42.0);
}

TEST(Info, CorpusFilesLoad) {
    std::vector<std::filesystem::path> dirs{kCorpus};
    auto sources = expand_sources(dirs);
    ASSERT_GE(sources.size(), 10u);
    for (const auto& s : sources) {
        auto info = cmd_info(s);
        EXPECT_LE(info.max_row_nnz, info.n_cols) << s.id;
    }
}

TEST(GeneratorSpec, Errors) {
    EXPECT_THROW(parse_generator_spec("100x100"), ConfigError);
    EXPECT_THROW(parse_generator_spec("100:0.1:2"), ConfigError);
    EXPECT_THROW(parse_generator_spec("100x100:x:2"), ConfigError);
    EXPECT_THROW(parse_generator_spec("100x100:1.5:2"), ConfigError);
}

TEST(Run, WorkedExampleFixture) {
    ExperimentSpec spec;
    spec.matrices.push_back(MatrixSource::file(kData / "worked_row.mtx"));
    spec.vector_file = kData / "worked_vector.mtx";
    spec.settings.accel.k = 4;
    spec.settings.accel.h = 8;
    auto rows = cmd_run(spec);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_TRUE(rows[0].oracle_match);
    EXPECT_EQ(rows[0].vector_source, "file");
    ASSERT_EQ(rows[0].result.nnz(), 1u);
    EXPECT_EQ(rows[0].result.entries()[0].value, 8624.0);
}

TEST(Run, ThroughputBoundedByPeak) {
    ExperimentSpec spec = corpus_spec();
    for (const auto& row : cmd_run(spec)) {
        EXPECT_TRUE(row.oracle_match) << row.matrix;
        EXPECT_LE(row.gflops, 60.0 * (1 + 1e-12)) << row.matrix;
        EXPECT_LE(row.utilization, 1.0) << row.matrix;
        EXPECT_LE(row.watts.total(), 0.3) << row.matrix;
    }
}

TEST(Run, DeterministicReports) {
    ExperimentSpec spec = corpus_spec();
    spec.seed = 42;
    auto a = render(cmd_run(spec), spec.settings, ReportFormat::Csv);
    auto b = render(cmd_run(spec), spec.settings, ReportFormat::Csv);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.rfind("# ", 0), 0u);
    spec.jobs = 4;
    EXPECT_EQ(render(cmd_run(spec), spec.settings, ReportFormat::Csv), a);
}

TEST(Run, JsonReportParses) {
    ExperimentSpec spec;
    spec.matrices.push_back(MatrixSource::generated(parse_generator_spec("64x64:0.05:3")));
    auto text = render(cmd_run(spec), spec.settings, ReportFormat::Json);
    auto doc = nlohmann::json::parse(text);
    ASSERT_TRUE(doc.contains("config"));
    EXPECT_EQ(doc["config"]["k"], "15");
    ASSERT_TRUE(doc.contains("runs"));
    ASSERT_EQ(doc["runs"].size(), 1u);
    EXPECT_EQ(doc["runs"][0]["oracle_match"], true);
    EXPECT_EQ(doc["runs"][0]["n_rows"], 64);
}

TEST(Run, MatrixWithoutNonzeroRows) {
    ExperimentSpec spec;
    spec.matrices.push_back(MatrixSource::generated(parse_generator_spec("16x16:0:1")));
    auto rows = cmd_run(spec);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].vector_source, "none");
    EXPECT_EQ(rows[0].gflops, 0.0);
    EXPECT_TRUE(rows[0].oracle_match);
}

TEST(Bench, CorpusSummary) {
    ExperimentSpec spec = corpus_spec();
    auto report = cmd_bench(spec);
    ASSERT_FALSE(report.rows.empty());
    const SummaryRow* gflops = nullptr;
    for (const auto& s : report.summary) {
        EXPECT_LE(s.min, s.median);
        EXPECT_LE(s.median, s.max);
        if (s.metric == "gflops") {
            gflops = &s;
        }
    }
    ASSERT_NE(gflops, nullptr);
    EXPECT_LT(gflops->min, gflops->max);
    EXPECT_LE(gflops->max, 60.0 * (1 + 1e-12));
    auto baselines = baseline_table();
    EXPECT_EQ(baselines.rows.size(), std::size(kLiteratureBaselines));
}

TEST(Dse, DefaultRangeContainsReferencePoint) {
    auto bws = bandwidth_range(10e9, 1000e9, 10e9);
    ASSERT_EQ(bws.size(), 100u);
    ModelSettings s;
    s.accel.h = std::size_t{1} << 20;
    auto rows = cmd_dse(bws, s);
    bool found = false;
    for (const auto& r : rows) {
        if (std::abs(r.point.bandwidth_bytes_per_s - 250e9) < 1.0) {
            found = true;
            EXPECT_EQ(r.point.k, 15u);
            EXPECT_DOUBLE_EQ(r.point.peak_flops_per_s, 6e10);
            EXPECT_GE(r.area_cmos_mm2 / r.area_resistive_mm2, 25.0);
        }
    }
    EXPECT_TRUE(found);
    EXPECT_EQ(dse_table(rows).rows.size(), rows.size());
}

TEST(Oracle, MismatchIsReported) {
    SparseVector expected(5, {{1, 2.0}, {3, 4.0}});
    SparseVector got(5, {{1, 2.0}, {3, 4.5}});
    try {
        check_against_oracle(expected, got, 1e-12);
        FAIL() << "expected OracleMismatch";
    } catch (const OracleMismatch& e) {
        EXPECT_EQ(e.row(), 3u);
        EXPECT_EQ(e.expected(), 4.0);
        EXPECT_EQ(e.got(), 4.5);
    }
    EXPECT_THROW(check_against_oracle(expected, SparseVector(4), 1e-12), DimensionError);
    EXPECT_NO_THROW(check_against_oracle(expected, expected, 0.0));
}
