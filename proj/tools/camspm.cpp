// camspm: command-line front end for the CAM-based SpMSpV accelerator model.
//
//   camspm info     <matrix.mtx|dir>... [--generate RxC:D:S]...
//   camspm run      <matrix.mtx|dir>... [--vector v.mtx] [--repetitions N]
//   camspm bench    <matrix.mtx|dir>... [--generate RxC:D:S]...
//   camspm dse      [--bw-start B --bw-stop B --bw-step B | --bandwidths B,B,...]
//   camspm defaults
//
// Exit status: 0 success, 2 usage/configuration error, 3 parse error,
// 4 dimension error, 5 oracle mismatch, 1 anything else.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "camspm/errors.hpp"
#include "camspm/harness.hpp"
#include "camspm/matrix_market.hpp"

namespace {

enum ExitCode : int {
    kOk = 0,
    kOther = 1,
    kUsage = 2,
    kParse = 3,
    kDimension = 4,
    kOracle = 5,
};

struct ModelFlags {
    std::optional<unsigned> k;
    std::optional<std::size_t> h;
    std::optional<unsigned> w;
    std::optional<unsigned> value_bits;
    std::optional<double> clock_hz;
    std::optional<double> bandwidth;
    std::optional<unsigned> pipeline_depth;
    std::optional<std::string> energy_config;
    bool fp32 = false;
};

struct OutputFlags {
    std::string format = "csv";
    std::string out;
};

struct SourceFlags {
    std::vector<std::string> paths;
    std::vector<std::string> generate;
    bool real_values = false;
};

void add_model_flags(CLI::App* cmd, ModelFlags& f) {
    // --h is the array height, so help is spelled out in full.
    cmd->set_help_flag("--help", "Print this help message and exit");
    cmd->add_option("--k", f.k, "Acceleration modules (default 15, or derived from --bandwidth)");
    cmd->add_option("--h", f.h, "CAM/RAM rows per module");
    cmd->add_option("--w", f.w, "CAM index width in bits");
    cmd->add_option("--value-bits", f.value_bits, "Value word length for traffic and area models");
    cmd->add_option("--clock-hz", f.clock_hz, "Clock frequency");
    cmd->add_option("--bandwidth", f.bandwidth, "Memory bandwidth, bytes/s");
    cmd->add_option("--pipeline-depth", f.pipeline_depth, "Pipeline fill latency in cycles");
    cmd->add_option("--energy-config", f.energy_config, "key=value file with energy/technology constants")
        ->check(CLI::ExistingFile);
    cmd->add_flag("--fp32", f.fp32, "Round the datapath to binary32");
}

void add_output_flags(CLI::App* cmd, OutputFlags& f) {
    cmd->add_option("--format", f.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", f.out, "Write the report here instead of stdout");
}

void add_source_flags(CLI::App* cmd, SourceFlags& f) {
    cmd->add_option("matrices", f.paths, "Matrix Market files or directories of *.mtx");
    cmd->add_option("--generate", f.generate, "Random matrix ROWSxCOLS:DENSITY:SEED (repeatable)");
    cmd->add_flag("--real-values", f.real_values, "Generated values uniform on [-1,1) instead of small integers");
}

camspm::ModelSettings resolve_settings(const ModelFlags& f, std::size_t default_h) {
    camspm::ModelSettings s;
    s.accel.h = default_h;
    if (f.energy_config) {
        camspm::load_settings_file(*f.energy_config, s);
    }
    if (f.h) s.accel.h = *f.h;
    if (f.w) s.accel.w = *f.w;
    if (f.value_bits) s.accel.value_bits = *f.value_bits;
    if (f.clock_hz) s.accel.clock_hz = *f.clock_hz;
    if (f.pipeline_depth) s.accel.pipeline_depth = *f.pipeline_depth;
    if (f.fp32) s.accel.fp32_datapath = true;
    if (f.bandwidth) {
        s.accel.memory_bw_bytes_per_s = *f.bandwidth;
        if (!f.k) {
            s.accel.k = camspm::modules_from_bandwidth(*f.bandwidth, s.accel.clock_hz, s.accel.value_bits, s.accel.w);
        }
    }
    if (f.k) s.accel.k = *f.k;
    return s;
}

std::vector<camspm::MatrixSource> resolve_sources(const SourceFlags& f) {
    std::vector<std::filesystem::path> paths(f.paths.begin(), f.paths.end());
    auto sources = camspm::expand_sources(paths);
    const auto dist = f.real_values ? camspm::ValueDistribution::Uniform : camspm::ValueDistribution::Integer;
    for (const auto& g : f.generate) {
        sources.push_back(camspm::MatrixSource::generated(camspm::parse_generator_spec(g, dist)));
    }
    if (sources.empty()) {
        throw camspm::ConfigError("no matrices given (pass files, directories or --generate)");
    }
    return sources;
}

camspm::ReportFormat parse_format(const std::string& f) {
    return f == "json" ? camspm::ReportFormat::Json : camspm::ReportFormat::Csv;
}

template <typename Write>
void emit(const OutputFlags& out, Write&& write) {
    if (out.out.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream file(out.out);
    if (!file) {
        throw camspm::ConfigError("cannot write " + out.out);
    }
    write(file);
}

std::vector<std::pair<std::string, std::string>> report_config(const camspm::ModelSettings& s,
                                                               std::optional<std::uint64_t> seed = {},
                                                               unsigned repetitions = 0) {
    auto kv = camspm::settings_key_values(s);
    if (seed) {
        kv.emplace_back("seed", std::to_string(*seed));
        kv.emplace_back("repetitions", std::to_string(repetitions));
    }
    return kv;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Functional and analytical model of a CAM-based sparse matrix accelerator"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "Print this help message and exit");

    ModelFlags model;
    OutputFlags output;
    SourceFlags sources;
    std::uint64_t seed = 1;
    unsigned repetitions = 1;
    unsigned jobs = 1;
    std::string vector_file;
    std::string result_out;

    auto* info = app.add_subcommand("info", "Summarize matrices: shape, nnz, row statistics, required index width");
    add_source_flags(info, sources);
    add_output_flags(info, output);

    auto* run = app.add_subcommand("run", "Simulate SpMSpV per matrix and repetition, checked against the oracle");
    auto* bench = app.add_subcommand("bench", "Run a matrix suite and summarize performance and efficiency");
    for (auto* cmd : {run, bench}) {
        add_source_flags(cmd, sources);
        add_model_flags(cmd, model);
        add_output_flags(cmd, output);
        cmd->add_option("--seed", seed, "Seed for picking the multiplicand row (repetition r uses seed+r)");
        cmd->add_option("--repetitions", repetitions, "Repetitions per matrix")->check(CLI::PositiveNumber);
        cmd->add_option("--jobs", jobs, "Concurrent simulations")->check(CLI::PositiveNumber);
        cmd->add_option("--vector", vector_file, "Multiplicand vector (1xN or Nx1 Matrix Market)")
            ->check(CLI::ExistingFile);
    }
    run->add_option("--result-out", result_out, "Write C of the first run as Matrix Market (n_rows x 1)");

    double bw_start = 10e9;
    double bw_stop = 1000e9;
    double bw_step = 10e9;
    std::vector<double> bandwidths;
    auto* dse = app.add_subcommand("dse", "Bandwidth sweep: module count, peak performance, CMOS/resistive area");
    add_model_flags(dse, model);
    add_output_flags(dse, output);
    dse->add_option("--bw-start", bw_start, "First bandwidth, bytes/s");
    dse->add_option("--bw-stop", bw_stop, "Last bandwidth, bytes/s");
    dse->add_option("--bw-step", bw_step, "Bandwidth step, bytes/s");
    dse->add_option("--bandwidths", bandwidths, "Explicit bandwidth list, bytes/s")->delimiter(',');

    auto* defaults = app.add_subcommand("defaults", "Print every model constant as key=value");
    add_model_flags(defaults, model);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*info) {
            std::vector<camspm::MatrixInfo> infos;
            for (const auto& src : resolve_sources(sources)) {
                infos.push_back(camspm::cmd_info(src));
            }
            const camspm::Table tables[] = {camspm::info_table(infos)};
            emit(output, [&](std::ostream& os) { camspm::write_report(os, parse_format(output.format), {}, tables); });
        } else if (*run || *bench) {
            camspm::ExperimentSpec spec;
            spec.matrices = resolve_sources(sources);
            spec.settings = resolve_settings(model, camspm::AcceleratorConfig{}.h);
            spec.seed = seed;
            spec.repetitions = repetitions;
            spec.jobs = jobs;
            if (!vector_file.empty()) {
                spec.vector_file = vector_file;
            }
            const auto config = report_config(spec.settings, seed, repetitions);
            if (*run) {
                const auto rows = camspm::cmd_run(spec);
                const camspm::Table tables[] = {camspm::run_table(rows)};
                emit(output, [&](std::ostream& os) {
                    camspm::write_report(os, parse_format(output.format), config, tables);
                });
                if (!result_out.empty() && !rows.empty()) {
                    std::ofstream rf(result_out);
                    const auto& c = rows.front().result;
                    camspm::CooMatrix col{c.length(), 1, {}};
                    for (const auto& e : c.entries()) {
                        col.entries.push_back({e.index, 0, e.value});
                    }
                    camspm::write_matrix_market(rf, col);
                }
            } else {
                const auto report = camspm::cmd_bench(spec);
                const camspm::Table tables[] = {camspm::run_table(report.rows), camspm::summary_table(report.summary),
                                                camspm::baseline_table()};
                emit(output, [&](std::ostream& os) {
                    camspm::write_report(os, parse_format(output.format), config, tables);
                });
            }
        } else if (*dse) {
            const auto settings = resolve_settings(model, std::size_t{1} << 20);
            if (bandwidths.empty()) {
                bandwidths = camspm::bandwidth_range(bw_start, bw_stop, bw_step);
            }
            const auto rows = camspm::cmd_dse(bandwidths, settings);
            const camspm::Table tables[] = {camspm::dse_table(rows)};
            emit(output, [&](std::ostream& os) {
                camspm::write_report(os, parse_format(output.format), report_config(settings), tables);
            });
        } else if (*defaults) {
            for (const auto& [k, v] : camspm::settings_key_values(resolve_settings(model, camspm::AcceleratorConfig{}.h))) {
                std::cout << k << '=' << v << '\n';
            }
        }
    } catch (const camspm::ParseError& e) {
        std::cerr << "camspm: parse error: " << e.what() << '\n';
        return kParse;
    } catch (const camspm::DimensionError& e) {
        std::cerr << "camspm: dimension error: " << e.what() << '\n';
        return kDimension;
    } catch (const camspm::OracleMismatch& e) {
        std::cerr << "camspm: " << e.what() << '\n';
        return kOracle;
    } catch (const camspm::ConfigError& e) {
        std::cerr << "camspm: configuration error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "camspm: " << e.what() << '\n';
        return kOther;
    }
    return kOk;
}
