#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "mstsf/generator.hpp"
#include "mstsf/statistics.hpp"

namespace mstsf {

/// Bin grids shared by every realization of an ensemble so counts can be pooled.
struct HistogramBinnings {
    Binning degree = Binning::integer();
    Binning degree_log = Binning::logarithmic(1.3, 0.5);
    Binning weight = Binning::integer();
    Binning weight_log = Binning::logarithmic(1.3, 1.0);

    /// Integer weight bins for type1/none, width-0.005 bins for the reciprocal type2 weights.
    static HistogramBinnings defaults(Disorder d);
};

struct ExperimentConfig {
    std::vector<std::size_t> sizes{100, 316, 1000, 3162, 10000};
    std::size_t m = 2;
    Disorder disorder = Disorder::Type1;
    std::size_t realizations = 100;
    std::uint64_t base_seed = 1;
    std::filesystem::path output_dir = "results";
    std::size_t threads = 0;  // 0: hardware concurrency
};

/// Throws std::invalid_argument on an empty or unsorted size list, zero realizations,
/// or sizes the generator cannot build for this m.
void validate(const ExperimentConfig& cfg);

/// One realization: generate, weight, Kruskal, verify, measure.
struct SingleRun {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    Histogram degree{Binning::integer()};
    Histogram degree_log{Binning::integer()};
    Histogram weight{Binning::integer()};
    Histogram weight_log{Binning::integer()};
    double alpha = 0.0;
    std::size_t max_tree_degree = 0;
};

class RealizationError : public std::runtime_error {
public:
    RealizationError(std::size_t n, std::uint64_t seed, const std::string& what)
        : std::runtime_error("realization n=" + std::to_string(n) + " seed=" + std::to_string(seed) + ": " + what),
          n_(n), seed_(seed) {}
    std::size_t n() const noexcept { return n_; }
    std::uint64_t seed() const noexcept { return seed_; }

private:
    std::size_t n_;
    std::uint64_t seed_;
};

SingleRun run_single(std::size_t n, std::size_t m, Disorder disorder, std::uint64_t seed);
SingleRun run_single(std::size_t n, std::size_t m, Disorder disorder, std::uint64_t seed,
                     const HistogramBinnings& binnings);

struct SizeSummary {
    std::size_t n = 0;
    Histogram degree{Binning::integer()};
    Histogram degree_log{Binning::integer()};
    Histogram weight{Binning::integer()};
    Histogram weight_log{Binning::integer()};
    std::vector<double> alphas;            // in realization order, failures skipped
    std::vector<std::size_t> max_degrees;  // largest MST degree per realization
    double mean_alpha = 0.0;
    double std_alpha = 0.0;  // sample standard deviation
};

struct FailedRealization {
    std::size_t n;
    std::uint64_t seed;
    std::string error;
};

struct EnsembleResult {
    ExperimentConfig config;
    HistogramBinnings binnings;
    std::vector<SizeSummary> sizes;
    std::vector<FailedRealization> failures;
    std::size_t runs_attempted = 0;
    double wall_seconds = 0.0;
};

class EnsembleError : public std::runtime_error {
public:
    EnsembleError(const std::string& what, std::vector<FailedRealization> failures)
        : std::runtime_error(what), failures_(std::move(failures)) {}
    const std::vector<FailedRealization>& failures() const noexcept { return failures_; }

private:
    std::vector<FailedRealization> failures_;
};

using RealizationRunner = std::function<SingleRun(std::size_t n, std::size_t m, Disorder, std::uint64_t seed,
                                                  const HistogramBinnings&)>;

/// Runs every (size, realization) pair with seed base_seed + realization index, in
/// parallel, and pools the results in a schedule-independent order. Failed
/// realizations are listed; throws EnsembleError when fewer than half succeed.
EnsembleResult run_ensemble(const ExperimentConfig& cfg);
EnsembleResult run_ensemble(const ExperimentConfig& cfg, const RealizationRunner& runner);

struct EfficiencyRow {
    std::size_t n;
    double mean_alpha;
    double std_alpha;
    std::size_t realizations;
};

struct EfficiencyTable {
    std::vector<EfficiencyRow> rows;
    double loglog_slope = 0.0;  // least-squares slope of log(mean alpha) against log n
};

/// Least-squares slope of log(mean alpha) against log n over rows with n >= min_n.
double efficiency_slope(const std::vector<EfficiencyRow>& rows, std::size_t min_n = 0);

/// Needs at least three sizes.
EfficiencyTable efficiency_scaling(const EnsembleResult& result);
EfficiencyTable efficiency_scaling(const ExperimentConfig& cfg);

/// Writes degree_<type>.csv, degree_<type>_log.csv, weight_<type>.csv,
/// weight_<type>_log.csv (largest size), efficiency_<type>.csv and meta_<type>.json.
void write_results(const EnsembleResult& result);

/// Flat `key=value` config with `#` comments. Keys mirror the CLI flags: sizes
/// (comma-separated), m, disorder (none|type1|type2|both), realizations, seed, out, threads.
struct ExperimentPlan {
    ExperimentConfig config;
    std::vector<Disorder> disorders{Disorder::Type1, Disorder::Type2};
};

class ConfigError : public std::runtime_error {
public:
    ConfigError(std::size_t line, const std::string& what)
        : std::runtime_error("config line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

ExperimentPlan parse_config(std::istream& in);

/// Applies one key=value setting; line is used for error messages only.
void apply_setting(ExperimentPlan& plan, std::string_view key, std::string_view value, std::size_t line = 0);

}  // namespace mstsf
