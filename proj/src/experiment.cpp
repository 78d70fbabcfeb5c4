#include "mstsf/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "mstsf/mst.hpp"
#include "mstsf/text.hpp"

namespace mstsf {

HistogramBinnings HistogramBinnings::defaults(Disorder d) {
    HistogramBinnings b;
    if (d == Disorder::Type2) b.weight = Binning::linear(0.005, 0.0);
    return b;
}

void validate(const ExperimentConfig& cfg) {
    if (cfg.sizes.empty()) throw std::invalid_argument("at least one size is required");
    if (!std::is_sorted(cfg.sizes.begin(), cfg.sizes.end()) ||
        std::adjacent_find(cfg.sizes.begin(), cfg.sizes.end()) != cfg.sizes.end()) {
        throw std::invalid_argument("sizes must be strictly ascending");
    }
    if (cfg.realizations < 1) throw std::invalid_argument("realizations must be at least 1");
    validate(GeneratorParams{cfg.sizes.front(), cfg.m, 0});
}

SingleRun run_single(std::size_t n, std::size_t m, Disorder disorder, std::uint64_t seed) {
    return run_single(n, m, disorder, seed, HistogramBinnings::defaults(disorder));
}

SingleRun run_single(std::size_t n, std::size_t m, Disorder disorder, std::uint64_t seed,
                     const HistogramBinnings& binnings) {
    try {
        const WeightedGraph g = assign_disorder(generate_preferential_attachment({n, m, seed}), disorder);
        const SpanningTree t = kruskal(g);
        if (const auto check = verify_spanning_tree(g, t); !check) {
            throw std::logic_error(std::string("kruskal produced an invalid tree: ") + reason_code(check.defect));
        }
        SingleRun run;
        run.n = n;
        run.seed = seed;
        run.degree = degree_histogram(n, t.edges, binnings.degree);
        run.degree_log = degree_histogram(n, t.edges, binnings.degree_log);
        run.weight = weight_histogram(t, g, binnings.weight);
        run.weight_log = weight_histogram(t, g, binnings.weight_log);
        run.alpha = mst_efficiency(t, g);
        const auto degrees = tree_degrees(n, t.edges);
        run.max_tree_degree = *std::max_element(degrees.begin(), degrees.end());
        return run;
    } catch (const std::exception& e) {
        throw RealizationError(n, seed, e.what());
    }
}

EnsembleResult run_ensemble(const ExperimentConfig& cfg) {
    return run_ensemble(cfg, [](std::size_t n, std::size_t m, Disorder d, std::uint64_t seed,
                                const HistogramBinnings& b) { return run_single(n, m, d, seed, b); });
}

EnsembleResult run_ensemble(const ExperimentConfig& cfg, const RealizationRunner& runner) {
    validate(cfg);
    const auto start = std::chrono::steady_clock::now();

    EnsembleResult result;
    result.config = cfg;
    result.binnings = HistogramBinnings::defaults(cfg.disorder);

    const std::size_t total = cfg.sizes.size() * cfg.realizations;
    result.runs_attempted = total;
    std::vector<std::optional<SingleRun>> runs(total);
    std::vector<std::string> errors(total);

    auto task = [&](std::size_t index) {
        const std::size_t n = cfg.sizes[index / cfg.realizations];
        const std::uint64_t seed = cfg.base_seed + index % cfg.realizations;
        try {
            runs[index] = runner(n, cfg.m, cfg.disorder, seed, result.binnings);
        } catch (const std::exception& e) {
            errors[index] = e.what();
        }
    };

    std::size_t workers = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, total);
    if (workers <= 1) {
        for (std::size_t i = 0; i < total; ++i) task(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < total; i = next++) task(i);
            });
        }
    }

    // aggregate in task order so the result does not depend on scheduling
    for (std::size_t s = 0; s < cfg.sizes.size(); ++s) {
        SizeSummary summary;
        summary.n = cfg.sizes[s];
        summary.degree = Histogram(result.binnings.degree);
        summary.degree_log = Histogram(result.binnings.degree_log);
        summary.weight = Histogram(result.binnings.weight);
        summary.weight_log = Histogram(result.binnings.weight_log);
        for (std::size_t r = 0; r < cfg.realizations; ++r) {
            const std::size_t index = s * cfg.realizations + r;
            if (!runs[index]) {
                result.failures.push_back({summary.n, cfg.base_seed + r, errors[index]});
                continue;
            }
            const SingleRun& run = *runs[index];
            summary.degree.merge(run.degree);
            summary.degree_log.merge(run.degree_log);
            summary.weight.merge(run.weight);
            summary.weight_log.merge(run.weight_log);
            summary.alphas.push_back(run.alpha);
            summary.max_degrees.push_back(run.max_tree_degree);
        }
        if (!summary.alphas.empty()) {
            double sum = 0.0;
            for (double a : summary.alphas) sum += a;
            summary.mean_alpha = sum / static_cast<double>(summary.alphas.size());
            if (summary.alphas.size() > 1) {
                double sq = 0.0;
                for (double a : summary.alphas) sq += (a - summary.mean_alpha) * (a - summary.mean_alpha);
                summary.std_alpha = std::sqrt(sq / static_cast<double>(summary.alphas.size() - 1));
            }
        }
        result.sizes.push_back(std::move(summary));
    }

    const std::size_t succeeded = total - result.failures.size();
    const bool size_empty = std::any_of(result.sizes.begin(), result.sizes.end(),
                                        [](const SizeSummary& s) { return s.alphas.empty(); });
    if (2 * succeeded < total || size_empty) {
        std::string seeds;
        for (const auto& f : result.failures) {
            seeds += (seeds.empty() ? "" : ", ") + std::to_string(f.n) + ":" + std::to_string(f.seed);
        }
        throw EnsembleError(std::to_string(result.failures.size()) + " of " + std::to_string(total) +
                                " realizations failed (n:seed " + seeds + ")",
                            result.failures);
    }

    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

double efficiency_slope(const std::vector<EfficiencyRow>& rows, std::size_t min_n) {
    std::vector<double> xs, ys;
    for (const auto& row : rows) {
        if (row.n < min_n) continue;
        xs.push_back(std::log(static_cast<double>(row.n)));
        ys.push_back(std::log(row.mean_alpha));
    }
    return least_squares(xs, ys).slope;
}

EfficiencyTable efficiency_scaling(const EnsembleResult& result) {
    if (result.sizes.size() < 3) throw std::invalid_argument("efficiency scaling needs at least three sizes");
    EfficiencyTable table;
    for (const auto& s : result.sizes) table.rows.push_back({s.n, s.mean_alpha, s.std_alpha, s.alphas.size()});
    table.loglog_slope = efficiency_slope(table.rows);
    return table;
}

EfficiencyTable efficiency_scaling(const ExperimentConfig& cfg) {
    if (cfg.sizes.size() < 3) throw std::invalid_argument("efficiency scaling needs at least three sizes");
    return efficiency_scaling(run_ensemble(cfg));
}

namespace {

std::string describe(const Binning& b) {
    return std::string(b.kind == BinKind::Linear ? "linear width=" : "log ratio=") + format_double(b.step) +
           " origin=" + format_double(b.origin);
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

void write_csv(const std::filesystem::path& path, const Histogram& h, const EnsembleResult& r, const SizeSummary& s,
               const char* quantity) {
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot write " + path.string());
    const Metadata meta{
        {"quantity", quantity},
        {"n", std::to_string(s.n)},
        {"m", std::to_string(r.config.m)},
        {"disorder", std::string(to_string(r.config.disorder))},
        {"realizations", std::to_string(s.alphas.size())},
        {"seeds", std::to_string(r.config.base_seed) + ".." +
                      std::to_string(r.config.base_seed + r.config.realizations - 1)},
        {"binning", describe(h.binning())},
    };
    write_histogram_csv(out, h, meta);
    if (!out) throw std::ios_base::failure("write failed: " + path.string());
}

}  // namespace

void write_results(const EnsembleResult& result) {
    const auto& cfg = result.config;
    const std::filesystem::path dir = cfg.output_dir;
    std::filesystem::create_directories(dir);
    const std::string type(to_string(cfg.disorder));
    const SizeSummary& largest = result.sizes.back();

    write_csv(dir / ("degree_" + type + ".csv"), largest.degree, result, largest, "mst_degree");
    write_csv(dir / ("degree_" + type + "_log.csv"), largest.degree_log, result, largest, "mst_degree");
    write_csv(dir / ("weight_" + type + ".csv"), largest.weight, result, largest, "mst_weight");
    write_csv(dir / ("weight_" + type + "_log.csv"), largest.weight_log, result, largest, "mst_weight");

    {
        const auto path = dir / ("efficiency_" + type + ".csv");
        std::ofstream out(path);
        if (!out) throw std::ios_base::failure("cannot write " + path.string());
        out << "# m=" << cfg.m << "\n# disorder=" << type << '\n';
        out << "n,mean_alpha,std_alpha,realizations\n";
        for (const auto& s : result.sizes) {
            out << s.n << ',' << format_double(s.mean_alpha) << ',' << format_double(s.std_alpha) << ','
                << s.alphas.size() << '\n';
        }
        if (!out) throw std::ios_base::failure("write failed: " + path.string());
    }

    nlohmann::ordered_json meta;
    meta["config"] = {
        {"sizes", cfg.sizes},
        {"m", cfg.m},
        {"disorder", type},
        {"realizations", cfg.realizations},
        {"base_seed", cfg.base_seed},
        {"threads", cfg.threads},
    };
    meta["seeds"] = {{"first", cfg.base_seed}, {"last", cfg.base_seed + cfg.realizations - 1},
                     {"rule", "seed = base_seed + realization index, same seeds for every size"}};
    meta["rng"] = std::string(kRngName);
    meta["generator"] = {
        {"model", "preferential attachment"},
        {"initial_graph", "complete graph on m+1 nodes"},
        {"repeated_targets", "redrawn"},
        {"disorder_degrees", "final degrees in G"},
    };
    meta["mst"] = {{"algorithm", "kruskal"}, {"tie_break", "weight, then (u, v)"}};
    meta["binning"] = {
        {"degree", describe(result.binnings.degree)},
        {"degree_log", describe(result.binnings.degree_log)},
        {"weight", describe(result.binnings.weight)},
        {"weight_log", describe(result.binnings.weight_log)},
        {"histogram_size", largest.n},
    };
    auto failures = nlohmann::ordered_json::array();
    for (const auto& f : result.failures) failures.push_back({{"n", f.n}, {"seed", f.seed}, {"error", f.error}});
    meta["runs_attempted"] = result.runs_attempted;
    meta["failures"] = failures;
    meta["wall_seconds"] = result.wall_seconds;
    meta["timestamp"] = utc_timestamp();

    const auto path = dir / ("meta_" + type + ".json");
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot write " + path.string());
    out << meta.dump(2) << '\n';
}

void apply_setting(ExperimentPlan& plan, std::string_view key, std::string_view value, std::size_t line) {
    auto& cfg = plan.config;
    auto count = [&](std::string_view v) {
        const auto n = parse_number<std::size_t>(trim(v));
        if (!n) throw ConfigError(line, "`" + std::string(key) + "` expects a non-negative integer, got `" + std::string(v) + "`");
        return *n;
    };
    if (key == "sizes") {
        cfg.sizes.clear();
        std::size_t start = 0;
        while (start <= value.size()) {
            const auto comma = value.find(',', start);
            cfg.sizes.push_back(count(value.substr(start, comma - start)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    } else if (key == "m") {
        cfg.m = count(value);
    } else if (key == "disorder") {
        if (value == "both") {
            plan.disorders = {Disorder::Type1, Disorder::Type2};
        } else if (const auto d = parse_disorder(value)) {
            plan.disorders = {*d};
        } else {
            throw ConfigError(line, "unknown disorder `" + std::string(value) + "` (none|type1|type2|both)");
        }
    } else if (key == "realizations") {
        cfg.realizations = count(value);
    } else if (key == "seed" || key == "base_seed") {
        const auto s = parse_number<std::uint64_t>(value);
        if (!s) throw ConfigError(line, "`seed` expects an unsigned 64-bit integer");
        cfg.base_seed = *s;
    } else if (key == "out" || key == "output_dir") {
        if (value.empty()) throw ConfigError(line, "`out` must not be empty");
        cfg.output_dir = std::string(value);
    } else if (key == "threads") {
        cfg.threads = count(value);
    } else {
        throw ConfigError(line, "unknown key `" + std::string(key) + "`");
    }
}

ExperimentPlan parse_config(std::istream& in) {
    ExperimentPlan plan;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string_view text = raw;
        if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
        text = trim(text);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string_view::npos) throw ConfigError(line, "expected key=value");
        apply_setting(plan, trim(text.substr(0, eq)), trim(text.substr(eq + 1)), line);
    }
    try {
        ExperimentConfig probe = plan.config;
        validate(probe);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(line, e.what());
    }
    return plan;
}

}  // namespace mstsf
