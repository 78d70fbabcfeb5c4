#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mstsf/graph.hpp"
#include "mstsf/mst.hpp"

namespace mstsf {

enum class BinKind { Linear, Logarithmic };

/// Bin grid anchored at `origin`. Bin i covers [lower(i), lower(i+1)):
/// linear lower(i) = origin + i * width, logarithmic lower(i) = origin * ratio^i.
/// The grid extends in both directions, so any sample (positive, for log bins) has a bin.
struct Binning {
    BinKind kind = BinKind::Linear;
    double step = 1.0;  // width (linear) or ratio (logarithmic)
    double origin = 0.0;

    static Binning linear(double width, double origin = 0.0);
    static Binning logarithmic(double ratio, double origin = 1.0);
    /// Width-1 bins centered on the integers.
    static Binning integer() { return linear(1.0, -0.5); }

    double lower(std::int64_t i) const;
    double center(std::int64_t i) const;
    std::int64_t index_of(double x) const;

    friend bool operator==(const Binning&, const Binning&) = default;
};

struct Bin {
    double lower;
    double upper;
    std::uint64_t count;
    double density;  // count / (n_samples * width)
};

/// Counts over a fixed bin grid. Merging adds counts, so pooling is order-independent.
class Histogram {
public:
    explicit Histogram(Binning binning);

    void add(double x);
    void add_all(std::span<const double> xs);
    void merge(const Histogram& other);

    const Binning& binning() const noexcept { return binning_; }
    std::uint64_t n_samples() const noexcept { return n_samples_; }
    bool empty() const noexcept { return n_samples_ == 0; }

    /// Contiguous bins from the lowest to the highest occupied one, zero-count bins included.
    std::vector<Bin> bins() const;
    std::vector<double> centers() const;

    /// Samples falling in [a, b), where a and b are bin edges.
    std::uint64_t count_between(double a, double b) const;

private:
    Binning binning_;
    std::int64_t first_index_ = 0;
    std::vector<std::uint64_t> counts_;
    std::uint64_t n_samples_ = 0;
};

Histogram make_histogram(std::span<const double> xs, const Binning& binning);

Histogram degree_histogram(const WeightedGraph& g, const Binning& binning);
Histogram degree_histogram(std::size_t n_nodes, std::span<const Edge> tree_edges, const Binning& binning);

/// Weights of the tree's edges taken from g; throws std::invalid_argument if the tree fails verification.
Histogram weight_histogram(const SpanningTree& t, const WeightedGraph& g, const Binning& binning);

struct FitRange {
    double x_min;
    double x_max;
};

struct FitResult {
    double exponent = 0.0;
    double intercept = 0.0;
    FitRange fit_range{0.0, 0.0};
    double r_squared = 0.0;
    std::size_t points = 0;
};

class FitError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

/// Ordinary least squares y = slope * x + intercept. r_squared is 1 when y is constant.
LineFit least_squares(std::span<const double> xs, std::span<const double> ys);

enum class FitTarget {
    Density,  // log density against log x; exponent = -slope
    Ccdf,     // log P(X >= bin lower) against log x; exponent = 1 - slope
};

/// Power-law exponent gamma of p(x) ~ x^-gamma from occupied bins whose centers lie in
/// the range. Needs at least three occupied bins; throws FitError otherwise.
FitResult fit_tail_exponent(const Histogram& h, FitRange range, FitTarget target = FitTarget::Ccdf);

/// Exponential decay rate lambda of p(x) ~ exp(-lambda x): log density against x.
FitResult fit_exponential(const Histogram& h, FitRange range);

/// Full support of the occupied bins (smallest to largest occupied center).
FitRange occupied_range(const Histogram& h);

/// omega_T / omega_G; throws std::domain_error when omega_G is zero.
double mst_efficiency(const SpanningTree& t, const WeightedGraph& g);

using Metadata = std::vector<std::pair<std::string, std::string>>;

/// `# key=value` comment lines, then `bin_lower,bin_upper,count,density`.
void write_histogram_csv(std::ostream& out, const Histogram& h, const Metadata& meta);

struct CsvHistogram {
    std::map<std::string, std::string> meta;
    std::vector<Bin> bins;
};

CsvHistogram read_histogram_csv(std::istream& in);

}  // namespace mstsf
