#include "mstsf/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "mstsf/text.hpp"

namespace mstsf {

Binning Binning::linear(double width, double origin) {
    if (!(width > 0.0) || !std::isfinite(width) || !std::isfinite(origin)) {
        throw std::invalid_argument("linear binning needs a positive finite width");
    }
    return {BinKind::Linear, width, origin};
}

Binning Binning::logarithmic(double ratio, double origin) {
    if (!(ratio > 1.0) || !std::isfinite(ratio)) throw std::invalid_argument("log binning needs a ratio > 1");
    if (!(origin > 0.0) || !std::isfinite(origin)) throw std::invalid_argument("log binning needs a positive origin");
    return {BinKind::Logarithmic, ratio, origin};
}

double Binning::lower(std::int64_t i) const {
    if (kind == BinKind::Linear) return origin + static_cast<double>(i) * step;
    return origin * std::pow(step, static_cast<double>(i));
}

double Binning::center(std::int64_t i) const {
    if (kind == BinKind::Linear) return origin + (static_cast<double>(i) + 0.5) * step;
    return std::sqrt(lower(i) * lower(i + 1));
}

std::int64_t Binning::index_of(double x) const {
    if (!std::isfinite(x)) throw std::invalid_argument("cannot bin a non-finite value");
    double raw;
    if (kind == BinKind::Linear) {
        raw = std::floor((x - origin) / step);
    } else {
        if (!(x > 0.0)) throw std::invalid_argument("log binning needs positive samples");
        raw = std::floor(std::log(x / origin) / std::log(step));
    }
    auto i = static_cast<std::int64_t>(raw);
    // floating error near an edge can land one bin off
    while (lower(i) > x) --i;
    while (lower(i + 1) <= x) ++i;
    return i;
}

Histogram::Histogram(Binning binning) : binning_(binning) {}

void Histogram::add(double x) {
    const std::int64_t i = binning_.index_of(x);
    if (counts_.empty()) {
        first_index_ = i;
        counts_.push_back(0);
    } else if (i < first_index_) {
        counts_.insert(counts_.begin(), static_cast<std::size_t>(first_index_ - i), 0);
        first_index_ = i;
    } else if (i >= first_index_ + static_cast<std::int64_t>(counts_.size())) {
        counts_.resize(static_cast<std::size_t>(i - first_index_ + 1), 0);
    }
    ++counts_[static_cast<std::size_t>(i - first_index_)];
    ++n_samples_;
}

void Histogram::add_all(std::span<const double> xs) {
    for (double x : xs) add(x);
}

void Histogram::merge(const Histogram& other) {
    if (!(other.binning_ == binning_)) throw std::invalid_argument("cannot merge histograms with different binning");
    if (other.counts_.empty()) return;
    if (counts_.empty()) {
        first_index_ = other.first_index_;
        counts_ = other.counts_;
        n_samples_ = other.n_samples_;
        return;
    }
    const std::int64_t lo = std::min(first_index_, other.first_index_);
    const std::int64_t hi = std::max(first_index_ + static_cast<std::int64_t>(counts_.size()),
                                     other.first_index_ + static_cast<std::int64_t>(other.counts_.size()));
    std::vector<std::uint64_t> merged(static_cast<std::size_t>(hi - lo), 0);
    for (std::size_t k = 0; k < counts_.size(); ++k) merged[static_cast<std::size_t>(first_index_ - lo) + k] += counts_[k];
    for (std::size_t k = 0; k < other.counts_.size(); ++k) {
        merged[static_cast<std::size_t>(other.first_index_ - lo) + k] += other.counts_[k];
    }
    counts_ = std::move(merged);
    first_index_ = lo;
    n_samples_ += other.n_samples_;
}

std::vector<Bin> Histogram::bins() const {
    std::vector<Bin> out;
    out.reserve(counts_.size());
    for (std::size_t k = 0; k < counts_.size(); ++k) {
        const std::int64_t i = first_index_ + static_cast<std::int64_t>(k);
        const double lo = binning_.lower(i);
        const double hi = binning_.lower(i + 1);
        const double density =
            n_samples_ == 0 ? 0.0 : static_cast<double>(counts_[k]) / (static_cast<double>(n_samples_) * (hi - lo));
        out.push_back({lo, hi, counts_[k], density});
    }
    return out;
}

std::vector<double> Histogram::centers() const {
    std::vector<double> out;
    out.reserve(counts_.size());
    for (std::size_t k = 0; k < counts_.size(); ++k) out.push_back(binning_.center(first_index_ + static_cast<std::int64_t>(k)));
    return out;
}

std::uint64_t Histogram::count_between(double a, double b) const {
    std::uint64_t total = 0;
    const auto bs = bins();
    for (const Bin& bin : bs) {
        // a bin belongs to [a, b) when its midpoint does; a and b are expected on bin edges
        const double mid = 0.5 * (bin.lower + bin.upper);
        if (mid >= a && mid < b) total += bin.count;
    }
    return total;
}

Histogram make_histogram(std::span<const double> xs, const Binning& binning) {
    Histogram h(binning);
    h.add_all(xs);
    return h;
}

Histogram degree_histogram(const WeightedGraph& g, const Binning& binning) {
    if (g.num_nodes() == 0) throw std::invalid_argument("degree histogram of an empty node set");
    Histogram h(binning);
    for (NodeId i = 0; i < g.num_nodes(); ++i) h.add(static_cast<double>(g.degree(i)));
    return h;
}

Histogram degree_histogram(std::size_t n_nodes, std::span<const Edge> tree_edges, const Binning& binning) {
    if (n_nodes == 0) throw std::invalid_argument("degree histogram of an empty node set");
    Histogram h(binning);
    for (std::size_t d : tree_degrees(n_nodes, tree_edges)) h.add(static_cast<double>(d));
    return h;
}

Histogram weight_histogram(const SpanningTree& t, const WeightedGraph& g, const Binning& binning) {
    if (const auto check = verify_spanning_tree(g, t); !check) {
        throw std::invalid_argument(std::string("weight histogram of an invalid tree: ") + reason_code(check.defect));
    }
    Histogram h(binning);
    for (const Edge& e : t.edges) h.add(g.weight(*g.find_edge(e.u, e.v)));
    return h;
}

LineFit least_squares(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2) throw FitError("least squares needs at least two points");
    const auto n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) throw FitError("least squares needs distinct x values");
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (syy == 0.0) {
        fit.r_squared = 1.0;
    } else {
        fit.r_squared = std::clamp((sxy * sxy) / (sxx * syy), 0.0, 1.0);
    }
    return fit;
}

namespace {

struct Points {
    std::vector<double> x;
    std::vector<double> y;
};

// Occupied bins whose center lies in the range, with y = density or CCDF at the bin's lower edge.
Points collect(const Histogram& h, FitRange range, FitTarget target) {
    if (!(range.x_min <= range.x_max)) throw FitError("empty fit range");
    const auto bs = h.bins();
    const auto cs = h.centers();
    const auto n = static_cast<double>(h.n_samples());
    Points p;
    std::uint64_t at_or_above = h.n_samples();
    for (std::size_t k = 0; k < bs.size(); ++k) {
        if (bs[k].count > 0 && cs[k] >= range.x_min && cs[k] <= range.x_max) {
            p.x.push_back(cs[k]);
            p.y.push_back(target == FitTarget::Density ? bs[k].density : static_cast<double>(at_or_above) / n);
        }
        at_or_above -= bs[k].count;
    }
    if (p.x.size() < 3) {
        throw FitError("need at least 3 occupied bins in [" + format_double(range.x_min) + ", " +
                       format_double(range.x_max) + "], found " + std::to_string(p.x.size()));
    }
    return p;
}

}  // namespace

FitResult fit_tail_exponent(const Histogram& h, FitRange range, FitTarget target) {
    Points p = collect(h, range, target);
    for (std::size_t i = 0; i < p.x.size(); ++i) {
        if (!(p.x[i] > 0.0)) throw FitError("log-log fit needs positive bin centers");
        p.x[i] = std::log(p.x[i]);
        p.y[i] = std::log(p.y[i]);
    }
    const LineFit line = least_squares(p.x, p.y);
    FitResult r;
    r.exponent = target == FitTarget::Density ? -line.slope : 1.0 - line.slope;
    r.intercept = line.intercept;
    r.fit_range = range;
    r.r_squared = line.r_squared;
    r.points = p.x.size();
    return r;
}

FitResult fit_exponential(const Histogram& h, FitRange range) {
    Points p = collect(h, range, FitTarget::Density);
    for (double& y : p.y) y = std::log(y);
    const LineFit line = least_squares(p.x, p.y);
    FitResult r;
    r.exponent = -line.slope;
    r.intercept = line.intercept;
    r.fit_range = range;
    r.r_squared = line.r_squared;
    r.points = p.x.size();
    return r;
}

FitRange occupied_range(const Histogram& h) {
    const auto bs = h.bins();
    const auto cs = h.centers();
    FitRange r{0.0, 0.0};
    bool any = false;
    for (std::size_t k = 0; k < bs.size(); ++k) {
        if (bs[k].count == 0) continue;
        if (!any) r.x_min = cs[k];
        r.x_max = cs[k];
        any = true;
    }
    if (!any) throw FitError("histogram is empty");
    return r;
}

double mst_efficiency(const SpanningTree& t, const WeightedGraph& g) {
    const double graph_weight = g.total_weight();
    if (graph_weight == 0.0) throw std::domain_error("graph weight is zero");
    return t.total_weight / graph_weight;
}

void write_histogram_csv(std::ostream& out, const Histogram& h, const Metadata& meta) {
    for (const auto& [key, value] : meta) out << "# " << key << '=' << value << '\n';
    out << "bin_lower,bin_upper,count,density\n";
    for (const Bin& b : h.bins()) {
        out << format_double(b.lower) << ',' << format_double(b.upper) << ',' << b.count << ','
            << format_double(b.density) << '\n';
    }
}

CsvHistogram read_histogram_csv(std::istream& in) {
    CsvHistogram out;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view text = trim(line);
        if (text.empty()) continue;
        if (text.front() == '#') {
            const std::string_view body = trim(text.substr(1));
            if (const auto eq = body.find('='); eq != std::string_view::npos) {
                out.meta.emplace(std::string(body.substr(0, eq)), std::string(body.substr(eq + 1)));
            }
            continue;
        }
        if (!header_seen) {
            if (text != "bin_lower,bin_upper,count,density") {
                throw std::runtime_error("line " + std::to_string(line_no) + ": unexpected CSV header");
            }
            header_seen = true;
            continue;
        }
        std::vector<std::string_view> fields;
        std::size_t start = 0;
        while (true) {
            const auto comma = text.find(',', start);
            fields.push_back(text.substr(start, comma - start));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        const auto lo = fields.size() == 4 ? parse_number<double>(fields[0]) : std::nullopt;
        const auto hi = fields.size() == 4 ? parse_number<double>(fields[1]) : std::nullopt;
        const auto count = fields.size() == 4 ? parse_number<std::uint64_t>(fields[2]) : std::nullopt;
        const auto density = fields.size() == 4 ? parse_number<double>(fields[3]) : std::nullopt;
        if (!lo || !hi || !count || !density) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": malformed histogram row");
        }
        out.bins.push_back({*lo, *hi, *count, *density});
    }
    if (!header_seen) throw std::runtime_error("missing CSV header");
    return out;
}

}  // namespace mstsf
