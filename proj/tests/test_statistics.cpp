#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "mstsf/generator.hpp"
#include "mstsf/statistics.hpp"

using namespace mstsf;

namespace {

double mass(const Histogram& h) {
    double total = 0.0;
    for (const Bin& b : h.bins()) total += b.density * (b.upper - b.lower);
    return total;
}

double density_at(const Histogram& h, double x) {
    for (const Bin& b : h.bins()) {
        if (b.lower <= x && x < b.upper) return b.density;
    }
    return 0.0;
}

// Inverse-CDF draw from p(x) = (gamma - 1) x^-gamma on [1, inf).
std::vector<double> power_law_samples(std::mt19937_64& rng, double gamma, std::size_t n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> xs(n);
    for (double& x : xs) x = std::pow(1.0 - u(rng), -1.0 / (gamma - 1.0));
    return xs;
}

std::vector<double> exponential_samples(std::mt19937_64& rng, double rate, std::size_t n) {
    std::exponential_distribution<double> e(rate);
    std::vector<double> xs(n);
    for (double& x : xs) x = 1.0 + e(rng);
    return xs;
}

}  // namespace

TEST_CASE("binning edges and indices") {
    const auto lin = Binning::linear(0.5, 1.0);
    CHECK(lin.lower(0) == 1.0);
    CHECK(lin.lower(-2) == 0.0);
    CHECK(lin.index_of(1.0) == 0);
    CHECK(lin.index_of(1.49) == 0);
    CHECK(lin.index_of(1.5) == 1);
    CHECK(lin.index_of(0.2) == -2);

    const auto lg = Binning::logarithmic(2.0, 1.0);
    CHECK(lg.index_of(1.0) == 0);
    CHECK(lg.index_of(2.0) == 1);
    CHECK(lg.index_of(3.99) == 1);
    CHECK(lg.index_of(0.5) == -1);
    CHECK(lg.center(0) == doctest::Approx(std::sqrt(2.0)));
    CHECK_THROWS_AS(lg.index_of(0.0), std::invalid_argument);

    const auto ratio13 = Binning::logarithmic(1.3, 1.0);
    for (int i = -20; i <= 40; ++i) CHECK(ratio13.index_of(ratio13.lower(i)) == i);

    CHECK_THROWS_AS(Binning::linear(0.0), std::invalid_argument);
    CHECK_THROWS_AS(Binning::logarithmic(1.0), std::invalid_argument);
    CHECK_THROWS_AS(Binning::logarithmic(2.0, -1.0), std::invalid_argument);
}

TEST_CASE("degree histogram of a star and a path") {
    std::vector<WeightedEdge> star;
    for (NodeId leaf = 1; leaf < 5; ++leaf) star.push_back({0, leaf, 1});
    const auto hs = degree_histogram(build_graph(5, star), Binning::integer());
    CHECK(density_at(hs, 1) == doctest::Approx(4.0 / 5));
    CHECK(density_at(hs, 4) == doctest::Approx(1.0 / 5));
    CHECK(density_at(hs, 2) == 0.0);

    const std::size_t n = 12;
    std::vector<WeightedEdge> path;
    for (NodeId i = 0; i + 1 < n; ++i) path.push_back({i, i + 1, 1});
    const auto hp = degree_histogram(build_graph(n, path), Binning::integer());
    CHECK(density_at(hp, 1) == doctest::Approx(2.0 / n));
    CHECK(density_at(hp, 2) == doctest::Approx((n - 2.0) / n));
    CHECK(hp.n_samples() == n);

    CHECK_THROWS_AS(degree_histogram(build_graph(0, {}), Binning::integer()), std::invalid_argument);
}

TEST_CASE("log-binned degree density of a preferential-attachment graph peaks at k = m") {
    const auto g = generate_preferential_attachment({10000, 2, 3});
    const auto h = degree_histogram(g, Binning::logarithmic(1.3, 0.5));
    double best = -1.0, at = 0.0;
    for (const Bin& b : h.bins()) {
        if (b.density > best) {
            best = b.density;
            at = 0.5 * (b.lower + b.upper);
        }
    }
    CHECK(h.binning().index_of(at) == h.binning().index_of(2.0));

    // direct count: degree 2 is the most common degree
    std::vector<std::size_t> counts(g.num_nodes(), 0);
    for (NodeId i = 0; i < g.num_nodes(); ++i) ++counts[g.degree(i)];
    CHECK(std::max_element(counts.begin(), counts.end()) - counts.begin() == 2);
}

TEST_CASE("weight histograms") {
    SUBCASE("unit weights occupy one bin") {
        const auto g = assign_disorder(generate_preferential_attachment({200, 2, 1}), Disorder::None);
        const auto h = weight_histogram(kruskal(g), g, Binning::integer());
        REQUIRE(h.bins().size() == 1);
        CHECK(h.bins()[0].lower == 0.5);
        CHECK(h.bins()[0].count == 199);
    }
    SUBCASE("type2 weights are at most 1/4 when every degree is at least 2") {
        const auto g = assign_disorder(generate_preferential_attachment({2000, 2, 4}), Disorder::Type2);
        const auto t = kruskal(g);
        const auto h = weight_histogram(t, g, Binning::linear(0.005, 0.0));
        CHECK(h.bins().back().lower < 0.25);
        for (double w : g.weights()) CHECK(w <= 0.25);
    }
    SUBCASE("worked example tree") {
        const auto g = mstsf::testing::kruskal_example_graph();
        const auto h = weight_histogram(kruskal(g), g, Binning::integer());
        CHECK(h.n_samples() == 5);
        double sum = 0.0;
        for (const Bin& b : h.bins()) sum += static_cast<double>(b.count) * 0.5 * (b.lower + b.upper);
        CHECK(sum == 22.0);
    }
    SUBCASE("invalid tree") {
        const auto g = mstsf::testing::kruskal_example_graph();
        auto t = kruskal(g);
        t.edges.pop_back();
        CHECK_THROWS_AS(weight_histogram(t, g, Binning::integer()), std::invalid_argument);
    }
}

TEST_CASE("histograms are normalized for every binning") {
    std::mt19937_64 rng(8);
    const std::vector<Binning> binnings{Binning::integer(), Binning::linear(0.37, -3.0), Binning::logarithmic(1.3, 1.0),
                                        Binning::logarithmic(2.5, 0.01)};
    for (int trial = 0; trial < 20; ++trial) {
        const auto xs = power_law_samples(rng, 2.0 + 0.1 * trial, 1000 + 100 * trial);
        for (const auto& b : binnings) {
            const auto h = make_histogram(xs, b);
            CHECK(mass(h) == doctest::Approx(1.0).epsilon(1e-9));
            std::uint64_t total = 0;
            const auto bs = h.bins();
            for (std::size_t k = 0; k < bs.size(); ++k) {
                total += bs[k].count;
                if (k > 0) CHECK(bs[k].lower == bs[k - 1].upper);
            }
            CHECK(total == h.n_samples());
        }
    }
}

TEST_CASE("linear and log bins agree on mass over shared intervals") {
    std::mt19937_64 rng(21);
    auto xs = power_law_samples(rng, 2.5, 20000);
    for (double& x : xs) x = std::min(x, 1000.0);
    const auto lin = make_histogram(xs, Binning::linear(1.0, 0.0));
    const auto lg = make_histogram(xs, Binning::logarithmic(2.0, 1.0));
    const auto n = static_cast<double>(xs.size());
    for (double a : {1.0, 2.0, 8.0}) {
        for (double b : {16.0, 64.0, 1024.0}) {
            CHECK(static_cast<double>(lin.count_between(a, b)) / n ==
                  doctest::Approx(static_cast<double>(lg.count_between(a, b)) / n).epsilon(1e-9));
        }
    }
}

TEST_CASE("merging histograms adds counts in any order") {
    std::mt19937_64 rng(13);
    const auto b = Binning::logarithmic(1.3, 1.0);
    const auto x1 = power_law_samples(rng, 3.0, 500);
    const auto x2 = exponential_samples(rng, 0.5, 700);
    auto ab = make_histogram(x1, b);
    ab.merge(make_histogram(x2, b));
    auto ba = make_histogram(x2, b);
    ba.merge(make_histogram(x1, b));
    CHECK(ab.n_samples() == 1200);
    const auto p = ab.bins(), q = ba.bins();
    REQUIRE(p.size() == q.size());
    for (std::size_t k = 0; k < p.size(); ++k) CHECK(p[k].count == q[k].count);
    CHECK_THROWS_AS(ab.merge(Histogram(Binning::integer())), std::invalid_argument);
}

TEST_CASE("tail exponent of exact power-law samples") {
    std::mt19937_64 rng(31);
    const auto xs = power_law_samples(rng, 3.0, 1'000'000);
    const auto h = make_histogram(xs, Binning::logarithmic(1.3, 1.0));
    const auto ccdf = fit_tail_exponent(h, {1.0, 100.0}, FitTarget::Ccdf);
    CHECK(ccdf.exponent == doctest::Approx(3.0).epsilon(0.1 / 3.0));
    CHECK(ccdf.r_squared > 0.99);
    const auto dens = fit_tail_exponent(h, {1.0, 100.0}, FitTarget::Density);
    CHECK(dens.exponent == doctest::Approx(3.0).epsilon(0.1 / 3.0));
}

TEST_CASE("exponential samples fit better in lin-log than log-log") {
    std::mt19937_64 rng(32);
    const auto xs = exponential_samples(rng, 0.5, 200000);
    const auto h = make_histogram(xs, Binning::linear(0.5, 1.0));
    const auto range = FitRange{1.0, 20.0};
    const auto ll = fit_tail_exponent(h, range, FitTarget::Density);
    const auto le = fit_exponential(h, range);
    CHECK(le.r_squared > 0.99);
    CHECK(le.exponent == doctest::Approx(0.5).epsilon(0.05));
    CHECK(ll.r_squared < le.r_squared - 0.05);
}

TEST_CASE("flat histogram has exponent zero") {
    std::vector<double> xs;
    for (int rep = 0; rep < 10; ++rep)
        for (int v = 1; v <= 20; ++v) xs.push_back(v);
    const auto h = make_histogram(xs, Binning::integer());
    const auto fit = fit_tail_exponent(h, occupied_range(h), FitTarget::Density);
    CHECK(fit.exponent == doctest::Approx(0.0));
    CHECK(fit.r_squared == 1.0);
}

TEST_CASE("fit needs three occupied bins") {
    const std::vector<double> xs{1.0, 2.0, 2.0};
    const auto h = make_histogram(xs, Binning::integer());
    CHECK_THROWS_AS(fit_tail_exponent(h, {0.0, 10.0}), FitError);
    CHECK_THROWS_AS(fit_tail_exponent(h, {5.0, 1.0}), FitError);
}

TEST_CASE("fitted slope is invariant under rescaling the samples") {
    std::mt19937_64 rng(33);
    const auto xs = power_law_samples(rng, 2.5, 100000);
    const auto base = fit_tail_exponent(make_histogram(xs, Binning::logarithmic(1.3, 1.0)), {1.0, 200.0});
    for (double c : {0.001, 7.0, 1e4}) {
        std::vector<double> scaled(xs);
        for (double& x : scaled) x *= c;
        const auto fit = fit_tail_exponent(make_histogram(scaled, Binning::logarithmic(1.3, c)), {c, 200.0 * c});
        CHECK(fit.exponent == doctest::Approx(base.exponent).epsilon(1e-9));
        CHECK(fit.r_squared == doctest::Approx(base.r_squared).epsilon(1e-9));
    }
}

TEST_CASE("least squares") {
    const std::vector<double> x{0, 1, 2, 3}, y{1, 3, 5, 7};
    const auto fit = least_squares(x, y);
    CHECK(fit.slope == doctest::Approx(2.0));
    CHECK(fit.intercept == doctest::Approx(1.0));
    CHECK(fit.r_squared == doctest::Approx(1.0));
    CHECK_THROWS_AS(least_squares(std::vector<double>{1.0}, std::vector<double>{1.0}), FitError);
}

TEST_CASE("mst efficiency") {
    SUBCASE("a tree is its own MST") {
        const auto g = build_graph(4, std::vector<WeightedEdge>{{0, 1, 2}, {1, 2, 5}, {1, 3, 1}});
        CHECK(mst_efficiency(kruskal(g), g) == 1.0);
    }
    SUBCASE("unit triangle") {
        const auto g = mstsf::testing::triangle_graph();
        CHECK(mst_efficiency(kruskal(g), g) == doctest::Approx(2.0 / 3.0));
    }
    SUBCASE("complete graph") {
        for (NodeId n = 2; n <= 12; ++n) {
            std::vector<WeightedEdge> edges;
            for (NodeId u = 0; u < n; ++u)
                for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v, 1});
            const auto g = build_graph(n, edges);
            CHECK(mst_efficiency(kruskal(g), g) == doctest::Approx(2.0 / n));
        }
    }
    SUBCASE("zero graph weight") {
        const auto g = build_graph(2, std::vector<WeightedEdge>{{0, 1, 0}});
        CHECK_THROWS_AS(mst_efficiency(kruskal(g), g), std::domain_error);
    }
}

TEST_CASE("efficiency and MST edge set are invariant under positive weight scaling") {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = assign_disorder(generate_preferential_attachment({300, 2, static_cast<std::uint64_t>(trial)}),
                                       trial % 2 ? Disorder::Type1 : Disorder::Type2);
        const double c = std::uniform_real_distribution<double>(0.01, 100.0)(rng);
        std::vector<double> scaled = g.weights();
        for (double& w : scaled) w *= c;
        const auto gs = g.with_weights(scaled);
        const auto t = kruskal(g), ts = kruskal(gs);
        CHECK(t.edges == ts.edges);
        CHECK(mst_efficiency(ts, gs) == doctest::Approx(mst_efficiency(t, g)).epsilon(1e-9));
    }
}

TEST_CASE("histogram CSV round trip") {
    std::mt19937_64 rng(35);
    const auto h = make_histogram(power_law_samples(rng, 3.0, 1000), Binning::logarithmic(1.3, 1.0));
    std::stringstream buf;
    write_histogram_csv(buf, h, {{"n", "1000"}, {"disorder", "type1"}});
    const auto csv = read_histogram_csv(buf);
    CHECK(csv.meta.at("n") == "1000");
    CHECK(csv.meta.at("disorder") == "type1");
    const auto bs = h.bins();
    REQUIRE(csv.bins.size() == bs.size());
    for (std::size_t k = 0; k < bs.size(); ++k) {
        CHECK(csv.bins[k].lower == bs[k].lower);
        CHECK(csv.bins[k].count == bs[k].count);
        CHECK(csv.bins[k].density == bs[k].density);
    }

    std::stringstream bad("bin_lower,bin_upper,count,density\n1,2,x,0.5\n");
    CHECK_THROWS_AS(read_histogram_csv(bad), std::runtime_error);
}
