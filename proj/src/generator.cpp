#include "mstsf/generator.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace mstsf {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
    // Lemire's multiply-shift with rejection
    unsigned __int128 product = static_cast<unsigned __int128>(rng()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
        const std::uint64_t threshold = -bound % bound;
        while (low < threshold) {
            product = static_cast<unsigned __int128>(rng()) * bound;
            low = static_cast<std::uint64_t>(product);
        }
    }
    return static_cast<std::uint64_t>(product >> 64);
}

void validate(const GeneratorParams& params) {
    if (params.m < 1) throw std::invalid_argument("m must be at least 1");
    if (params.n_nodes <= params.m + 1) {
        throw std::invalid_argument("need more than m + 1 nodes (m=" + std::to_string(params.m) +
                                    ", nodes=" + std::to_string(params.n_nodes) + ")");
    }
}

std::size_t expected_edge_count(const GeneratorParams& params) {
    validate(params);
    const std::size_t m = params.m;
    return m * (params.n_nodes - m) + m * (m - 1) / 2;
}

WeightedGraph generate_preferential_attachment(const GeneratorParams& params) {
    validate(params);
    const std::size_t n = params.n_nodes;
    const std::size_t m = params.m;
    Rng rng(params.seed);

    std::vector<WeightedEdge> edges;
    edges.reserve(expected_edge_count(params));
    std::vector<NodeId> endpoints;
    endpoints.reserve(2 * edges.capacity());

    for (NodeId i = 0; i <= m; ++i) {
        for (NodeId j = i + 1; j <= m; ++j) {
            edges.push_back({i, j, 1.0});
            endpoints.push_back(i);
            endpoints.push_back(j);
        }
    }

    std::vector<NodeId> targets;
    targets.reserve(m);
    for (auto t = static_cast<NodeId>(m + 1); t < n; ++t) {
        targets.clear();
        const std::size_t pool = endpoints.size();
        while (targets.size() < m) {
            const NodeId pick = endpoints[uniform_below(rng, pool)];
            if (std::find(targets.begin(), targets.end(), pick) == targets.end()) targets.push_back(pick);
        }
        for (NodeId target : targets) {
            edges.push_back({target, t, 1.0});
            endpoints.push_back(target);
            endpoints.push_back(t);
        }
    }
    return WeightedGraph(n, edges);
}

std::string_view to_string(Disorder d) noexcept {
    switch (d) {
        case Disorder::None: return "none";
        case Disorder::Type1: return "type1";
        case Disorder::Type2: return "type2";
    }
    return "none";
}

std::optional<Disorder> parse_disorder(std::string_view name) noexcept {
    if (name == "none") return Disorder::None;
    if (name == "type1") return Disorder::Type1;
    if (name == "type2") return Disorder::Type2;
    return std::nullopt;
}

WeightedGraph assign_disorder(const WeightedGraph& g, Disorder d) {
    std::vector<double> weights(g.num_edges(), 1.0);
    if (d != Disorder::None) {
        for (std::size_t k = 0; k < g.num_edges(); ++k) {
            const Edge& e = g.edge(k);
            const double product = static_cast<double>(g.degree(e.u)) * static_cast<double>(g.degree(e.v));
            weights[k] = d == Disorder::Type1 ? product : 1.0 / product;
        }
    }
    return g.with_weights(std::move(weights));
}

}  // namespace mstsf
