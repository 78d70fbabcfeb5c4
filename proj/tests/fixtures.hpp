#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "mstsf/graph.hpp"

namespace mstsf::testing {

// Figure graphs use 1-based labels in print; shift by one at this boundary.
inline WeightedEdge one_based(NodeId u, NodeId v, double w) { return {u - 1, v - 1, w}; }

/// Three-node undirected triangle, unit weights (labels 1..3).
inline WeightedGraph triangle_graph() {
    const std::vector<WeightedEdge> edges{one_based(1, 2, 1), one_based(1, 3, 1), one_based(2, 3, 1)};
    return build_graph(3, edges);
}

/// Four-node cut example (labels 0..3). The path 0-1-2-3 has unit weights and the
/// chord {1,3} is heavier, so {2,3} is the candidate edge of the cut ({0,1,2},{3})
/// and the MST {{0,1},{1,2},{2,3}} has weight 3.
inline WeightedGraph cut_example_graph() {
    const std::vector<WeightedEdge> edges{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {1, 3, 2}};
    return build_graph(4, edges);
}

/// Six nodes, nine edges (labels 1..6). Weights are chosen to reproduce the
/// published processing order, the {1,2}/{2,3} tie and a tree weight of 22.
inline WeightedGraph kruskal_example_graph() {
    const std::vector<WeightedEdge> edges{
        one_based(1, 2, 3),  one_based(1, 3, 12), one_based(2, 3, 3),  one_based(2, 4, 14), one_based(2, 5, 13),
        one_based(3, 5, 11), one_based(4, 5, 4),  one_based(4, 6, 5),  one_based(5, 6, 1),
    };
    return build_graph(6, edges);
}

inline std::vector<Edge> kruskal_example_tree() {
    return {Edge(4, 5), Edge(1, 2), Edge(0, 1), Edge(3, 4), Edge(2, 4)};
}

/// Random connected graph: a random spanning tree plus each other pair with probability p.
/// Integer weights in [1, max_weight]; with distinct = true, a permutation of 1..M.
inline WeightedGraph random_connected_graph(std::mt19937_64& rng, std::size_t n, double p, int max_weight,
                                            bool distinct = false) {
    std::vector<std::pair<NodeId, NodeId>> pairs;
    std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
    for (NodeId v = 1; v < n; ++v) {
        const auto u = static_cast<NodeId>(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng));
        pairs.emplace_back(u, v);
        used[u][v] = used[v][u] = true;
    }
    std::bernoulli_distribution coin(p);
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            if (!used[u][v] && coin(rng)) pairs.emplace_back(u, v);
        }
    }
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::vector<double> weights(pairs.size());
    if (distinct) {
        std::iota(weights.begin(), weights.end(), 1.0);
        std::shuffle(weights.begin(), weights.end(), rng);
    } else {
        std::uniform_int_distribution<int> w(1, max_weight);
        for (double& x : weights) x = w(rng);
    }
    std::vector<WeightedEdge> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) edges.push_back({pairs[k].first, pairs[k].second, weights[k]});
    return build_graph(n, edges);
}

/// Components of `edges` on n nodes by repeated relabelling (no union-find).
inline std::vector<std::size_t> naive_components(std::size_t n, const std::vector<Edge>& edges) {
    std::vector<std::size_t> label(n);
    std::iota(label.begin(), label.end(), std::size_t{0});
    for (const Edge& e : edges) {
        const std::size_t from = label[e.v], to = label[e.u];
        if (from == to) continue;
        for (auto& l : label) {
            if (l == from) l = to;
        }
    }
    return label;
}

}  // namespace mstsf::testing
