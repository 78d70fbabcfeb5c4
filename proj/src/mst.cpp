#include "mstsf/mst.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <tuple>

#include "mstsf/union_find.hpp"

namespace mstsf {

bool weights_close(double a, double b, double rel_tol) noexcept {
    if (a == b) return true;
    return std::abs(a - b) <= rel_tol * std::max(std::abs(a), std::abs(b));
}

std::vector<std::size_t> kruskal_order(const WeightedGraph& g) {
    std::vector<std::size_t> order(g.num_edges());
    std::iota(order.begin(), order.end(), std::size_t{0});
    const auto& w = g.weights();
    const auto& e = g.edges();
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (w[a] != w[b]) return w[a] < w[b];
        return e[a] < e[b];
    });
    return order;
}

KruskalTrace kruskal_in_order(const WeightedGraph& g, std::span<const std::size_t> order) {
    const std::size_t n = g.num_nodes();
    if (order.size() != g.num_edges()) {
        throw std::invalid_argument("kruskal: processing order must cover every edge");
    }
    {
        std::vector<bool> seen(g.num_edges(), false);
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (order[i] >= g.num_edges() || seen[order[i]]) {
                throw std::invalid_argument("kruskal: processing order is not a permutation of the edges");
            }
            seen[order[i]] = true;
            if (i > 0 && g.weight(order[i]) < g.weight(order[i - 1])) {
                throw std::invalid_argument("kruskal: processing order is not sorted by weight");
            }
        }
    }

    KruskalTrace trace;
    trace.steps.reserve(order.size());
    trace.tree.edges.reserve(n > 0 ? n - 1 : 0);

    UnionFind forest(n);
    for (std::size_t k : order) {
        const Edge& e = g.edge(k);
        const auto ru = forest.find(e.u);
        const auto rv = forest.find(e.v);
        const bool accept = ru != rv;
        if (accept) {
            forest.unite(ru, rv);
            trace.tree.edges.push_back(e);
            trace.tree.total_weight += g.weight(k);
        }
        trace.steps.push_back({k, accept});
    }
    if (n > 0 && trace.tree.edges.size() != n - 1) {
        throw DisconnectedGraphError(forest.num_components());
    }
    return trace;
}

KruskalTrace kruskal_trace(const WeightedGraph& g) {
    const auto order = kruskal_order(g);
    return kruskal_in_order(g, order);
}

SpanningTree kruskal(const WeightedGraph& g) {
    const std::size_t n = g.num_nodes();
    const auto order = kruskal_order(g);

    SpanningTree tree;
    tree.edges.reserve(n > 0 ? n - 1 : 0);
    UnionFind forest(n);
    for (std::size_t k : order) {
        const Edge& e = g.edge(k);
        const auto ru = forest.find(e.u);
        const auto rv = forest.find(e.v);
        if (ru == rv) continue;
        forest.unite(ru, rv);
        tree.edges.push_back(e);
        tree.total_weight += g.weight(k);
        if (tree.edges.size() + 1 == n) break;
    }
    if (n > 0 && tree.edges.size() != n - 1) throw DisconnectedGraphError(forest.num_components());
    return tree;
}

SpanningTree prim(const WeightedGraph& g, NodeId start) {
    const std::size_t n = g.num_nodes();
    SpanningTree tree;
    if (n == 0) return tree;
    if (start >= n) throw GraphError(GraphError::Kind::NodeOutOfRange, "prim: start node out of range");

    using Entry = std::tuple<double, Edge, std::size_t>;  // weight, canonical edge, edge index
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    std::vector<bool> in_tree(n, false);

    auto absorb = [&](NodeId x) {
        in_tree[x] = true;
        for (const auto& nb : g.neighbors(x)) {
            if (!in_tree[nb.node]) heap.emplace(g.weight(nb.edge), g.edge(nb.edge), nb.edge);
        }
    };

    absorb(start);
    tree.edges.reserve(n - 1);
    while (!heap.empty() && tree.edges.size() + 1 < n) {
        const auto [w, e, k] = heap.top();
        heap.pop();
        const NodeId next = in_tree[e.u] ? e.v : e.u;
        if (in_tree[next]) continue;  // stale entry
        tree.edges.push_back(e);
        tree.total_weight += w;
        absorb(next);
    }
    if (tree.edges.size() + 1 != n) throw DisconnectedGraphError(count_components(g));
    return tree;
}

namespace {

// Labels each node with the smallest node id of its component under `edges`.
std::vector<NodeId> component_labels(std::size_t n, std::span<const Edge> edges) {
    std::vector<std::vector<NodeId>> adj(n);
    for (const Edge& e : edges) {
        adj.at(e.u).push_back(e.v);
        adj.at(e.v).push_back(e.u);
    }
    constexpr NodeId unset = std::numeric_limits<NodeId>::max();
    std::vector<NodeId> label(n, unset);
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < n; ++s) {
        if (label[s] != unset) continue;
        label[s] = s;
        stack.push_back(s);
        while (!stack.empty()) {
            const NodeId x = stack.back();
            stack.pop_back();
            for (NodeId y : adj[x]) {
                if (label[y] == unset) {
                    label[y] = s;
                    stack.push_back(y);
                }
            }
        }
    }
    return label;
}

class SpanningTreeSearch {
public:
    explicit SpanningTreeSearch(const WeightedGraph& g) : g_(g), n_(g.num_nodes()) {
        order_.resize(g.num_edges());
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
            return std::pair(g.weight(a), g.edge(a)) < std::pair(g.weight(b), g.edge(b));
        });
        prefix_.assign(order_.size() + 1, 0.0);
        for (std::size_t i = 0; i < order_.size(); ++i) prefix_[i + 1] = prefix_[i] + g.weight(order_[i]);
    }

    BruteForceResult run() {
        std::vector<NodeId> label(n_);
        std::iota(label.begin(), label.end(), NodeId{0});
        visit(0, 0.0, label);
        BruteForceResult out;
        out.min_weight = best_;
        out.minimum_trees = std::move(trees_);
        for (auto& t : out.minimum_trees) std::sort(t.begin(), t.end());
        return out;
    }

private:
    void visit(std::size_t next, double weight, const std::vector<NodeId>& label) {
        const std::size_t need = (n_ - 1) - chosen_.size();
        if (need == 0) {
            record(weight);
            return;
        }
        if (order_.size() - next < need) return;
        // the cheapest possible completion uses the next `need` edges in sorted order
        const double bound = weight + (prefix_[next + need] - prefix_[next]);
        if (have_best_ && bound > best_ && !weights_close(bound, best_)) return;

        const std::size_t k = order_[next];
        const Edge& e = g_.edge(k);
        if (label[e.u] != label[e.v]) {
            std::vector<NodeId> merged = label;
            const NodeId from = label[e.v];
            for (auto& l : merged) {
                if (l == from) l = label[e.u];
            }
            chosen_.push_back(e);
            visit(next + 1, weight + g_.weight(k), merged);
            chosen_.pop_back();
        }
        visit(next + 1, weight, label);
    }

    void record(double weight) {
        if (!have_best_ || (weight < best_ && !weights_close(weight, best_))) {
            have_best_ = true;
            best_ = weight;
            trees_.clear();
            trees_.push_back(chosen_);
        } else if (weights_close(weight, best_)) {
            trees_.push_back(chosen_);
        }
    }

    const WeightedGraph& g_;
    std::size_t n_;
    std::vector<std::size_t> order_;
    std::vector<double> prefix_;
    std::vector<Edge> chosen_;
    std::vector<std::vector<Edge>> trees_;
    double best_ = 0.0;
    bool have_best_ = false;
};

}  // namespace

BruteForceResult brute_force_mst(const WeightedGraph& g) {
    const std::size_t n = g.num_nodes();
    if (n > kBruteForceMaxNodes) {
        throw GraphTooLargeError("brute force enumeration refused: " + std::to_string(n) + " nodes (limit " +
                                 std::to_string(kBruteForceMaxNodes) + ")");
    }
    if (n == 0) return {0.0, {{}}};
    const std::size_t components = count_components(g);
    if (components > 1) throw DisconnectedGraphError(components);
    return SpanningTreeSearch(g).run();
}

bool is_feasible_extension(const WeightedGraph& g, std::span<const Edge> partial, const Edge& e) {
    const auto index = g.find_edge(e.u, e.v);
    if (!index) {
        throw std::invalid_argument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not in the graph");
    }
    const auto label = component_labels(g.num_nodes(), partial);
    const NodeId side = label[e.u];
    if (side == label[e.v]) return false;

    const double w = g.weight(*index);
    for (std::size_t k = 0; k < g.num_edges(); ++k) {
        const Edge& f = g.edge(k);
        const bool crosses = (label[f.u] == side) != (label[f.v] == side);
        if (crosses && g.weight(k) < w) return false;
    }
    return true;
}

const char* reason_code(TreeDefect d) noexcept {
    switch (d) {
        case TreeDefect::None: return "ok";
        case TreeDefect::EdgeCount: return "edge-count";
        case TreeDefect::NotInGraph: return "not-in-graph";
        case TreeDefect::Cycle: return "cycle";
        case TreeDefect::WeightMismatch: return "weight-mismatch";
    }
    return "unknown";
}

double tree_weight(const WeightedGraph& g, std::span<const Edge> edges) {
    double sum = 0.0;
    for (const Edge& e : edges) {
        const auto k = g.find_edge(e.u, e.v);
        if (!k) throw std::invalid_argument("tree edge not in graph");
        sum += g.weight(*k);
    }
    return sum;
}

TreeCheck verify_spanning_tree(const WeightedGraph& g, const SpanningTree& t) {
    const std::size_t n = g.num_nodes();
    const std::size_t expected = n > 0 ? n - 1 : 0;
    if (t.edges.size() != expected) {
        return {TreeDefect::EdgeCount,
                "expected " + std::to_string(expected) + " edges, found " + std::to_string(t.edges.size())};
    }
    for (const Edge& e : t.edges) {
        if (!g.find_edge(e.u, e.v)) {
            return {TreeDefect::NotInGraph, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not in G"};
        }
    }
    // n - 1 edges that reach every node form a tree; otherwise some edge closes a cycle
    const auto label = component_labels(n, t.edges);
    if (std::any_of(label.begin(), label.end(), [](NodeId l) { return l != 0; })) {
        return {TreeDefect::Cycle, "edges contain a cycle and leave nodes unconnected"};
    }
    const double w = tree_weight(g, t.edges);
    if (!weights_close(w, t.total_weight)) {
        return {TreeDefect::WeightMismatch,
                "stated weight " + std::to_string(t.total_weight) + " but edges sum to " + std::to_string(w)};
    }
    return {};
}

std::vector<std::size_t> tree_degrees(std::size_t n_nodes, std::span<const Edge> edges) {
    std::vector<std::size_t> deg(n_nodes, 0);
    for (const Edge& e : edges) {
        ++deg.at(e.u);
        ++deg.at(e.v);
    }
    return deg;
}

WeightedGraph tree_as_graph(const WeightedGraph& g, const SpanningTree& t) {
    std::vector<WeightedEdge> edges;
    edges.reserve(t.edges.size());
    for (const Edge& e : t.edges) {
        const auto k = g.find_edge(e.u, e.v);
        if (!k) throw std::invalid_argument("tree edge not in graph");
        edges.push_back({e.u, e.v, g.weight(*k)});
    }
    return WeightedGraph(g.num_nodes(), edges);
}

}  // namespace mstsf
