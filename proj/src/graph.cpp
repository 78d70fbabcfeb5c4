#include "mstsf/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

namespace mstsf {

namespace {

std::uint64_t edge_key(const Edge& e) { return (std::uint64_t{e.u} << 32) | e.v; }

}  // namespace

WeightedGraph::WeightedGraph(std::size_t n_nodes, std::span<const WeightedEdge> edges) {
    if (n_nodes > std::numeric_limits<NodeId>::max()) {
        throw GraphError(GraphError::Kind::NodeOutOfRange, "too many nodes: " + std::to_string(n_nodes));
    }
    edges_.reserve(edges.size());
    weights_.reserve(edges.size());
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);

    std::vector<std::size_t> degree(n_nodes, 0);
    for (const auto& we : edges) {
        if (we.u >= n_nodes || we.v >= n_nodes) {
            throw GraphError(GraphError::Kind::NodeOutOfRange, "edge {" + std::to_string(we.u) + "," +
                                                                   std::to_string(we.v) + "} has an endpoint outside [0, " +
                                                                   std::to_string(n_nodes) + ")");
        }
        if (we.u == we.v) {
            throw GraphError(GraphError::Kind::SelfEdge, "self-edge at node " + std::to_string(we.u));
        }
        if (!std::isfinite(we.weight)) {
            throw GraphError(GraphError::Kind::NonFiniteWeight,
                             "edge {" + std::to_string(we.u) + "," + std::to_string(we.v) + "} has a non-finite weight");
        }
        Edge e(we.u, we.v);
        if (!seen.insert(edge_key(e)).second) {
            throw GraphError(GraphError::Kind::DuplicateEdge,
                             "duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
        }
        edges_.push_back(e);
        weights_.push_back(we.weight);
        ++degree[e.u];
        ++degree[e.v];
    }

    adjacency_offsets_.assign(n_nodes + 1, 0);
    for (std::size_t i = 0; i < n_nodes; ++i) adjacency_offsets_[i + 1] = adjacency_offsets_[i] + degree[i];
    adjacency_.resize(2 * edges_.size());
    std::vector<std::size_t> fill(adjacency_offsets_.begin(), adjacency_offsets_.end() - 1);
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        const auto [u, v] = edges_[k];
        adjacency_[fill[u]++] = {v, k};
        adjacency_[fill[v]++] = {u, k};
    }
}

void WeightedGraph::check_node(NodeId i) const {
    if (i >= num_nodes()) {
        throw GraphError(GraphError::Kind::NodeOutOfRange,
                         "node " + std::to_string(i) + " outside [0, " + std::to_string(num_nodes()) + ")");
    }
}

std::size_t WeightedGraph::degree(NodeId i) const {
    check_node(i);
    return adjacency_offsets_[i + 1] - adjacency_offsets_[i];
}

std::span<const WeightedGraph::Neighbor> WeightedGraph::neighbors(NodeId i) const {
    check_node(i);
    return {adjacency_.data() + adjacency_offsets_[i], adjacency_offsets_[i + 1] - adjacency_offsets_[i]};
}

std::optional<std::size_t> WeightedGraph::find_edge(NodeId a, NodeId b) const {
    if (a >= num_nodes() || b >= num_nodes() || a == b) return std::nullopt;
    // scan the shorter list
    if (degree(a) > degree(b)) std::swap(a, b);
    for (const auto& nb : neighbors(a)) {
        if (nb.node == b) return nb.edge;
    }
    return std::nullopt;
}

WeightedGraph WeightedGraph::with_weights(std::vector<double> weights) const {
    if (weights.size() != edges_.size()) {
        throw std::invalid_argument("with_weights: expected " + std::to_string(edges_.size()) + " weights, got " +
                                    std::to_string(weights.size()));
    }
    for (double w : weights) {
        if (!std::isfinite(w)) throw GraphError(GraphError::Kind::NonFiniteWeight, "non-finite weight");
    }
    WeightedGraph g = *this;
    g.weights_ = std::move(weights);
    return g;
}

std::vector<WeightedEdge> WeightedGraph::weighted_edges() const {
    std::vector<WeightedEdge> out;
    out.reserve(edges_.size());
    for (std::size_t k = 0; k < edges_.size(); ++k) out.push_back({edges_[k].u, edges_[k].v, weights_[k]});
    return out;
}

double WeightedGraph::total_weight() const noexcept {
    double sum = 0.0;
    for (double w : weights_) sum += w;
    return sum;
}

WeightedGraph build_graph(std::size_t n_nodes, std::span<const WeightedEdge> edges) {
    return WeightedGraph(n_nodes, edges);
}

Cut::Cut(std::vector<bool> membership) : membership_(std::move(membership)) {
    const auto inside = std::count(membership_.begin(), membership_.end(), true);
    if (inside == 0 || inside == static_cast<std::ptrdiff_t>(membership_.size())) {
        throw GraphError(GraphError::Kind::InvalidCut, "a cut needs nodes on both sides");
    }
}

Cut Cut::from_members(std::size_t n_nodes, std::span<const NodeId> members) {
    std::vector<bool> membership(n_nodes, false);
    for (NodeId i : members) {
        if (i >= n_nodes) throw GraphError(GraphError::Kind::NodeOutOfRange, "cut member out of range");
        membership[i] = true;
    }
    return Cut(std::move(membership));
}

bool Cut::contains(NodeId i) const {
    if (i >= membership_.size()) throw GraphError(GraphError::Kind::NodeOutOfRange, "node outside cut");
    return membership_[i];
}

Cut Cut::complement() const {
    std::vector<bool> flipped = membership_;
    flipped.flip();
    return Cut(std::move(flipped));
}

bool crosses_cut(const Cut& cut, const Edge& e) { return cut.contains(e.u) != cut.contains(e.v); }

std::vector<Edge> candidate_edges(const WeightedGraph& g, const Cut& cut) {
    if (cut.num_nodes() != g.num_nodes()) {
        throw GraphError(GraphError::Kind::InvalidCut, "cut and graph disagree on the node count");
    }
    double best = std::numeric_limits<double>::infinity();
    std::vector<Edge> out;
    for (std::size_t k = 0; k < g.num_edges(); ++k) {
        const Edge& e = g.edge(k);
        if (!crosses_cut(cut, e)) continue;
        const double w = g.weight(k);
        if (w < best) {
            best = w;
            out.clear();
        }
        if (w == best) out.push_back(e);
    }
    if (out.empty()) throw GraphError(GraphError::Kind::NoCrossingEdge, "no edge crosses the cut");
    return out;
}

std::size_t count_components(const WeightedGraph& g) {
    const std::size_t n = g.num_nodes();
    std::vector<bool> seen(n, false);
    std::vector<NodeId> stack;
    std::size_t components = 0;
    for (NodeId s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++components;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            const NodeId x = stack.back();
            stack.pop_back();
            for (const auto& nb : g.neighbors(x)) {
                if (!seen[nb.node]) {
                    seen[nb.node] = true;
                    stack.push_back(nb.node);
                }
            }
        }
    }
    return components;
}

bool is_connected(const WeightedGraph& g) { return count_components(g) <= 1; }

}  // namespace mstsf
