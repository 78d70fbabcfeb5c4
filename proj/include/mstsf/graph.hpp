#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mstsf {

using NodeId = std::uint32_t;

/// Undirected edge, always stored with u < v.
struct Edge {
    NodeId u = 0;
    NodeId v = 0;

    Edge() = default;
    Edge(NodeId a, NodeId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct WeightedEdge {
    NodeId u = 0;
    NodeId v = 0;
    double weight = 0.0;
};

class GraphError : public std::invalid_argument {
public:
    enum class Kind { SelfEdge, DuplicateEdge, NodeOutOfRange, NonFiniteWeight, NoCrossingEdge, InvalidCut };

    GraphError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// Simple undirected graph with one real weight per edge. Immutable once built.
class WeightedGraph {
public:
    struct Neighbor {
        NodeId node;
        std::size_t edge;
    };

    WeightedGraph() = default;

    /// Validates and canonicalizes the edge list; throws GraphError on self-edges,
    /// duplicates, out-of-range endpoints or non-finite weights.
    WeightedGraph(std::size_t n_nodes, std::span<const WeightedEdge> edges);

    std::size_t num_nodes() const noexcept { return adjacency_offsets_.empty() ? 0 : adjacency_offsets_.size() - 1; }
    std::size_t num_edges() const noexcept { return edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<double>& weights() const noexcept { return weights_; }
    const Edge& edge(std::size_t index) const { return edges_.at(index); }
    double weight(std::size_t index) const { return weights_.at(index); }

    std::size_t degree(NodeId i) const;
    std::span<const Neighbor> neighbors(NodeId i) const;

    /// Index of edge {a, b}, if present.
    std::optional<std::size_t> find_edge(NodeId a, NodeId b) const;

    /// Same topology, new weights (one per edge, same order).
    WeightedGraph with_weights(std::vector<double> weights) const;

    std::vector<WeightedEdge> weighted_edges() const;
    double total_weight() const noexcept;

private:
    void check_node(NodeId i) const;

    std::vector<Edge> edges_;
    std::vector<double> weights_;
    std::vector<std::size_t> adjacency_offsets_;
    std::vector<Neighbor> adjacency_;
};

WeightedGraph build_graph(std::size_t n_nodes, std::span<const WeightedEdge> edges);

/// Partition (C, V \ C) of the node set; `membership[i]` is true iff i is in C.
class Cut {
public:
    explicit Cut(std::vector<bool> membership);
    /// Cut whose side C is exactly `members`.
    static Cut from_members(std::size_t n_nodes, std::span<const NodeId> members);

    bool contains(NodeId i) const;
    std::size_t num_nodes() const noexcept { return membership_.size(); }
    Cut complement() const;

private:
    std::vector<bool> membership_;
};

bool crosses_cut(const Cut& cut, const Edge& e);

/// All crossing edges of minimum weight; throws GraphError(NoCrossingEdge) if none cross.
std::vector<Edge> candidate_edges(const WeightedGraph& g, const Cut& cut);

bool is_connected(const WeightedGraph& g);

/// Number of connected components (0 for the empty graph).
std::size_t count_components(const WeightedGraph& g);

}  // namespace mstsf
