#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mstsf/graph.hpp"

namespace mstsf {

/// Edge set of a spanning tree plus its total weight.
struct SpanningTree {
    std::vector<Edge> edges;  // in the order the algorithm accepted them
    double total_weight = 0.0;
};

class DisconnectedGraphError : public std::runtime_error {
public:
    explicit DisconnectedGraphError(std::size_t components)
        : std::runtime_error("graph is disconnected (" + std::to_string(components) + " components)"),
          components_(components) {}
    std::size_t components() const noexcept { return components_; }

private:
    std::size_t components_;
};

class GraphTooLargeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Edge indices in Kruskal processing order: ascending weight, ties by (u, v).
std::vector<std::size_t> kruskal_order(const WeightedGraph& g);

struct KruskalStep {
    std::size_t edge;  // index into g.edges()
    bool accepted;
};

struct KruskalTrace {
    SpanningTree tree;
    std::vector<KruskalStep> steps;  // every processed edge, in processing order
};

SpanningTree kruskal(const WeightedGraph& g);

/// Kruskal with a full record of accept/discard decisions.
KruskalTrace kruskal_trace(const WeightedGraph& g);

/// Runs the edge-selection step over a caller-supplied processing order. The order
/// must be a permutation of all edge indices with non-decreasing weights.
KruskalTrace kruskal_in_order(const WeightedGraph& g, std::span<const std::size_t> order);

/// Lazy-deletion binary-heap Prim.
SpanningTree prim(const WeightedGraph& g, NodeId start = 0);

struct BruteForceResult {
    double min_weight = 0.0;
    std::vector<std::vector<Edge>> minimum_trees;  // each sorted by (u, v)
};

inline constexpr std::size_t kBruteForceMaxNodes = 10;

/// Exhaustive search over all spanning trees (branch and bound). Returns every
/// tree whose weight equals the minimum within 1e-9 relative.
BruteForceResult brute_force_mst(const WeightedGraph& g);

/// True iff `e` joins two components of `partial` and is a minimum-weight edge
/// across the cut (component of e.u, rest). Throws if e is not an edge of g.
bool is_feasible_extension(const WeightedGraph& g, std::span<const Edge> partial, const Edge& e);

enum class TreeDefect { None, EdgeCount, NotInGraph, Cycle, WeightMismatch };

struct TreeCheck {
    TreeDefect defect = TreeDefect::None;
    std::string detail;
    explicit operator bool() const noexcept { return defect == TreeDefect::None; }
};

const char* reason_code(TreeDefect d) noexcept;

TreeCheck verify_spanning_tree(const WeightedGraph& g, const SpanningTree& t);

/// Tree weight recomputed from g (edges must be in g).
double tree_weight(const WeightedGraph& g, std::span<const Edge> edges);

/// Per-node degree within the tree.
std::vector<std::size_t> tree_degrees(std::size_t n_nodes, std::span<const Edge> edges);

/// The tree as a graph, carrying the weights of g.
WeightedGraph tree_as_graph(const WeightedGraph& g, const SpanningTree& t);

bool weights_close(double a, double b, double rel_tol = 1e-9) noexcept;

}  // namespace mstsf
