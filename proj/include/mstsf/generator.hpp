#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "mstsf/graph.hpp"

namespace mstsf {

/// Engine used for every random draw; its name is written into run metadata.
using Rng = std::mt19937_64;
inline constexpr std::string_view kRngName = "mt19937_64";

/// Unbiased integer in [0, bound), independent of the standard library's distributions
/// so sequences are identical across toolchains.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

struct GeneratorParams {
    std::size_t n_nodes = 0;
    std::size_t m = 2;
    std::uint64_t seed = 0;
};

/// Throws std::invalid_argument unless m >= 1 and n_nodes > m + 1.
void validate(const GeneratorParams& params);

/// Edge count produced by generate_preferential_attachment.
std::size_t expected_edge_count(const GeneratorParams& params);

/// Scale-free graph by preferential attachment, unit weights.
///
/// Starts from a complete graph on m + 1 nodes. Each later node t attaches to m
/// distinct existing nodes, each drawn with probability proportional to its current
/// degree; a draw that repeats a target already picked for t is redrawn. Degree
/// sampling uses a flat list holding every node once per incident edge end.
WeightedGraph generate_preferential_attachment(const GeneratorParams& params);

enum class Disorder { None, Type1, Type2 };

std::string_view to_string(Disorder d) noexcept;
std::optional<Disorder> parse_disorder(std::string_view name) noexcept;

/// Reweights edges from the final degrees of g: Type1 w = k_i * k_j,
/// Type2 w = 1 / (k_i * k_j), None w = 1. Topology is unchanged.
WeightedGraph assign_disorder(const WeightedGraph& g, Disorder d);

}  // namespace mstsf
