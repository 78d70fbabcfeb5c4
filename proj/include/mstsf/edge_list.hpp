#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

#include "mstsf/graph.hpp"
#include "mstsf/mst.hpp"
#include "mstsf/statistics.hpp"

namespace mstsf {

// Edge-list text format:
//
//   # nodes=<N> edges=<M>
//   # <key>=<value> ...        optional metadata lines
//   u v w                      one edge per line, 0-based ids
//
// Tree files use the same layout with a leading `# tree weight=<w>` line.

class FormatError : public std::runtime_error {
public:
    FormatError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct EdgeListFile {
    WeightedGraph graph;
    std::map<std::string, std::string> meta;  // every key=value seen in comment lines
};

void write_graph(std::ostream& out, const WeightedGraph& g, const Metadata& extra = {});
EdgeListFile read_graph(std::istream& in);

void write_tree(std::ostream& out, const WeightedGraph& g, const SpanningTree& t);

struct TreeFile {
    std::size_t n_nodes = 0;
    SpanningTree tree;                   // total_weight taken from the header
    std::vector<WeightedEdge> edges;     // as listed, with their stated weights
};

TreeFile read_tree(std::istream& in);

EdgeListFile load_graph(const std::filesystem::path& path);
TreeFile load_tree(const std::filesystem::path& path);

}  // namespace mstsf
