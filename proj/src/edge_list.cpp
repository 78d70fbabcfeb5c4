#include "mstsf/edge_list.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "mstsf/text.hpp"

namespace mstsf {

namespace {

struct RawEdgeList {
    std::map<std::string, std::string> meta;
    std::vector<WeightedEdge> edges;
};

RawEdgeList parse(std::istream& in) {
    RawEdgeList raw;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view text = trim(line);
        if (text.empty()) continue;
        if (text.front() == '#') {
            std::istringstream tokens{std::string(text.substr(1))};
            std::string token;
            while (tokens >> token) {
                const auto eq = token.find('=');
                if (eq == std::string::npos || eq == 0) continue;
                raw.meta[token.substr(0, eq)] = token.substr(eq + 1);
            }
            continue;
        }
        std::istringstream fields{std::string(text)};
        std::string su, sv, sw, extra;
        if (!(fields >> su >> sv >> sw) || (fields >> extra)) throw FormatError(line_no, "expected `u v w`");
        const auto u = parse_number<NodeId>(su);
        const auto v = parse_number<NodeId>(sv);
        const auto w = parse_number<double>(sw);
        if (!u || !v) throw FormatError(line_no, "node ids must be non-negative integers");
        if (!w) throw FormatError(line_no, "invalid weight `" + sw + "`");
        raw.edges.push_back({*u, *v, *w});
    }
    return raw;
}

std::size_t read_count(const RawEdgeList& raw, const std::string& key) {
    const auto it = raw.meta.find(key);
    if (it == raw.meta.end()) throw FormatError(0, "missing `" + key + "=` header");
    const auto n = parse_number<std::size_t>(it->second);
    if (!n) throw FormatError(0, "invalid `" + key + "=` header value");
    return *n;
}

void check_edge_count(const RawEdgeList& raw) {
    if (raw.meta.contains("edges") && read_count(raw, "edges") != raw.edges.size()) {
        throw FormatError(0, "header announces " + raw.meta.at("edges") + " edges, file lists " +
                                 std::to_string(raw.edges.size()));
    }
}

void write_edges(std::ostream& out, const WeightedGraph& g, std::span<const Edge> edges) {
    for (const Edge& e : edges) {
        out << e.u << ' ' << e.v << ' ' << format_double(g.weight(*g.find_edge(e.u, e.v))) << '\n';
    }
}

}  // namespace

void write_graph(std::ostream& out, const WeightedGraph& g, const Metadata& extra) {
    out << "# nodes=" << g.num_nodes() << " edges=" << g.num_edges() << '\n';
    if (!extra.empty()) {
        out << '#';
        for (const auto& [key, value] : extra) out << ' ' << key << '=' << value;
        out << '\n';
    }
    for (std::size_t k = 0; k < g.num_edges(); ++k) {
        out << g.edge(k).u << ' ' << g.edge(k).v << ' ' << format_double(g.weight(k)) << '\n';
    }
}

EdgeListFile read_graph(std::istream& in) {
    RawEdgeList raw = parse(in);
    const std::size_t n = read_count(raw, "nodes");
    check_edge_count(raw);
    try {
        return {WeightedGraph(n, raw.edges), std::move(raw.meta)};
    } catch (const GraphError& e) {
        throw FormatError(0, e.what());
    }
}

void write_tree(std::ostream& out, const WeightedGraph& g, const SpanningTree& t) {
    out << "# tree weight=" << format_double(t.total_weight) << '\n';
    out << "# nodes=" << g.num_nodes() << " edges=" << t.edges.size() << '\n';
    write_edges(out, g, t.edges);
}

TreeFile read_tree(std::istream& in) {
    RawEdgeList raw = parse(in);
    TreeFile out;
    out.n_nodes = read_count(raw, "nodes");
    check_edge_count(raw);
    const auto it = raw.meta.find("weight");
    if (it == raw.meta.end()) throw FormatError(0, "missing `# tree weight=` header");
    const auto w = parse_number<double>(it->second);
    if (!w) throw FormatError(0, "invalid tree weight");
    out.tree.total_weight = *w;
    for (const auto& we : raw.edges) out.tree.edges.emplace_back(we.u, we.v);
    out.edges = std::move(raw.edges);
    return out;
}

EdgeListFile load_graph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path.string());
    return read_graph(in);
}

TreeFile load_tree(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path.string());
    return read_tree(in);
}

}  // namespace mstsf
