#include "ordspeed/io.hpp"

#include <fstream>
#include <sstream>

namespace ordspeed {

namespace {

struct ParsedLines {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<int> loops;
};

ParsedLines parse_lines(const std::string& text, bool allow_loops) {
    std::istringstream in(text);
    std::string line;
    ParsedLines out;
    bool header_seen = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (!header_seen) {
            if (tok != "ordgraph")
                throw InputError("line " + std::to_string(lineno) + ": expected 'ordgraph <n>', got '" +
                                 tok + "'");
            if (!(ls >> out.n) || out.n < 0)
                throw InputError("line " + std::to_string(lineno) + ": bad vertex count");
            header_seen = true;
            continue;
        }
        if (tok == "loop") {
            if (!allow_loops)
                throw InputError("line " + std::to_string(lineno) + ": loops not allowed here");
            int v = 0;
            if (!(ls >> v)) throw InputError("line " + std::to_string(lineno) + ": bad loop line");
            if (v < 1 || v > out.n)
                throw InputError("line " + std::to_string(lineno) + ": loop vertex out of range");
            out.loops.push_back(v);
            continue;
        }
        int u = 0, v = 0;
        std::istringstream es(line);
        if (!(es >> u >> v))
            throw InputError("line " + std::to_string(lineno) + ": expected '<u> <v>', got '" + line +
                             "'");
        if (u >= v)
            throw InputError("line " + std::to_string(lineno) + ": edge endpoints must satisfy u < v");
        if (u < 1 || v > out.n)
            throw InputError("line " + std::to_string(lineno) + ": edge endpoint out of range");
        out.edges.emplace_back(u, v);
    }
    if (!header_seen) throw InputError("missing 'ordgraph <n>' header");
    return out;
}

}  // namespace

std::string format_graph(const OrderedGraph& g) {
    std::ostringstream out;
    out << "ordgraph " << g.order() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

std::string format_graph(const LoopedOrderedGraph& g) {
    std::ostringstream out;
    out << "ordgraph " << g.order() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    for (int v : g.loops()) out << "loop " << v << "\n";
    return out.str();
}

OrderedGraph parse_graph(const std::string& text) {
    ParsedLines p = parse_lines(text, false);
    return make_graph(p.n, p.edges);
}

LoopedOrderedGraph parse_looped_graph(const std::string& text) {
    ParsedLines p = parse_lines(text, true);
    LoopedOrderedGraph g(p.n);
    for (auto [u, v] : p.edges) g.set_edge(u, v);
    for (int v : p.loops) g.set_edge(v, v);
    return g;
}

OrderedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

void write_graph_file(const std::string& path, const OrderedGraph& g) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open '" + path + "' for writing");
    out << format_graph(g);
}

}  // namespace ordspeed
