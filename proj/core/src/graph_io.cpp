#include "netprobe/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "netprobe/error.hpp"

namespace netprobe {

Graph read_edge_list(std::istream& in) {
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw ParseError("edge list: missing \"N M\" header");
    if (n < 1 || m < 0 || m > n * (n - 1) / 2)
        throw ParseError("edge list: invalid header N=" + std::to_string(n) +
                         " M=" + std::to_string(m));
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long k = 0; k < m; ++k) {
        long long i = 0, j = 0;
        if (!(in >> i >> j))
            throw ParseError("edge list: expected " + std::to_string(m) + " edges, read " +
                             std::to_string(k));
        if (i >= j) throw ParseError("edge list: line " + std::to_string(k + 2) + " needs i < j");
        if (i < 0 || j >= n) throw ParseError("edge list: node index out of range");
        edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
    std::string trailing;
    if (in >> trailing) throw ParseError("edge list: trailing content after " + std::to_string(m) + " edges");
    try {
        return Graph::create(static_cast<int>(n), std::move(edges));
    } catch (const InvalidArgument& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.node_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace netprobe
