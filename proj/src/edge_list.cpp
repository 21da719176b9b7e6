#include "domlab/edge_list.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace domlab {

namespace {

bool is_blank_or_comment(const std::string& line) {
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long n = -1;
    long long m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        std::istringstream fields(line);
        long long a = 0;
        long long b = 0;
        if (!(fields >> a >> b)) fail(line_no, "expected two integers, got \"" + line + "\"");
        std::string extra;
        if (fields >> extra) fail(line_no, "unexpected token \"" + extra + "\"");
        if (n < 0) {
            if (a < 0 || b < 0) fail(line_no, "negative header value");
            n = a;
            m = b;
            continue;
        }
        if (a < 0 || b < 0 || a >= n || b >= n) fail(line_no, "endpoint out of range 0.." + std::to_string(n - 1));
        if (a == b) fail(line_no, "self-loop on vertex " + std::to_string(a));
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (n < 0) throw std::invalid_argument("edge list: missing \"n m\" header");
    if (static_cast<long long>(edges.size()) != m) {
        throw std::invalid_argument("edge list: header announces " + std::to_string(m) + " edges, found " +
                                    std::to_string(edges.size()));
    }
    return build_graph(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open edge list file \"" + path + "\"");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

}  // namespace domlab
