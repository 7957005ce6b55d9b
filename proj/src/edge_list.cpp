#include "fairdom/edge_list.hpp"

#include "fairdom/errors.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace fairdom {

Graph parse_edge_list(std::istream& in) {
    std::optional<int> n;
    std::vector<Edge> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        auto fail = [&](const std::string& what) {
            throw InputError("edge list line " + std::to_string(lineno) + ": " + what);
        };
        if (line[first] == 'n') {
            std::string tag;
            long long count = -1;
            if (!(fields >> tag >> count) || tag != "n" || count < 0) fail("expected `n <count>`");
            if (n) fail("duplicate `n` header");
            n = static_cast<int>(count);
            continue;
        }
        if (!n) fail("edge before the `n <count>` header");
        long long u = 0, v = 0;
        if (!(fields >> u >> v)) fail("expected two vertex labels");
        std::string extra;
        if (fields >> extra) fail("trailing field `" + extra + "`");
        if (u < 1 || v < 1 || u > *n || v > *n)
            fail("label out of range [1," + std::to_string(*n) + "]");
        edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    }
    if (!n) throw InputError("edge list has no `n <count>` header");
    return Graph(*n, edges);
}

Graph read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open edge list `" + path + "`");
    return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n " << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

}  // namespace fairdom
