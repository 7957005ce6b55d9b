#include "fairdom/graph.hpp"

#include "fairdom/errors.hpp"

#include <algorithm>
#include <string>

namespace fairdom {

std::string format_set(VertexSet s, int base) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out += ',';
        out += std::to_string(v + base);
        first = false;
    }
    out += '}';
    return out;
}

Graph::Graph(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw InputError("vertex count must be non-negative");
    if (n > kMaxVertices)
        throw InputError("graph with " + std::to_string(n) + " vertices exceeds the enumeration cap of " +
                         std::to_string(kMaxVertices) + " (one machine word per neighbourhood)");
    adj_.assign(static_cast<std::size_t>(n), VertexSet{});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside [0," +
                             std::to_string(n) + ")");
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u) + " (graphs must be simple)");
        adj_[u].insert(v);
        adj_[v].insert(u);
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= order())
        throw InputError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(order()) + ")");
}

VertexSet Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::edge_count() const {
    int twice = 0;
    for (auto s : adj_) twice += s.size();
    return twice / 2;
}

int Graph::max_degree() const {
    int best = 0;
    for (auto s : adj_) best = std::max(best, s.size());
    return best;
}

std::optional<int> Graph::distance(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    // Frontier-at-a-time BFS on bit masks.
    VertexSet seen{u};
    VertexSet frontier{u};
    for (int d = 0; !frontier.empty(); ++d) {
        if (frontier.contains(v)) return d;
        VertexSet next;
        for (int w : frontier) next |= adj_[w];
        frontier = next - seen;
        seen |= frontier;
    }
    return std::nullopt;
}

bool Graph::is_connected() const {
    if (order() <= 1) return true;
    VertexSet seen{0};
    VertexSet frontier{0};
    while (!frontier.empty()) {
        VertexSet next;
        for (int w : frontier) next |= adj_[w];
        frontier = next - seen;
        seen |= frontier;
    }
    return seen == vertices();
}

Graph Graph::induced_subgraph(VertexSet s) const {
    if (!s.is_subset_of(vertices())) throw InputError("induced_subgraph: set reaches outside the vertex range");
    std::vector<int> relabel(adj_.size(), -1);
    int next = 0;
    for (int v : s) relabel[v] = next++;
    std::vector<Edge> kept;
    for (int v : s)
        for (int w : adj_[v] & s)
            if (v < w) kept.emplace_back(relabel[v], relabel[w]);
    return Graph(next, kept);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int v = 0; v < order(); ++v)
        for (int w : adj_[v])
            if (v < w) out.emplace_back(v, w);
    return out;
}

}  // namespace fairdom
