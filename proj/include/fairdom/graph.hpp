#pragma once

#include "fairdom/vertex_set.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace fairdom {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one VertexSet per vertex, so the order is limited to
/// kMaxVertices. Parallel edges collapse on construction; self-loops and
/// out-of-range endpoints throw InputError.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<Edge>& edges);

    int order() const { return static_cast<int>(adj_.size()); }
    int edge_count() const;
    int degree(int v) const { return neighbors(v).size(); }
    int max_degree() const;

    /// Open neighbourhood N(v).
    VertexSet neighbors(int v) const;
    bool adjacent(int u, int v) const { return neighbors(u).contains(v); }
    VertexSet vertices() const { return VertexSet::full(order()); }

    /// Shortest-path edge count; nullopt when u and v lie in different components.
    std::optional<int> distance(int u, int v) const;

    bool is_connected() const;
    bool is_edgeless() const { return edge_count() == 0; }

    /// Graph on |s| vertices, relabelled 0..|s|-1 in increasing order of the original labels.
    Graph induced_subgraph(VertexSet s) const;

    /// Edges as (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    std::vector<VertexSet> adj_;
};

}  // namespace fairdom
