#pragma once

#include "fairdom/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace fairdom {

// Vertex numbering is fixed per family so set listings are reproducible:
//   cycle(n)              i ~ i±1 (mod n)
//   path(n)               i ~ i+1
//   complete_bipartite    X = {0..m-1}, Y = {m..m+n-1}
//   friendship(n)         centre 0; triangle i (1-based) on {0, 2i-1, 2i}
//   triangular_cactus(n)  top vertices 0..n-1, bottom path n..2n; top i-1 ~ bottom n+i-1, n+i
// The 1-based labels used in printed output are these indices plus one.

Graph empty_graph(int n);
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete_bipartite(int m, int n);
Graph friendship(int n);
Graph triangular_cactus(int n);

/// One copy of g plus |V(g)| copies of h; vertex i of g is joined to all of copy i.
/// Copy i occupies indices |V(g)| + i*|V(h)| ... |V(g)| + (i+1)*|V(h)| - 1.
Graph corona(const Graph& g, const Graph& h);

/// Disjoint union (g first, then h) plus every edge between the two.
Graph join(const Graph& g, const Graph& h);

struct BipartiteParts {
    VertexSet x;
    VertexSet y;
};
BipartiteParts bipartite_parts(int m, int n);

enum class FamilyTag { Empty, Complete, CompleteBipartite, Path, Cycle, Friendship, TriangularCactus, Corona, Join };

/// A named family instance, as written in the CLI's family DSL:
/// `cycle:9`, `path:12`, `knn:4`, `kmn:2,3`, `friendship:3`, `cactus:5`,
/// `complete:6`, `empty:4`, `corona(<spec>,<spec>)`, `join(<spec>,<spec>)`.
struct FamilySpec {
    FamilyTag tag = FamilyTag::Empty;
    std::vector<int> params;
    std::vector<FamilySpec> operands;

    /// Vertex count of the instance, computed without building it.
    long long order() const;
    Graph build() const;
    std::string to_string() const;

    bool operator==(const FamilySpec&) const = default;
};

/// Single-parameter instance; CompleteBipartite(n) means K_{n,n}.
FamilySpec family(FamilyTag tag, int n);

/// Throws InputError on malformed text or parameters outside a family's range.
FamilySpec parse_family(std::string_view text);

/// Short DSL name: "cycle", "path", "knn", "friendship", "cactus", "complete", "empty", ...
std::string family_name(FamilyTag tag);
FamilyTag family_tag_from_name(std::string_view name);

}  // namespace fairdom
