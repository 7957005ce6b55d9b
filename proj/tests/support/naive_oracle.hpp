#pragma once

// Reference implementations for tests. Deliberately slow and unrelated to the
// library's search: plain adjacency lists, every subset of every size, no pruning.

#include "fairdom/graph.hpp"

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace naive {

struct SmallGraph {
    int n = 0;
    std::vector<std::set<int>> adj;
};

SmallGraph make(int n, const std::vector<std::pair<int, int>>& edges);
SmallGraph from(const fairdom::Graph& g);

// 0 = not fair dominating, -1 = whole vertex set, k >= 1 otherwise.
int fair_k(const SmallGraph& g, const std::set<int>& d);
bool dominating(const SmallGraph& g, const std::set<int>& d);

// counts[i] = number of fair dominating sets of size i, i = 0..n
std::vector<std::uint64_t> fd_counts(const SmallGraph& g);
std::vector<std::set<int>> fd_sets(const SmallGraph& g, int size);
int fd_k_number(const SmallGraph& g, int k);
int gamma(const SmallGraph& g);

// Smallest adjacency matrix string over all relabellings; n <= 9.
std::string canonical_form(const SmallGraph& g);
bool isomorphic(const SmallGraph& a, const SmallGraph& b);

// Independent constructions from textbook descriptions.
SmallGraph cycle(int n);
SmallGraph path(int n);
SmallGraph knn(int n);
SmallGraph friendship(int n);
SmallGraph cactus(int n);

}  // namespace naive
