#pragma once

#include "fairdom/count.hpp"
#include "fairdom/graph.hpp"
#include "fairdom/polynomial.hpp"

#include <vector>

namespace fairdom {

/// Outcome of testing one vertex set against the fairness condition.
struct FairnessResult {
    enum class Status { NotDominating, NotFair, FairWith, VacuouslyFair };

    Status status = Status::NotDominating;
    int k = 0;  // meaningful only for FairWith

    bool is_fair() const { return status == Status::FairWith || status == Status::VacuouslyFair; }
    bool operator==(const FairnessResult&) const = default;
};

/// Classifies d: NotDominating if some outside vertex has no neighbour in d,
/// FairWith(k) if every outside vertex has exactly k >= 1 neighbours in d,
/// VacuouslyFair if d = V, NotFair otherwise.
FairnessResult classify(const Graph& g, VertexSet d);

inline constexpr int kDefaultEnumerationCap = 28;

struct EngineOptions {
    /// Largest order the exhaustive search accepts; at most kMaxVertices.
    int cap = kDefaultEnumerationCap;
    /// Concurrent search workers; results never depend on this.
    int workers = 1;
};

/// Throws CapacityError if g is above opts.cap; caps above kMaxVertices act as kMaxVertices.
void check_cap(const Graph& g, const EngineOptions& opts);

/// d_f(G, i): number of i-subsets that are fair dominating sets.
Count count_fd(const Graph& g, int i, const EngineOptions& opts = {});

/// All fair dominating i-subsets, in increasing numeric order of their bit masks.
std::vector<VertexSet> enumerate_fd(const Graph& g, int i, const EngineOptions& opts = {});

/// D_f(G, x) from a single search over subsets of every size.
FairDomPolynomial fd_polynomial(const Graph& g, const EngineOptions& opts = {});

/// fd(G); equals n exactly for the edgeless graph.
int fd_number(const Graph& g, const EngineOptions& opts = {});

/// fd_k(G). The full vertex set counts as a kFD-set for every k, so the result is at most n.
int fd_k_number(const Graph& g, int k, const EngineOptions& opts = {});

/// Domination number gamma(G).
int gamma(const Graph& g, const EngineOptions& opts = {});

/// Pruning bound from degree-2 chains: a maximal run of L vertices of degree 2
/// can only be dominated from the run and its attachment vertices, and each
/// chosen vertex covers at most three run vertices, so any dominating set
/// holds at least ceil(L/3) vertices of `span`.
struct ChainBound {
    VertexSet span;
    int need = 0;
};
std::vector<ChainBound> degree_two_chains(const Graph& g);

}  // namespace fairdom
