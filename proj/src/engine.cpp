#include "fairdom/engine.hpp"

#include "fairdom/errors.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <iostream>
#include <thread>

namespace fairdom {

FairnessResult classify(const Graph& g, VertexSet d) {
    if (!d.is_subset_of(g.vertices())) throw InputError("classify: set contains a vertex outside the graph");
    const VertexSet outside = d.complement(g.order());
    if (outside.empty()) return {FairnessResult::Status::VacuouslyFair, 0};
    int common = -1;
    bool fair = true;
    for (int v : outside) {
        const int k = (g.neighbors(v) & d).size();
        if (k == 0) return {FairnessResult::Status::NotDominating, 0};
        if (common < 0) common = k;
        else if (k != common) fair = false;
    }
    if (!fair) return {FairnessResult::Status::NotFair, 0};
    return {FairnessResult::Status::FairWith, common};
}

void check_cap(const Graph& g, const EngineOptions& opts) {
    const int cap = std::min(opts.cap, kMaxVertices);
    if (g.order() > cap) throw CapacityError(g.order(), cap);
}

std::vector<ChainBound> degree_two_chains(const Graph& g) {
    const int n = g.order();
    std::vector<ChainBound> out;
    VertexSet deg2;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 2) deg2.insert(v);
    VertexSet seen;
    for (int start : deg2) {
        if (seen.contains(start)) continue;
        // Flood the run of degree-2 vertices containing `start`.
        VertexSet run{start};
        VertexSet frontier{start};
        while (!frontier.empty()) {
            VertexSet next;
            for (int w : frontier) next |= g.neighbors(w) & deg2;
            frontier = next - run;
            run |= frontier;
        }
        seen |= run;
        VertexSet span = run;
        for (int w : run) span |= g.neighbors(w);
        const int need = (run.size() + 2) / 3;
        if (need > 0) out.push_back({span, need});
    }
    return out;
}

namespace {

enum class Accept { Fair, FairK, Dominating };

constexpr int kNotDominating = -1;
constexpr int kNotFair = -2;

// Depth-first search over include/exclude decisions, highest vertex first.
// Vertices >= pos are decided; the "exclude" branch is explored before
// "include", so accepted sets come out in increasing numeric order.
class Search {
public:
    Search(const Graph& g, Accept accept, int k, int target)
        : n_(g.order()), accept_(accept), k_(k), target_(target), chains_(degree_two_chains(g)) {
        for (int v = 0; v < n_; ++v) adj_[v] = g.neighbors(v).bits();
        for (int b = 0; b <= n_; ++b) {
            std::uint64_t dead = 0;
            for (int u = 0; u < n_; ++u)
                if ((adj_[u] & low_mask(b)) == 0) dead |= std::uint64_t{1} << u;
            dead_at_[b] = dead;
        }
        reach_ = g.max_degree() + 1;
        all_ = low_mask(n_);
    }

    struct State {
        int pos;
        std::uint64_t chosen;
        std::uint64_t cover;
    };

    State root() const { return {n_, 0, 0}; }

    // Prefixes at depth `depth` below the root that survive pruning, in search order.
    std::vector<State> split(int depth) const {
        std::vector<State> out;
        expand(root(), std::max(0, n_ - depth), out);
        return out;
    }

    template <class Visit>
    void run(const State& s, Visit&& visit) const {
        if (!viable(s)) return;
        if (s.pos == 0) {
            const int cls = leaf_class(s.chosen);
            if (accepts(cls)) visit(s.chosen);
            return;
        }
        const int v = s.pos - 1;
        run(State{v, s.chosen, s.cover}, visit);
        run(State{v, s.chosen | (std::uint64_t{1} << v), s.cover | adj_[v]}, visit);
    }

private:
    static constexpr std::uint64_t low_mask(int b) {
        return b >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << b) - 1;
    }

    void expand(const State& s, int stop, std::vector<State>& out) const {
        if (!viable(s)) return;
        if (s.pos <= stop) {
            out.push_back(s);
            return;
        }
        const int v = s.pos - 1;
        expand(State{v, s.chosen, s.cover}, stop, out);
        expand(State{v, s.chosen | (std::uint64_t{1} << v), s.cover | adj_[v]}, stop, out);
    }

    bool viable(const State& s) const {
        const int picked = std::popcount(s.chosen);
        const std::uint64_t undecided = low_mask(s.pos);
        const std::uint64_t decided_out = all_ & ~undecided & ~s.chosen;
        // An excluded, still undominated vertex with no neighbour left to pick.
        if (decided_out & ~s.cover & dead_at_[s.pos]) return false;
        if (target_ >= 0) {
            const int left = target_ - picked;
            if (left < 0 || left > s.pos) return false;
            const std::uint64_t undominated = all_ & ~s.chosen & ~s.cover;
            if (std::popcount(undominated) > left * reach_) return false;
        }
        for (const auto& c : chains_) {
            const std::uint64_t span = c.span.bits();
            if (std::popcount(span & s.chosen) + std::popcount(span & undecided) < c.need) return false;
        }
        return true;
    }

    // kNotDominating, kNotFair, 0 for the full vertex set, or the fairness constant k.
    int leaf_class(std::uint64_t chosen) const {
        std::uint64_t outside = all_ & ~chosen;
        if (outside == 0) return 0;
        int common = -1;
        bool fair = true;
        while (outside) {
            const int v = std::countr_zero(outside);
            outside &= outside - 1;
            const int k = std::popcount(adj_[v] & chosen);
            if (k == 0) return kNotDominating;
            if (common < 0) common = k;
            else if (k != common) fair = false;
        }
        return fair ? common : kNotFair;
    }

    bool accepts(int cls) const {
        switch (accept_) {
            case Accept::Fair: return cls >= 0;
            case Accept::FairK: return cls == 0 || cls == k_;
            case Accept::Dominating: return cls != kNotDominating;
        }
        return false;
    }

    int n_;
    Accept accept_;
    int k_;
    int target_;
    std::vector<ChainBound> chains_;
    std::array<std::uint64_t, 64> adj_{};
    std::array<std::uint64_t, 65> dead_at_{};
    int reach_ = 1;
    std::uint64_t all_ = 0;
};

// Prefix depth is fixed so the task list, and hence the merge order, does not
// depend on the worker count.
constexpr int kSplitDepth = 10;

template <class Result, class Work>
std::vector<Result> run_tasks(const Search& search, int workers, Work work) {
    const auto tasks = search.split(kSplitDepth);
    std::vector<Result> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = work(tasks[i]);
    };
    const int threads = std::clamp(workers, 1, static_cast<int>(std::max<std::size_t>(1, tasks.size())));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    return results;
}

void prepare(const Graph& g, const EngineOptions& opts) {
    check_cap(g, opts);
    if (opts.cap > kDefaultEnumerationCap && g.order() > kDefaultEnumerationCap) {
        std::cerr << "warning: exhaustive search on " << g.order() << " vertices (above the default cap of "
                  << kDefaultEnumerationCap << ") may take a very long time\n";
    }
}

using SizeCounts = std::array<std::uint64_t, kMaxVertices + 1>;

SizeCounts count_by_size(const Graph& g, Accept accept, int k, int target, const EngineOptions& opts) {
    const Search search(g, accept, k, target);
    auto parts = run_tasks<SizeCounts>(search, opts.workers, [&](const Search::State& s) {
        SizeCounts local{};
        search.run(s, [&](std::uint64_t chosen) { ++local[std::popcount(chosen)]; });
        return local;
    });
    SizeCounts total{};
    for (const auto& p : parts)
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += p[i];
    return total;
}

bool exists(const Graph& g, Accept accept, int k, int size, const EngineOptions& opts) {
    return count_by_size(g, accept, k, size, opts)[static_cast<std::size_t>(size)] > 0;
}

}  // namespace

Count count_fd(const Graph& g, int i, const EngineOptions& opts) {
    prepare(g, opts);
    if (i < 0 || i > g.order()) return 0;
    return Count(count_by_size(g, Accept::Fair, 0, i, opts)[static_cast<std::size_t>(i)]);
}

std::vector<VertexSet> enumerate_fd(const Graph& g, int i, const EngineOptions& opts) {
    prepare(g, opts);
    if (i < 0 || i > g.order()) return {};
    const Search search(g, Accept::Fair, 0, i);
    auto parts = run_tasks<std::vector<VertexSet>>(search, opts.workers, [&](const Search::State& s) {
        std::vector<VertexSet> local;
        search.run(s, [&](std::uint64_t chosen) { local.emplace_back(chosen); });
        return local;
    });
    std::vector<VertexSet> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

FairDomPolynomial fd_polynomial(const Graph& g, const EngineOptions& opts) {
    prepare(g, opts);
    const SizeCounts counts = count_by_size(g, Accept::Fair, 0, -1, opts);
    FairDomPolynomial p;
    p.order = g.order();
    for (int i = 0; i <= g.order(); ++i)
        if (counts[static_cast<std::size_t>(i)] != 0) p.coeffs[i] = Count(counts[static_cast<std::size_t>(i)]);
    return p;
}

int fd_number(const Graph& g, const EngineOptions& opts) {
    prepare(g, opts);
    for (int i = 1; i < g.order(); ++i)
        if (exists(g, Accept::Fair, 0, i, opts)) return i;
    return g.order();
}

int fd_k_number(const Graph& g, int k, const EngineOptions& opts) {
    if (k < 1) throw InputError("fairness constant k must be at least 1");
    prepare(g, opts);
    for (int i = 1; i < g.order(); ++i)
        if (exists(g, Accept::FairK, k, i, opts)) return i;
    return g.order();
}

int gamma(const Graph& g, const EngineOptions& opts) {
    prepare(g, opts);
    for (int i = 1; i < g.order(); ++i)
        if (exists(g, Accept::Dominating, 0, i, opts)) return i;
    return g.order();
}

}  // namespace fairdom
