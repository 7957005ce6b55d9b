#pragma once

#include "fairdom/count.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fairdom {

/// C(n, r); zero whenever r < 0, r > n or n < 0.
Count binomial(long long n, long long r);

/// m! / (t_1! ... t_j!). Throws DomainError unless the parts are non-negative and sum to m.
Count multinomial(long long m, const std::vector<long long>& parts);

/// An integer partition, parts in non-increasing order.
struct Partition {
    std::vector<int> parts;

    int sum() const;
    int count() const { return static_cast<int>(parts.size()); }
    /// Number of distinct orderings of the parts (compositions with this multiset of parts).
    Count arrangements() const;
    std::string to_string() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;
};

/// Partitions of k into exactly m parts, each >= min_part (0 or 1); lexicographically
/// decreasing (largest first part first).
std::vector<Partition> partitions(int k, int m, int min_part = 1);

// Structural count of fair-domination block patterns on the n-cycle.
//
// A k-subset of Z_n whose maximal runs of chosen vertices ("blocks") are all
// separated by exactly `gap` unchosen vertices. gap = 1 gives b = n-k blocks,
// gap = 2 gives b = (n-k)/2 blocks. Subsets are produced by laying out every
// composition of k into b positive parts from vertex 0, then deduplicated by
// their least bit-rotation; each distinct rotation class contributes its orbit
// size. Returns 0 when the block structure is infeasible.
//
// Above 200000 compositions the layout is skipped and n * (#compositions) / b is
// used instead: each subset with b blocks arises from exactly b (composition,
// start vertex) pairs.
Count cycle_block_count(int n, int k, int gap);

struct BlockPatternCount {
    Partition partition;  // block sizes
    Count subsets;        // distinct subsets of Z_n with exactly these block sizes
};
/// cycle_block_count split by the multiset of block sizes; ordered as partitions().
std::vector<BlockPatternCount> cycle_block_breakdown(int n, int k, int gap);

/// Least rotation of a 0/1 string (Booth's algorithm); used as the canonical form of a subset of Z_n.
std::string least_rotation(const std::string& bits);

enum class CycleFamily { A, B };

// How the multinomial header in the published |A| / |B| sums is read. The
// sums range over partitions t_1 + ... + t_b = k of k into b parts (b = n-k for A,
// (n-k)/2 for B), but the coefficient is written with header b.
enum class MultinomialReading {
    // Bottom entries are the multiplicities of equal parts, so the coefficient
    // b! / prod(mult!) counts the distinct orderings of the partition.
    PartMultiplicities,
    // Bottom entries are the parts t_i themselves; only defined when the parts
    // happen to sum to b, otherwise the term is a domain failure.
    PartsLiteral,
};

struct CycleFormulaOptions {
    MultinomialReading reading = MultinomialReading::PartMultiplicities;
    /// Minimum B-family part size; 0 follows the "non-negative" wording, 1 the structural definition.
    int b_min_part = 1;
};

struct CycleFormulaValue {
    std::optional<Rational> family_size;  // |A| or |B| as written (may be fractional)
    std::optional<Count> value;           // n * family_size when that is an integer
    std::string failure;                  // set when value is empty
};

/// Literal evaluation of n * |A| or n * |B| from the published summation.
CycleFormulaValue published_cycle_formula(int n, int k, CycleFamily family, const CycleFormulaOptions& options = {});

}  // namespace fairdom
