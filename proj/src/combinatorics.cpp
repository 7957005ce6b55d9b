#include "fairdom/combinatorics.hpp"

#include "fairdom/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace fairdom {

Count binomial(long long n, long long r) {
    if (n < 0 || r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    Count c = 1;
    for (long long i = 1; i <= r; ++i) {
        c *= n - r + i;
        c /= i;  // exact: c is C(n-r+i, i) after this step
    }
    return c;
}

Count multinomial(long long m, const std::vector<long long>& parts) {
    long long total = 0;
    for (long long t : parts) {
        if (t < 0) throw DomainError("multinomial: negative part " + std::to_string(t));
        total += t;
    }
    if (total != m)
        throw DomainError("multinomial: parts sum to " + std::to_string(total) + ", header is " + std::to_string(m));
    Count c = 1;
    long long placed = 0;
    for (long long t : parts) {
        placed += t;
        c *= binomial(placed, t);
    }
    return c;
}

int Partition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Count Partition::arrangements() const {
    std::map<int, long long> mult;
    for (int t : parts) ++mult[t];
    std::vector<long long> counts;
    for (auto [part, m] : mult) counts.push_back(m);
    return multinomial(static_cast<long long>(parts.size()), counts);
}

std::string Partition::to_string() const {
    std::string out;
    for (int t : parts) {
        if (!out.empty()) out += '+';
        out += std::to_string(t);
    }
    return out;
}

namespace {

void partitions_rec(int remaining, int slots, int max_part, int min_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (slots == 0) {
        if (remaining == 0) out.push_back(Partition{cur});
        return;
    }
    const int hi = std::min(max_part, remaining - (slots - 1) * min_part);
    // The largest remaining part must be at least the average, or later parts would exceed it.
    const int lo = std::max(min_part, (remaining + slots - 1) / slots);
    for (int t = hi; t >= lo; --t) {
        cur.push_back(t);
        partitions_rec(remaining - t, slots - 1, t, min_part, cur, out);
        cur.pop_back();
    }
}

int blocks_for(int n, int k, int gap) {
    if (k <= 0 || k >= n) return 0;
    if (gap == 1) return n - k;
    if ((n - k) % 2 != 0) return 0;
    return (n - k) / 2;
}

// Distinct rotations of a cyclic 0/1 string: its least period.
int orbit_size(const std::string& s) {
    const std::string doubled = s + s;
    return static_cast<int>(doubled.find(s, 1));
}

}  // namespace

std::vector<Partition> partitions(int k, int m, int min_part) {
    if (m < 1) throw InputError("partitions: part count must be at least 1");
    if (k < 0) throw InputError("partitions: k must be non-negative");
    if (min_part != 0 && min_part != 1) throw InputError("partitions: min_part must be 0 or 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(k, m, k, min_part, cur, out);
    return out;
}

std::string least_rotation(const std::string& bits) {
    const std::string s = bits + bits;
    const int len = static_cast<int>(s.size());
    std::vector<int> fail(static_cast<std::size_t>(len), -1);
    int best = 0;
    for (int j = 1; j < len; ++j) {
        const char c = s[j];
        int i = fail[j - best - 1];
        while (i != -1 && c != s[best + i + 1]) {
            if (c < s[best + i + 1]) best = j - i - 1;
            i = fail[i];
        }
        if (c != s[best + i + 1]) {
            if (c < s[best]) best = j;
            fail[j - best] = -1;
        } else {
            fail[j - best] = i + 1;
        }
    }
    return s.substr(static_cast<std::size_t>(best), bits.size());
}

namespace {

constexpr long kEnumerationLimit = 200000;

}  // namespace

std::vector<BlockPatternCount> cycle_block_breakdown(int n, int k, int gap) {
    if (n < 3) throw InputError("cycle_block_count: cycle order must be at least 3");
    if (gap != 1 && gap != 2) throw InputError("cycle_block_count: gap must be 1 or 2");
    const int b = blocks_for(n, k, gap);
    std::vector<BlockPatternCount> out;
    if (b == 0 || b > k) return out;
    for (const Partition& p : partitions(k, b, 1)) {
        const Count orderings = p.arrangements();
        if (orderings > kEnumerationLimit) {
            // (subset, marked block) pairs are exactly (composition, start vertex) pairs.
            out.push_back({p, n * orderings / b});
            continue;
        }
        std::vector<int> composition(p.parts.rbegin(), p.parts.rend());
        std::set<std::string> classes;
        do {
            std::string bits;
            bits.reserve(static_cast<std::size_t>(n));
            for (int t : composition) {
                bits.append(static_cast<std::size_t>(t), '1');
                bits.append(static_cast<std::size_t>(gap), '0');
            }
            classes.insert(least_rotation(bits));
        } while (std::next_permutation(composition.begin(), composition.end()));
        Count subsets = 0;
        for (const auto& c : classes) subsets += orbit_size(c);
        out.push_back({p, subsets});
    }
    return out;
}

Count cycle_block_count(int n, int k, int gap) {
    if (n < 3) throw InputError("cycle_block_count: cycle order must be at least 3");
    if (gap != 1 && gap != 2) throw InputError("cycle_block_count: gap must be 1 or 2");
    const int b = blocks_for(n, k, gap);
    if (b == 0 || b > k) return 0;
    if (const Count compositions = binomial(k - 1, b - 1); compositions > kEnumerationLimit)
        return n * compositions / b;
    Count total = 0;
    for (const auto& part : cycle_block_breakdown(n, k, gap)) total += part.subsets;
    return total;
}

CycleFormulaValue published_cycle_formula(int n, int k, CycleFamily family, const CycleFormulaOptions& options) {
    CycleFormulaValue result;
    if (n < 3 || k < 1 || k >= n) {
        result.failure = "parameters outside 3 <= n, 1 <= k < n";
        return result;
    }
    const int removed = n - k;
    int blocks = removed;
    int min_part = 1;
    Rational prefactor(1, removed);
    if (family == CycleFamily::B) {
        if (removed % 2 != 0) {
            result.failure = "n-k is odd, so the B family has no (n-k)/2 blocks";
            return result;
        }
        blocks = removed / 2;
        min_part = options.b_min_part;
        prefactor = Rational(2, removed);
    }
    Rational size = 0;
    for (const Partition& p : partitions(k, blocks, min_part)) {
        Count coefficient;
        if (options.reading == MultinomialReading::PartMultiplicities) {
            coefficient = p.arrangements();
        } else {
            std::vector<long long> parts(p.parts.begin(), p.parts.end());
            try {
                coefficient = multinomial(blocks, parts);
            } catch (const DomainError& e) {
                result.failure = "term " + p.to_string() + ": " + e.what();
                return result;
            }
        }
        size += prefactor * Rational(coefficient);
    }
    result.family_size = size;
    const Rational scaled = size * n;
    if (boost::multiprecision::denominator(scaled) != 1) {
        result.failure = "n*|family| = " + scaled.str() + " is not an integer";
        return result;
    }
    result.value = boost::multiprecision::numerator(scaled);
    return result;
}

}  // namespace fairdom
