#pragma once

#include "fairdom/count.hpp"
#include "fairdom/engine.hpp"
#include "fairdom/families.hpp"
#include "fairdom/polynomial.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fairdom {

enum class Applicability {
    InRange,        // the statement covers these parameters
    OutOfRange,     // parameters outside the statement's hypotheses; defer to the oracle
    StatementExcludes,  // parameters the statement explicitly excludes, e.g. "(n != 1, 2, 4)"
};

/// Value of one published counting statement at one parameter choice.
struct FormulaResult {
    std::optional<Count> value;
    Applicability applicability = Applicability::OutOfRange;
    /// Which statement produced the value, e.g. "knn(ii) r>n" or "cactus(vii)".
    std::string source;
    /// Violated hypothesis or exclusion when not in range; free-form note otherwise.
    std::string reason;
    /// Value depends on an exhaustive count of a path (cactus parts v and vi).
    bool oracle_dependent = false;
    /// Value supplied for parameters the statement does not cover (documented extension).
    bool extension = false;
    /// cycle_count only: n(|A| + |B|) evaluated from the published summations.
    std::optional<Count> published_literal;
    std::string published_literal_failure;

    bool in_range() const { return applicability == Applicability::InRange; }
};

/// d_f(K_{n,n}, r) as stated for r >= 2 (odd r > 2 / even r >= 2 cases).
/// r = 1 is answered with 0 for n >= 2 and flagged as an extension.
FormulaResult knn_count(int n, int r);

/// d_f(C_n, k) from the structural block enumerator; also carries the published
/// n(|A|+|B|) evaluation in published_literal for comparison.
FormulaResult cycle_count(int n, int k);

/// fd(C_n) = ceil(n/3), plus one when n = 2 (mod 3) and n >= 5.
FormulaResult cycle_fd_number(int n);

enum class CycleCorollary { I, II, III };
/// Cardinality the corollary speaks about: n-2, n-3 or fd(C_n).
int cycle_corollary_size(int n, CycleCorollary which);
FormulaResult cycle_corollary(int n, CycleCorollary which);

/// The two path theorems: j in {n, n-1, n-2, n-4} (n >= 2) and the
/// d_f(P_3k, k), d_f(P_3k+1, k+1), d_f(P_3k+2, k+1) regimes (k >= 2).
FormulaResult path_special(int n, int j);
/// Every path statement that covers (n, j); overlapping statements are all listed.
std::vector<FormulaResult> path_statements(int n, int j);

/// Friendship statements: even sizes 2i with 1 <= i <= floor(n/2), size 3 (n >= 3),
/// size 5 (n >= 5), and the top two coefficients 2n+1 and 2n.
FormulaResult friendship_count(int n, int size);

enum class CactusPart { I, II, III, IV, V, VI, VII, VIII };

/// d_f(P_order, size); used by cactus parts (v) and (vi). nullopt when unknown.
using PathCounter = std::function<std::optional<Count>(int order, int size)>;

/// Exhaustive count for paths within opts.cap, path_special beyond.
PathCounter oracle_path_counter(const EngineOptions& opts = {});

std::string cactus_part_name(CactusPart part);
/// Cardinality addressed by a part: 2n+1, 2n, ..., 2n-4, n+1, n.
int cactus_part_size(int n, CactusPart part);
FormulaResult cactus_part(int n, CactusPart part, const PathCounter& paths = oracle_path_counter());
/// First in-range part (in order i..viii) addressing `size`.
FormulaResult cactus_count(int n, int size, const PathCounter& paths = oracle_path_counter());
std::vector<FormulaResult> cactus_statements(int n, int size, const PathCounter& paths = oracle_path_counter());

/// D_f(K_n, x) = (1+x)^n - 1.
FairDomPolynomial complete_poly(int n);

/// Every in-range published statement about d_f(F, k) for the single-parameter
/// family instance F = family(tag, n). Cycle corollaries are included as extra entries.
std::vector<FormulaResult> family_statements(FamilyTag tag, int n, int k,
                                             const PathCounter& paths = oracle_path_counter());

/// The preferred closed form for d_f(F, k), if any statement covers it.
std::optional<FormulaResult> closed_form(const FamilySpec& spec, int k,
                                         const PathCounter& paths = oracle_path_counter());

}  // namespace fairdom
