#include "fairdom/closed_forms.hpp"

#include "fairdom/combinatorics.hpp"
#include "fairdom/errors.hpp"

namespace fairdom {

namespace {

FormulaResult in_range(Count value, std::string source) {
    FormulaResult r;
    r.value = std::move(value);
    r.applicability = Applicability::InRange;
    r.source = std::move(source);
    return r;
}

FormulaResult out_of_range(std::string source, std::string reason) {
    FormulaResult r;
    r.applicability = Applicability::OutOfRange;
    r.source = std::move(source);
    r.reason = std::move(reason);
    return r;
}

FormulaResult excluded(std::string source, std::string reason) {
    FormulaResult r = out_of_range(std::move(source), std::move(reason));
    r.applicability = Applicability::StatementExcludes;
    return r;
}

FormulaResult first_in_range(const std::vector<FormulaResult>& all, const std::string& family, int n, int k) {
    for (const auto& r : all)
        if (r.in_range()) return r;
    for (const auto& r : all)
        if (r.applicability == Applicability::StatementExcludes) return r;
    return out_of_range(family, "no statement covers n=" + std::to_string(n) + ", size " + std::to_string(k));
}

}  // namespace

FormulaResult knn_count(int n, int r) {
    if (n < 1) throw InputError("knn_count: part size must be at least 1");
    if (r < 1 || r > 2 * n) return out_of_range("knn", "r outside [1, 2n]");
    if (r == 1) {
        if (n == 1) return out_of_range("knn", "r = 1 with n = 1 is outside the theorem");
        // One vertex of X leaves the other X vertices undominated.
        FormulaResult res = in_range(0, "knn r=1 (extension)");
        res.extension = true;
        res.reason = "single vertex cannot dominate K_{n,n} for n >= 2; theorem starts at r = 2";
        return res;
    }
    if (r % 2 == 1) {
        if (r == n) return in_range(2, "knn(i) odd r=n");
        if (r < n) return in_range(0, "knn(i) odd r<n");
        return in_range(2 * binomial(n, r - n), "knn(i) odd r>n");
    }
    const Count half = binomial(n, r / 2);
    if (r < n) return in_range(half * half, "knn(ii) even r<n");
    if (r == n) return in_range(half * half + 2, "knn(ii) even r=n");
    const Count rest = binomial(n, r - n);
    return in_range(half * half + rest * rest, "knn(ii) even r>n");
}

FormulaResult cycle_count(int n, int k) {
    if (n < 3) throw InputError("cycle_count: cycle order must be at least 3");
    if (k < 1 || k > n) return out_of_range("cycle", "k outside [1, n]");
    if (k == n) return in_range(1, "cycle k=n");
    FormulaResult r = in_range(cycle_block_count(n, k, 1) + cycle_block_count(n, k, 2), "cycle structural");

    // Published route: the four parity / size cases of n(|A| + |B|).
    const bool even = (n - k) % 2 == 0;
    const bool wide = n <= 2 * k;
    if (!even && !wide) {
        r.published_literal = 0;
        return r;
    }
    Rational total = 0;
    const auto add = [&](CycleFamily family) {
        const CycleFormulaValue v = published_cycle_formula(n, k, family);
        if (!v.family_size) {
            r.published_literal_failure = v.failure;
            return false;
        }
        total += *v.family_size;
        return true;
    };
    if (wide && !add(CycleFamily::A)) return r;
    if (even && !add(CycleFamily::B)) return r;
    const Rational scaled = total * n;
    if (boost::multiprecision::denominator(scaled) != 1) {
        r.published_literal_failure = "n(|A|+|B|) = " + scaled.str() + " is not an integer";
        return r;
    }
    r.published_literal = boost::multiprecision::numerator(scaled);
    return r;
}

FormulaResult cycle_fd_number(int n) {
    if (n < 3) throw InputError("cycle_fd_number: cycle order must be at least 3");
    int fd = (n + 2) / 3;
    if (n % 3 == 2 && n >= 5) ++fd;
    return in_range(fd, "cycle lemma(i)");
}

int cycle_corollary_size(int n, CycleCorollary which) {
    switch (which) {
        case CycleCorollary::I: return n - 2;
        case CycleCorollary::II: return n - 3;
        case CycleCorollary::III: return n >= 3 ? static_cast<int>(*cycle_fd_number(n).value) : 0;
    }
    return 0;
}

FormulaResult cycle_corollary(int n, CycleCorollary which) {
    const Count m = n;
    switch (which) {
        case CycleCorollary::I:
            if (n < 3) return out_of_range("cycle corollary(i)", "needs n >= 3");
            return in_range((m - 1) * m / 2, "cycle corollary(i)");
        case CycleCorollary::II:
            if (n < 6) return out_of_range("cycle corollary(ii)", "needs n >= 6");
            return in_range((m - 5) * (m - 4) * m / 6, "cycle corollary(ii)");
        case CycleCorollary::III:
            if (n < 7) return out_of_range("cycle corollary(iii)", "needs n >= 7");
            return in_range((m - 8) * (m - 7) * m / 6, "cycle corollary(iii)");
    }
    return out_of_range("cycle corollary", "unknown part");
}

std::vector<FormulaResult> path_statements(int n, int j) {
    std::vector<FormulaResult> out;
    if (n < 2 || j < 1 || j > n) return out;
    const Count m = n;
    if (j == n) out.push_back(in_range(1, "path(i) j=n"));
    if (j == n - 1) out.push_back(in_range(m, "path(i) j=n-1"));
    if (j == n - 2) out.push_back(in_range((m - 3) * (m - 2) / 2 + 1, "path(ii) j=n-2"));
    if (j == n - 4) {
        Count sum = 0;
        for (long long i = 1; i <= n - 3; ++i) sum += binomial(n - 3 - i, n - 3 - 3 * i);
        out.push_back(in_range(sum, "path(iii) j=n-4"));
    }
    const int k = n / 3;
    if (k >= 2) {
        if (n % 3 == 0 && j == k) out.push_back(in_range(1, "path P_3k,k"));
        if (n % 3 == 1 && j == k + 1) out.push_back(in_range(3, "path P_3k+1,k+1"));
        if (n % 3 == 2 && j == k + 1) out.push_back(in_range(2, "path P_3k+2,k+1"));
    }
    return out;
}

FormulaResult path_special(int n, int j) {
    if (n < 1) throw InputError("path_special: path order must be at least 1");
    return first_in_range(path_statements(n, j), "path", n, j);
}

FormulaResult friendship_count(int n, int size) {
    if (n < 1) throw InputError("friendship_count: triangle count must be at least 1");
    const Count m = n;
    if (size == 2 * n + 1) return in_range(1, "friendship full set");
    if (size == 2 * n) return in_range(2 * m + 1, "friendship size 2n");
    if (size >= 2 && size % 2 == 0 && size / 2 <= n / 2) return in_range(0, "friendship even size");
    if (size == 3 && n >= 3) return in_range(m, "friendship(i) size 3");
    if (size == 5 && n >= 5) return in_range(m * (m - 1) / 2, "friendship(ii) size 5");
    return out_of_range("friendship", "no statement covers n=" + std::to_string(n) + ", size " + std::to_string(size));
}

PathCounter oracle_path_counter(const EngineOptions& opts) {
    return [opts](int order, int size) -> std::optional<Count> {
        if (size <= 0 || size > order) return Count(0);
        if (order <= std::min(opts.cap, kMaxVertices)) return count_fd(path(order), size, opts);
        FormulaResult f = path_special(order, size);
        if (f.in_range()) return f.value;
        return std::nullopt;
    };
}

std::string cactus_part_name(CactusPart part) {
    static const char* names[] = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii"};
    return std::string("cactus(") + names[static_cast<int>(part)] + ")";
}

int cactus_part_size(int n, CactusPart part) {
    switch (part) {
        case CactusPart::I: return 2 * n + 1;
        case CactusPart::II: return 2 * n;
        case CactusPart::III: return 2 * n - 1;
        case CactusPart::IV: return 2 * n - 2;
        case CactusPart::V: return 2 * n - 3;
        case CactusPart::VI: return 2 * n - 4;
        case CactusPart::VII: return n + 1;
        case CactusPart::VIII: return n;
    }
    return 0;
}

FormulaResult cactus_part(int n, CactusPart part, const PathCounter& paths) {
    if (n < 1) throw InputError("cactus_part: triangle count must be at least 1");
    const std::string name = cactus_part_name(part);
    if (cactus_part_size(n, part) < 1) return out_of_range(name, "size below 1");
    const auto path_term = [&](int order, int size, FormulaResult& r) -> bool {
        r.oracle_dependent = true;
        std::optional<Count> v = paths(order, size);
        if (!v) {
            r.value.reset();
            r.reason = "needs d_f(P_" + std::to_string(order) + "," + std::to_string(size) +
                       "), which is beyond the oracle cap";
            return false;
        }
        *r.value += *v;
        return true;
    };
    switch (part) {
        case CactusPart::I: return in_range(1, name);
        case CactusPart::II: return in_range(binomial(2 * n + 1, 1), name);
        case CactusPart::III: return in_range(binomial(n, n - 2) + binomial(n - 1, n - 3) + 2 * n, name);
        case CactusPart::IV: return in_range(binomial(n, n - 3) + 2 * binomial(n - 1, n - 3), name);
        case CactusPart::V: {
            if (n == 4) return excluded(name, "stated for n != 4");
            FormulaResult r = in_range(binomial(n, n - 4) + 1, name);
            path_term(n + 1, n - 3, r);
            return r;
        }
        case CactusPart::VI: {
            if (n < 6) return out_of_range(name, "stated for n >= 6");
            FormulaResult r = in_range(binomial(n, n - 5), name);
            if (n > 9) path_term(n + 1, n - 4, r);
            return r;
        }
        case CactusPart::VII:
            if (n == 1 || n == 2 || n == 4) return excluded(name, "stated for n != 1, 2, 4");
            return in_range(4, name);
        case CactusPart::VIII:
            if (n == 1 || n == 3) return excluded(name, "stated for n != 1, 3");
            return in_range(0, name);
    }
    return out_of_range(name, "unknown part");
}

std::vector<FormulaResult> cactus_statements(int n, int size, const PathCounter& paths) {
    std::vector<FormulaResult> out;
    for (int p = 0; p < 8; ++p) {
        const auto part = static_cast<CactusPart>(p);
        if (cactus_part_size(n, part) == size) out.push_back(cactus_part(n, part, paths));
    }
    return out;
}

FormulaResult cactus_count(int n, int size, const PathCounter& paths) {
    if (n < 1) throw InputError("cactus_count: triangle count must be at least 1");
    return first_in_range(cactus_statements(n, size, paths), "cactus", n, size);
}

FairDomPolynomial complete_poly(int n) {
    if (n < 1) throw InputError("complete_poly: order must be at least 1");
    FairDomPolynomial p;
    p.order = n;
    for (int i = 1; i <= n; ++i) p.coeffs[i] = binomial(n, i);
    return p;
}

std::vector<FormulaResult> family_statements(FamilyTag tag, int n, int k, const PathCounter& paths) {
    std::vector<FormulaResult> out;
    const auto keep = [&](FormulaResult r) {
        if (r.in_range() && r.value) out.push_back(std::move(r));
    };
    switch (tag) {
        case FamilyTag::Cycle:
            keep(cycle_count(n, k));
            for (auto which : {CycleCorollary::I, CycleCorollary::II, CycleCorollary::III})
                if (cycle_corollary_size(n, which) == k) keep(cycle_corollary(n, which));
            if (n == 9 && k == 6) keep(in_range(0, "C_9 remark: no x^6 term"));
            break;
        case FamilyTag::Path:
            for (auto& r : path_statements(n, k)) keep(std::move(r));
            break;
        case FamilyTag::CompleteBipartite:
            keep(knn_count(n, k));
            if (n == 4 && k == 2) keep(in_range(16, "K_4,4 remark: 16x^2"));
            if (n == 4 && k == 3) keep(in_range(0, "K_4,4 remark: no x^3 term"));
            break;
        case FamilyTag::Friendship: keep(friendship_count(n, k)); break;
        case FamilyTag::TriangularCactus:
            for (auto& r : cactus_statements(n, k, paths)) keep(std::move(r));
            break;
        case FamilyTag::Complete:
            if (k >= 1 && k <= n) keep(in_range(binomial(n, k), "complete (1+x)^n-1"));
            break;
        case FamilyTag::Empty:
            if (k >= 1 && k <= n) keep(in_range(k == n ? 1 : 0, "empty convention"));
            break;
        case FamilyTag::Corona:
        case FamilyTag::Join: break;
    }
    return out;
}

std::optional<FormulaResult> closed_form(const FamilySpec& spec, int k, const PathCounter& paths) {
    if (spec.tag == FamilyTag::Corona || spec.tag == FamilyTag::Join) return std::nullopt;
    if (spec.tag == FamilyTag::CompleteBipartite && spec.params.at(0) != spec.params.at(1)) return std::nullopt;
    const auto all = family_statements(spec.tag, spec.params.at(0), k, paths);
    if (all.empty()) return std::nullopt;
    return all.front();
}

}  // namespace fairdom
