#include "doctest.h"

#include "fairdom/closed_forms.hpp"
#include "fairdom/combinatorics.hpp"
#include "fairdom/errors.hpp"
#include "fairdom/verify.hpp"
#include "naive_oracle.hpp"

using namespace fairdom;

namespace {

Count value(const FormulaResult& r) {
    REQUIRE(r.in_range());
    REQUIRE(r.value.has_value());
    return *r.value;
}

const std::vector<std::uint64_t>& reference(const std::string& family, int n) {
    static std::map<std::pair<std::string, int>, std::vector<std::uint64_t>> memo;
    auto& slot = memo[{family, n}];
    if (slot.empty()) {
        naive::SmallGraph g;
        if (family == "cycle") g = naive::cycle(n);
        else if (family == "path") g = naive::path(n);
        else if (family == "knn") g = naive::knn(n);
        else if (family == "friendship") g = naive::friendship(n);
        else if (family == "cactus") g = naive::cactus(n);
        slot = naive::fd_counts(g);
    }
    return slot;
}

}  // namespace

TEST_CASE("complete bipartite statement") {
    CHECK(value(knn_count(4, 2)) == 16);
    CHECK(value(knn_count(4, 3)) == 0);
    CHECK(value(knn_count(4, 4)) == 38);
    CHECK(value(knn_count(3, 5)) == 6);
    CHECK(knn_count(4, 1).extension);
    CHECK(value(knn_count(4, 1)) == 0);
    CHECK_FALSE(knn_count(1, 1).in_range());
    CHECK_FALSE(knn_count(3, 7).in_range());
    CHECK_THROWS_AS(knn_count(0, 2), InputError);
    CHECK(value(knn_count(100, 101)) == 200);
    CHECK(value(knn_count(50, 50)) == binomial(50, 25) * binomial(50, 25) + 2);
}

TEST_CASE("complete bipartite statement against the reference oracle") {
    for (int n = 1; n <= 5; ++n) {
        const auto& truth = reference("knn", n);
        for (int r = 1; r <= 2 * n; ++r) {
            const auto f = knn_count(n, r);
            if (!f.in_range()) continue;
            if (r % 2 == 0 && r > n) {
                // Sets mixing r/2 + r/2 vertices, plus one full part with r-n of the other
                // (two choices of part); at r = 2n only V remains.
                const Count actual = r == 2 * n ? Count(1) : binomial(n, r / 2) * binomial(n, r / 2) + 2 * binomial(n, r - n);
                CHECK(truth[r] == actual);
                CHECK(*f.value != truth[r]);
            } else {
                CHECK(*f.value == truth[r]);
            }
        }
    }
}

TEST_CASE("cycle statements") {
    CHECK(value(cycle_count(8, 4)) == 14);
    CHECK(value(cycle_count(9, 3)) == 3);
    CHECK(value(cycle_count(6, 4)) == 15);
    CHECK(value(cycle_count(7, 7)) == 1);
    CHECK(value(cycle_count(7, 6)) == 7);
    CHECK(cycle_count(8, 4).published_literal == Count(14));
    CHECK_FALSE(cycle_count(8, 9).in_range());
    CHECK_THROWS_AS(cycle_count(2, 1), InputError);
    CHECK(value(cycle_count(200, 100)) == 2 + 200 * binomial(99, 49) / 50);

    CHECK(value(cycle_fd_number(9)) == 3);
    CHECK(value(cycle_fd_number(5)) == 3);
    CHECK(value(cycle_fd_number(3)) == 1);
    for (int n = 3; n <= 14; ++n) {
        const auto& truth = reference("cycle", n);
        const int fd = static_cast<int>(value(cycle_fd_number(n)));
        CHECK(truth[fd] > 0);
        for (int i = 1; i < fd; ++i) CHECK(truth[i] == 0);
        for (int k = 1; k <= n; ++k) CHECK(value(cycle_count(n, k)) == truth[k]);
    }

    CHECK(value(cycle_corollary(7, CycleCorollary::I)) == 21);
    CHECK(value(cycle_corollary(8, CycleCorollary::II)) == 16);
    CHECK(value(cycle_corollary(11, CycleCorollary::III)) == 22);
    CHECK(value(cycle_corollary(7, CycleCorollary::III)) == 0);
    CHECK(reference("cycle", 7)[3] == 7);
    CHECK_FALSE(cycle_corollary(5, CycleCorollary::II).in_range());
    CHECK_FALSE(cycle_corollary(6, CycleCorollary::III).in_range());
}

TEST_CASE("path statements") {
    CHECK(value(path_special(8, 4)) == 6);
    CHECK(value(path_special(9, 3)) == 1);
    CHECK(value(path_special(7, 3)) == 3);
    CHECK(value(path_special(6, 4)) == 7);
    CHECK(path_special(9, 4).applicability == Applicability::OutOfRange);
    CHECK(path_statements(10, 6).size() == 1);
    CHECK(reference("path", 10)[4] == 4);
    CHECK(value(path_special(10, 4)) == 3);
    CHECK(value(path_special(12, 8)) == 64);
    CHECK(reference("path", 12)[8] == 63);
    for (int n = 3; n <= 14; ++n) CHECK(value(path_special(n, n - 2)) == reference("path", n)[n - 2]);
}

TEST_CASE("friendship statements") {
    CHECK(value(friendship_count(3, 3)) == 3);
    CHECK(value(friendship_count(5, 5)) == 10);
    CHECK(value(friendship_count(4, 4)) == 0);
    CHECK(value(friendship_count(3, 7)) == 1);
    CHECK(value(friendship_count(3, 6)) == 7);
    CHECK_FALSE(friendship_count(2, 3).in_range());
    CHECK(reference("friendship", 2)[3] == 6);
    // Even sizes beyond 2*floor(n/2) are not covered, and are not zero.
    CHECK_FALSE(friendship_count(3, 4).in_range());
    CHECK(reference("friendship", 3)[4] == 8);
    for (int n = 1; n <= 5; ++n) {
        const auto& truth = reference("friendship", n);
        for (int s = 1; s <= 2 * n + 1; ++s) {
            const auto f = friendship_count(n, s);
            if (f.in_range()) CHECK(*f.value == truth[s]);
        }
    }
}

TEST_CASE("triangular cactus statements") {
    CHECK(value(cactus_count(5, 11)) == 1);
    CHECK(value(cactus_count(5, 10)) == 11);
    CHECK(value(cactus_count(5, 6)) == 4);
    // Part (iii) at n = 5 evaluates to 10 + 6 + 10; the reference count is 27.
    CHECK(cactus_count(5, 9).source == "cactus(iii)");
    CHECK(value(cactus_count(5, 9)) == 26);
    CHECK(reference("cactus", 5)[9] == 27);

    CHECK(cactus_part(4, CactusPart::V).applicability == Applicability::StatementExcludes);
    CHECK(cactus_part(2, CactusPart::VII).applicability == Applicability::StatementExcludes);
    CHECK(cactus_part(3, CactusPart::VIII).applicability == Applicability::StatementExcludes);
    CHECK(cactus_part(5, CactusPart::VI).applicability == Applicability::OutOfRange);
    CHECK(cactus_part(5, CactusPart::V).oracle_dependent);
    CHECK_FALSE(cactus_part(8, CactusPart::VI).oracle_dependent);
    CHECK(cactus_part(10, CactusPart::VI).oracle_dependent);

    const PathCounter blind = [](int, int) { return std::optional<Count>{}; };
    const auto unknown = cactus_part(7, CactusPart::V, blind);
    CHECK_FALSE(unknown.value.has_value());
    CHECK_FALSE(unknown.reason.empty());

    for (int n = 3; n <= 6; ++n) {
        const auto& truth = reference("cactus", n);
        for (auto part : {CactusPart::I, CactusPart::II, CactusPart::VII, CactusPart::VIII}) {
            const auto f = cactus_part(n, part);
            if (f.in_range()) CHECK(*f.value == truth[cactus_part_size(n, part)]);
        }
    }
}

TEST_CASE("complete graphs") {
    CHECK(complete_poly(1).coeffs == std::map<int, Count>{{1, 1}});
    CHECK(complete_poly(4).coeffs == std::map<int, Count>{{1, 4}, {2, 6}, {3, 4}, {4, 1}});
    CHECK(complete_poly(10).coefficient(5) == 252);
    CHECK_THROWS_AS(complete_poly(0), InputError);
}

TEST_CASE("closed_form dispatch") {
    CHECK(closed_form(parse_family("knn:4"), 2)->value == Count(16));
    CHECK_FALSE(closed_form(parse_family("kmn:2,3"), 2).has_value());
    CHECK_FALSE(closed_form(parse_family("corona(path:3,complete:1)"), 3).has_value());
    CHECK(closed_form(parse_family("complete:40"), 20)->value == binomial(40, 20));
    CHECK(closed_form(parse_family("empty:3"), 3)->value == Count(1));
    CHECK(closed_form(parse_family("empty:3"), 2)->value == Count(0));
    CHECK(closed_form(parse_family("cycle:8"), 4)->source == "cycle structural");
    CHECK_FALSE(closed_form(parse_family("path:9"), 4).has_value());
}

// Every in-range statement agrees with the reference oracle, or its cell is in the
// committed expected-errata list under that statement's name.
TEST_CASE("statements against the reference oracle and the errata list") {
    const auto expected = load_expected_errata();
    const auto listed = [&](const std::string& family, int n, int k, const std::string& source) {
        for (const auto& e : expected)
            if (e.family == family && e.n == n && e.k == k && ("," + e.failing + ",").find("," + source + ",") != std::string::npos)
                return true;
        return false;
    };
    const std::vector<std::pair<FamilyTag, std::pair<int, int>>> sweeps = {
        {FamilyTag::Cycle, {3, 12}},   {FamilyTag::Path, {2, 12}},       {FamilyTag::CompleteBipartite, {1, 5}},
        {FamilyTag::Friendship, {1, 5}}, {FamilyTag::TriangularCactus, {1, 5}}};
    int disagreements = 0;
    for (const auto& [tag, range] : sweeps)
        for (int n = range.first; n <= range.second; ++n) {
            const std::string name = family_name(tag);
            const auto& truth = reference(name, n);
            for (int k = 1; k < static_cast<int>(truth.size()); ++k)
                for (const auto& s : family_statements(tag, n, k)) {
                    if (*s.value == truth[k]) {
                        CHECK_FALSE(listed(name, n, k, s.source));
                    } else {
                        ++disagreements;
                        INFO(name << " n=" << n << " k=" << k << " " << s.source);
                        CHECK(listed(name, n, k, s.source));
                    }
                }
        }
    CHECK(disagreements > 0);
}
