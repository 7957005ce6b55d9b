#include "fairdom/families.hpp"

#include "fairdom/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace fairdom {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw InputError(what);
}

}  // namespace

Graph empty_graph(int n) {
    require(n >= 1, "empty graph needs at least one vertex");
    return Graph(n, {});
}

Graph complete(int n) {
    require(n >= 1, "complete graph needs at least one vertex");
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph path(int n) {
    require(n >= 1, "path needs at least one vertex");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph cycle(int n) {
    require(n >= 3, "cycle needs at least three vertices");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph complete_bipartite(int m, int n) {
    require(m >= 1 && n >= 1, "complete bipartite graph needs two non-empty parts");
    std::vector<Edge> e;
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < n; ++y) e.emplace_back(x, m + y);
    return Graph(m + n, e);
}

BipartiteParts bipartite_parts(int m, int n) {
    require(m >= 1 && n >= 1 && m + n <= kMaxVertices, "bipartite parts out of range");
    return {VertexSet::full(m), VertexSet::full(m + n) - VertexSet::full(m)};
}

Graph friendship(int n) {
    require(n >= 1, "friendship graph needs at least one triangle");
    std::vector<Edge> e;
    for (int i = 1; i <= n; ++i) {
        e.emplace_back(0, 2 * i - 1);
        e.emplace_back(0, 2 * i);
        e.emplace_back(2 * i - 1, 2 * i);
    }
    return Graph(2 * n + 1, e);
}

Graph triangular_cactus(int n) {
    require(n >= 1, "triangular cactus needs at least one triangle");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(n + i, n + i + 1);
    for (int i = 1; i <= n; ++i) {
        e.emplace_back(i - 1, n + i - 1);
        e.emplace_back(i - 1, n + i);
    }
    return Graph(2 * n + 1, e);
}

Graph corona(const Graph& g, const Graph& h) {
    require(g.order() >= 1 && h.order() >= 1, "corona of an empty graph");
    const int ng = g.order();
    const int nh = h.order();
    std::vector<Edge> e = g.edges();
    for (int i = 0; i < ng; ++i) {
        const int base = ng + i * nh;
        for (auto [u, v] : h.edges()) e.emplace_back(base + u, base + v);
        for (int u = 0; u < nh; ++u) e.emplace_back(i, base + u);
    }
    return Graph(ng + ng * nh, e);
}

Graph join(const Graph& g, const Graph& h) {
    require(g.order() >= 1 && h.order() >= 1, "join of an empty graph");
    const int ng = g.order();
    std::vector<Edge> e = g.edges();
    for (auto [u, v] : h.edges()) e.emplace_back(ng + u, ng + v);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < h.order(); ++v) e.emplace_back(u, ng + v);
    return Graph(ng + h.order(), e);
}

std::string family_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::Empty: return "empty";
        case FamilyTag::Complete: return "complete";
        case FamilyTag::CompleteBipartite: return "knn";
        case FamilyTag::Path: return "path";
        case FamilyTag::Cycle: return "cycle";
        case FamilyTag::Friendship: return "friendship";
        case FamilyTag::TriangularCactus: return "cactus";
        case FamilyTag::Corona: return "corona";
        case FamilyTag::Join: return "join";
    }
    return "?";
}

FamilyTag family_tag_from_name(std::string_view name) {
    if (name == "empty") return FamilyTag::Empty;
    if (name == "complete") return FamilyTag::Complete;
    if (name == "knn" || name == "kmn") return FamilyTag::CompleteBipartite;
    if (name == "path") return FamilyTag::Path;
    if (name == "cycle") return FamilyTag::Cycle;
    if (name == "friendship") return FamilyTag::Friendship;
    if (name == "cactus") return FamilyTag::TriangularCactus;
    if (name == "corona") return FamilyTag::Corona;
    if (name == "join") return FamilyTag::Join;
    throw InputError("unknown graph family `" + std::string(name) + "`");
}

FamilySpec family(FamilyTag tag, int n) {
    FamilySpec s;
    s.tag = tag;
    require(tag != FamilyTag::Corona && tag != FamilyTag::Join, "corona/join take two operands");
    s.params = tag == FamilyTag::CompleteBipartite ? std::vector<int>{n, n} : std::vector<int>{n};
    return s;
}

long long FamilySpec::order() const {
    switch (tag) {
        case FamilyTag::Empty:
        case FamilyTag::Complete:
        case FamilyTag::Path:
        case FamilyTag::Cycle: return params.at(0);
        case FamilyTag::CompleteBipartite: return static_cast<long long>(params.at(0)) + params.at(1);
        case FamilyTag::Friendship:
        case FamilyTag::TriangularCactus: return 2LL * params.at(0) + 1;
        case FamilyTag::Corona: {
            long long g = operands.at(0).order();
            return g + g * operands.at(1).order();
        }
        case FamilyTag::Join: return operands.at(0).order() + operands.at(1).order();
    }
    return 0;
}

Graph FamilySpec::build() const {
    if (order() > kMaxVertices)
        throw CapacityError(static_cast<int>(std::min<long long>(order(), 1'000'000'000)), kMaxVertices);
    switch (tag) {
        case FamilyTag::Empty: return empty_graph(params.at(0));
        case FamilyTag::Complete: return complete(params.at(0));
        case FamilyTag::CompleteBipartite: return complete_bipartite(params.at(0), params.at(1));
        case FamilyTag::Path: return path(params.at(0));
        case FamilyTag::Cycle: return cycle(params.at(0));
        case FamilyTag::Friendship: return friendship(params.at(0));
        case FamilyTag::TriangularCactus: return triangular_cactus(params.at(0));
        case FamilyTag::Corona: return corona(operands.at(0).build(), operands.at(1).build());
        case FamilyTag::Join: return join(operands.at(0).build(), operands.at(1).build());
    }
    throw InputError("unknown family");
}

std::string FamilySpec::to_string() const {
    if (tag == FamilyTag::Corona || tag == FamilyTag::Join)
        return family_name(tag) + "(" + operands.at(0).to_string() + "," + operands.at(1).to_string() + ")";
    if (tag == FamilyTag::CompleteBipartite) {
        if (params.at(0) == params.at(1)) return "knn:" + std::to_string(params[0]);
        return "kmn:" + std::to_string(params[0]) + "," + std::to_string(params[1]);
    }
    return family_name(tag) + ":" + std::to_string(params.at(0));
}

namespace {

// Recursive-descent parser over the DSL grammar:
//   spec  := name ':' int (',' int)?  |  ('corona'|'join') '(' spec ',' spec ')'
class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    FamilySpec parse_all() {
        FamilySpec s = parse_spec();
        skip_space();
        if (pos_ != text_.size()) fail("trailing characters");
        return s;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("bad family spec `" + std::string(text_) + "` at offset " + std::to_string(pos_) + ": " +
                         what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected `") + c + "`");
    }

    std::string_view name() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a family name");
        return text_.substr(start, pos_ - start);
    }

    int integer() {
        skip_space();
        int value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc{}) fail("expected a non-negative integer");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return value;
    }

    FamilySpec parse_spec() {
        std::string_view word = name();
        FamilySpec s;
        s.tag = family_tag_from_name(word);
        if (s.tag == FamilyTag::Corona || s.tag == FamilyTag::Join) {
            expect('(');
            s.operands.push_back(parse_spec());
            expect(',');
            s.operands.push_back(parse_spec());
            expect(')');
            return s;
        }
        expect(':');
        int a = integer();
        if (word == "kmn") {
            expect(',');
            int b = integer();
            s.params = {a, b};
        } else if (word == "knn") {
            s.params = {a, a};
        } else {
            s.params = {a};
        }
        validate(s);
        return s;
    }

    void validate(const FamilySpec& s) const {
        const int a = s.params.at(0);
        switch (s.tag) {
            case FamilyTag::Cycle:
                if (a < 3) fail("cycle needs n >= 3");
                break;
            case FamilyTag::CompleteBipartite:
                if (a < 1 || s.params.at(1) < 1) fail("both parts must be non-empty");
                break;
            default:
                if (a < 1) fail("parameter must be >= 1");
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

FamilySpec parse_family(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace fairdom
