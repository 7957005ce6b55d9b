#pragma once

#include "fairdom/count.hpp"

#include <map>
#include <optional>
#include <string>

namespace fairdom {

/// D_f(G, x): cardinality i -> number of fair dominating sets of size i.
/// Only non-zero coefficients are stored.
struct FairDomPolynomial {
    int order = 0;
    std::map<int, Count> coeffs;

    Count coefficient(int i) const {
        auto it = coeffs.find(i);
        return it == coeffs.end() ? Count{0} : it->second;
    }
    bool has_constant_term() const { return coeffs.count(0) != 0; }
    /// Multiplicity of zero as a root; equals fd(G) for polynomials computed from a graph.
    std::optional<int> lowest_degree() const {
        if (coeffs.empty()) return std::nullopt;
        return coeffs.begin()->first;
    }
    /// "3x^3 + 27x^5 + ..." in ascending degree.
    std::string to_string() const;

    bool operator==(const FairDomPolynomial&) const = default;
};

}  // namespace fairdom
