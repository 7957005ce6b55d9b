#include "fairdom/polynomial.hpp"

namespace fairdom {

std::string FairDomPolynomial::to_string() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (const auto& [i, c] : coeffs) {
        if (!out.empty()) out += " + ";
        if (c != 1 || i == 0) out += c.str();
        if (i > 0) out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return out;
}

}  // namespace fairdom
