#pragma once

#include <stdexcept>
#include <string>

namespace fairdom {

// Malformed input: bad vertex index, self-loop, unparsable family spec.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The 2^n search refuses graphs above the configured enumeration cap.
class CapacityError : public std::runtime_error {
public:
    CapacityError(int n, int cap)
        : std::runtime_error("graph has " + std::to_string(n) +
                             " vertices, above the enumeration cap of " + std::to_string(cap)),
          order_(n), cap_(cap) {}

    int order() const noexcept { return order_; }
    int cap() const noexcept { return cap_; }

private:
    int order_;
    int cap_;
};

// Arithmetic precondition violated (e.g. multinomial parts that do not sum to the header).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace fairdom
