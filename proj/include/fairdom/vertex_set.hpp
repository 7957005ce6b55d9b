#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace fairdom {

/// Largest vertex count a VertexSet (and therefore a Graph) can address.
inline constexpr int kMaxVertices = 64;

/// A subset of {0, ..., 63} stored as one machine word; bit v is vertex v.
class VertexSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = int;

        iterator() = default;
        explicit iterator(std::uint64_t rest) : rest_(rest) {}

        int operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> members) {
        for (int v : members) insert(v);
    }

    /// {0, ..., n-1}.
    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }

    void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    VertexSet& operator&=(VertexSet o) {
        bits_ &= o.bits_;
        return *this;
    }
    VertexSet& operator|=(VertexSet o) {
        bits_ |= o.bits_;
        return *this;
    }

    /// Complement relative to {0, ..., n-1}.
    constexpr VertexSet complement(int n) const { return full(n) - *this; }

    constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    std::vector<int> members() const { return {begin(), end()}; }

    constexpr bool operator==(const VertexSet&) const = default;
    /// Numeric order of the bit masks; enumeration output is sorted by it.
    constexpr auto operator<=>(const VertexSet& o) const { return bits_ <=> o.bits_; }

private:
    std::uint64_t bits_ = 0;
};

/// "{1,4,7}" with labels shifted by `base` (1 for the 1-based labels used in output).
std::string format_set(VertexSet s, int base = 1);

}  // namespace fairdom
