#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace admg {

// A set of vertex ids in [0, 32), stored as a bit mask.  Everything in this
// library manipulates vertex sets, so the representation is kept cheap enough
// that set algebra costs one or two machine instructions.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) add(v);
    }

    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
    }
    static constexpr VertexSet single(int v) { return VertexSet(std::uint32_t{1} << v); }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
    void add(int v) { bits_ |= std::uint32_t{1} << v; }
    void remove(int v) { bits_ &= ~(std::uint32_t{1} << v); }

    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    // Lowest vertex id in the set; undefined on the empty set.
    constexpr int min() const { return std::countr_zero(bits_); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const VertexSet&) const = default;

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size());
        for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    // Iterates set members in ascending id order.
    class iterator {
    public:
        constexpr explicit iterator(std::uint32_t bits) : bits_(bits) {}
        constexpr int operator*() const { return std::countr_zero(bits_); }
        iterator& operator++() { bits_ &= bits_ - 1; return *this; }
        constexpr bool operator!=(const iterator& o) const { return bits_ != o.bits_; }

    private:
        std::uint32_t bits_;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    std::uint32_t bits_ = 0;
};

// Calls fn(VertexSet) for every subset of mask, the empty set and mask included.
// Order: descending bit pattern interleaved — deterministic but unspecified.
template <typename Fn>
void for_each_subset(VertexSet mask, Fn&& fn) {
    std::uint32_t m = mask.bits();
    std::uint32_t sub = m;
    while (true) {
        fn(VertexSet(sub));
        if (sub == 0) break;
        sub = (sub - 1) & m;
    }
}

}  // namespace admg
