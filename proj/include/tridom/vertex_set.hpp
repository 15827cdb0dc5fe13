#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tridom {

/// Dense vertex set over a fixed universe {0..n-1}, stored as 64-bit blocks.
/// Superset tests and unions are word-parallel.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : n_(universe), blocks_((universe + 63) / 64, 0) {
        if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
    }

    static VertexSet all(int universe) {
        VertexSet s(universe);
        for (int b = 0; b < static_cast<int>(s.blocks_.size()); ++b) s.blocks_[b] = ~0ULL;
        s.trim();
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.insert(v);
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        check(v);
        return (blocks_[v >> 6] >> (v & 63)) & 1ULL;
    }

    void insert(int v) {
        check(v);
        blocks_[v >> 6] |= 1ULL << (v & 63);
    }

    void erase(int v) {
        check(v);
        blocks_[v >> 6] &= ~(1ULL << (v & 63));
    }

    int count() const {
        int c = 0;
        for (std::uint64_t b : blocks_) c += std::popcount(b);
        return c;
    }

    bool empty() const {
        for (std::uint64_t b : blocks_) if (b) return false;
        return true;
    }

    /// True iff other is a subset of this set.
    bool contains_all(const VertexSet& other) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (other.blocks_[i] & ~blocks_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& other) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i] & other.blocks_[i]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] |= o.blocks_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= o.blocks_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= ~o.blocks_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet&) const = default;

    /// Smallest member, or -1 when empty.
    int first() const { return next_at_or_after(0); }

    /// Smallest member >= v, or -1 when none.
    int next_at_or_after(int v) const {
        if (v >= n_) return -1;
        if (v < 0) v = 0;
        std::size_t blk = static_cast<std::size_t>(v) >> 6;
        std::uint64_t cur = blocks_[blk] & (~0ULL << (v & 63));
        while (true) {
            if (cur) return static_cast<int>(blk * 64 + std::countr_zero(cur));
            if (++blk >= blocks_.size()) return -1;
            cur = blocks_[blk];
        }
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = first(); v >= 0; v = next_at_or_after(v + 1)) out.push_back(v);
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (int v = first(); v >= 0; v = next_at_or_after(v + 1)) f(v);
    }

private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: vertex out of range");
    }
    void trim() {
        if (n_ % 64 != 0 && !blocks_.empty()) blocks_.back() &= (1ULL << (n_ % 64)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> blocks_;
};

}  // namespace tridom
