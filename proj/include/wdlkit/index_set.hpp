#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace wdlkit {

/// Fixed-universe bit set over indices 0..universe-1. This is the workhorse
/// for extents, intents, down-sets and generator sets; all heavy loops reduce
/// to word-parallel operations on these.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static IndexSet full(std::size_t universe) {
        IndexSet s(universe);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    static IndexSet of(std::size_t universe, std::initializer_list<int> bits) {
        IndexSet s(universe);
        for (int b : bits) s.set(static_cast<std::size_t>(b));
        return s;
    }

    std::size_t universe() const { return universe_; }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }
    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    /// other ⊆ this
    bool contains(const IndexSet& other) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (other.words_[k] & ~words_[k]) return false;
        return true;
    }
    bool intersects(const IndexSet& other) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & other.words_[k]) return true;
        return false;
    }

    IndexSet& operator&=(const IndexSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    IndexSet& operator|=(const IndexSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    IndexSet& subtract(const IndexSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }
    friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
    friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }

    IndexSet complement() const {
        IndexSet s(universe_);
        for (std::size_t k = 0; k < words_.size(); ++k) s.words_[k] = ~words_[k];
        s.trim();
        return s;
    }

    bool operator==(const IndexSet& o) const {
        return universe_ == o.universe_ && words_ == o.words_;
    }
    bool operator!=(const IndexSet& o) const { return !(*this == o); }

    /// Smallest member, -1 when empty.
    int first() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return static_cast<int>((k << 6) + __builtin_ctzll(words_[k]));
        return -1;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                f(static_cast<int>((k << 6) + __builtin_ctzll(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    /// this ∩ [0,i) ⊆ other; the lectic canonicity test in NextClosure.
    bool subset_below(const IndexSet& other, std::size_t i) const {
        std::size_t kmax = i >> 6;
        for (std::size_t k = 0; k < kmax; ++k)
            if (words_[k] & ~other.words_[k]) return false;
        if (i & 63) {
            std::uint64_t mask = (std::uint64_t{1} << (i & 63)) - 1;
            if (words_[kmax] & ~other.words_[kmax] & mask) return false;
        }
        return true;
    }

    std::size_t hash() const {
        std::size_t h = universe_;
        for (auto w : words_) h = h * 1099511628211ULL + static_cast<std::size_t>(w);
        return h;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void trim() {
        if (universe_ & 63)
            words_.back() &= (std::uint64_t{1} << (universe_ & 63)) - 1;
        if (universe_ == 0 && !words_.empty()) words_.back() = 0;
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct IndexSetHash {
    std::size_t operator()(const IndexSet& s) const { return s.hash(); }
};

/// "{a,b,c}" with members rendered through `name` in index order.
template <class NameFn>
std::string format_set(const IndexSet& s, NameFn&& name) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](int i) {
        if (!first) out += ',';
        out += name(i);
        first = false;
    });
    out += '}';
    return out;
}

} // namespace wdlkit
