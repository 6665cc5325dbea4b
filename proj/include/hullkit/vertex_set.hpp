#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace hullkit {

/// Subset of a fixed universe {0, ..., universe-1}, stored as a bitset.
/// Canonical order is by size, then lexicographically on the sorted
/// element lists.
class VertexSet {
public:
    static int max_universe() { return max_universe_; }
    static void set_max_universe(int m) { max_universe_ = m; }

    VertexSet() = default;

    explicit VertexSet(int universe) : universe_(universe) {
        if (universe < 0 || universe > max_universe_)
            throw std::invalid_argument("VertexSet: universe size " + std::to_string(universe) +
                                        " exceeds limit " + std::to_string(max_universe_));
        words_.assign(word_count(universe), 0);
    }

    VertexSet(int universe, std::initializer_list<int> elems) : VertexSet(universe) {
        for (int v : elems) add(v);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.add(v);
        return s;
    }

    int universe() const { return universe_; }

    bool contains(int v) const {
        check(v);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void add(int v) {
        check(v);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void remove(int v) {
        check(v);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int size() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool subset_of(const VertexSet& o) const {
        require_same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        require_same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(size());
        for (int v = 0; v < universe_; ++v)
            if (contains(v)) out.push_back(v);
        return out;
    }

    /// Smallest member, or -1 when empty.
    int min_element() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64 + __builtin_ctzll(words_[i]));
        return -1;
    }

    VertexSet& operator|=(const VertexSet& o) {
        require_same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        require_same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& operator-=(const VertexSet& o) {
        require_same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet r = full(universe_);
        r -= *this;
        return r;
    }

    VertexSet with(int v) const {
        VertexSet r = *this;
        r.add(v);
        return r;
    }

    VertexSet without(int v) const {
        VertexSet r = *this;
        r.remove(v);
        return r;
    }

    bool operator==(const VertexSet& o) const {
        return universe_ == o.universe_ && words_ == o.words_;
    }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    /// Size first, then lexicographic: the set owning the smallest
    /// differing element comes first.
    static bool canonical_less(const VertexSet& a, const VertexSet& b) {
        int sa = a.size(), sb = b.size();
        if (sa != sb) return sa < sb;
        for (std::size_t i = 0; i < a.words_.size(); ++i) {
            std::uint64_t diff = a.words_[i] ^ b.words_[i];
            if (diff) {
                std::uint64_t low = diff & (~diff + 1);
                return a.words_[i] & low;
            }
        }
        return false;
    }

    struct Hash {
        std::size_t operator()(const VertexSet& s) const {
            std::size_t h = std::size_t(s.universe_) * 0x9e3779b97f4a7c15ull;
            for (auto w : s.words_) {
                h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            }
            return h;
        }
    };

    struct CanonicalLess {
        bool operator()(const VertexSet& a, const VertexSet& b) const {
            return canonical_less(a, b);
        }
    };

    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for (int v : elements()) {
            if (!first) out += ",";
            out += std::to_string(v);
            first = false;
        }
        return out + "}";
    }

private:
    static inline int max_universe_ = 128;

    static std::size_t word_count(int universe) { return std::size_t(universe + 63) / 64; }

    void check(int v) const {
        if (v < 0 || v >= universe_)
            throw std::out_of_range("VertexSet: element " + std::to_string(v) +
                                    " outside universe of size " + std::to_string(universe_));
    }

    void require_same_universe(const VertexSet& o) const {
        if (universe_ != o.universe_)
            throw std::invalid_argument("VertexSet: mismatched universes");
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace hullkit
