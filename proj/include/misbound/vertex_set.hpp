#pragma once

/// \file vertex_set.hpp
/// \brief Bit-packed vertex subsets. `WordSet` covers graphs of order <= 64 in a
/// single machine word; `WideSet` is the multi-word fallback with the same
/// interface, so algorithms can be written once as templates over either.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace misbound {

inline constexpr int word_set_capacity = 64;

class WordSet {
public:
    WordSet() = default;
    explicit constexpr WordSet(std::uint64_t bits) : bits_(bits) {}

    static WordSet empty(int /*order*/) { return WordSet{}; }
    static WordSet full(int order) {
        return WordSet{order >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1};
    }

    void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
    bool contains(int v) const { return (bits_ >> v) & 1U; }
    bool any() const { return bits_ != 0; }
    bool none() const { return bits_ == 0; }
    int count() const { return std::popcount(bits_); }
    int first() const { return std::countr_zero(bits_); }
    std::uint64_t word() const { return bits_; }

    WordSet operator&(const WordSet& o) const { return WordSet{bits_ & o.bits_}; }
    WordSet operator|(const WordSet& o) const { return WordSet{bits_ | o.bits_}; }
    /// Set difference.
    WordSet operator-(const WordSet& o) const { return WordSet{bits_ & ~o.bits_}; }
    bool operator==(const WordSet&) const = default;

    template <class F>
    void for_each(F&& f) const {
        for (std::uint64_t x = bits_; x != 0; x &= x - 1) {
            f(std::countr_zero(x));
        }
    }

private:
    std::uint64_t bits_ = 0;
};

class WideSet {
public:
    WideSet() = default;

    static WideSet empty(int order) {
        WideSet s;
        s.words_.assign(static_cast<std::size_t>((order + 63) / 64), 0);
        return s;
    }
    static WideSet full(int order) {
        WideSet s = empty(order);
        for (int v = 0; v < order; ++v) s.insert(v);
        return s;
    }

    void insert(int v) { words_[v / 64] |= std::uint64_t{1} << (v % 64); }
    void erase(int v) { words_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
    bool contains(int v) const { return (words_[v / 64] >> (v % 64)) & 1U; }
    bool any() const {
        return std::any_of(words_.begin(), words_.end(), [](auto w) { return w != 0; });
    }
    bool none() const { return !any(); }
    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] != 0) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
        }
        return static_cast<int>(words_.size() * 64);
    }

    WideSet operator&(const WideSet& o) const { return zip(o, [](auto a, auto b) { return a & b; }); }
    WideSet operator|(const WideSet& o) const { return zip(o, [](auto a, auto b) { return a | b; }); }
    WideSet operator-(const WideSet& o) const { return zip(o, [](auto a, auto b) { return a & ~b; }); }
    bool operator==(const WideSet&) const = default;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            for (std::uint64_t x = words_[i]; x != 0; x &= x - 1) {
                f(static_cast<int>(i * 64) + std::countr_zero(x));
            }
        }
    }

private:
    template <class Op>
    WideSet zip(const WideSet& o, Op op) const {
        WideSet r;
        r.words_.resize(words_.size());
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = op(words_[i], o.words_[i]);
        return r;
    }

    std::vector<std::uint64_t> words_;
};

/// Sorted member list of a set.
template <class Set>
std::vector<int> members(const Set& s) {
    std::vector<int> out;
    s.for_each([&](int v) { out.push_back(v); });
    return out;
}

}  // namespace misbound
