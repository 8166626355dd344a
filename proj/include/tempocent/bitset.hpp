#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace tempocent {

/// Fixed-capacity bitset over node ids 0..n-1. Word-wide AND is the inner
/// loop of the Bron-Kerbosch recursion.
class NodeBitset {
public:
    NodeBitset() = default;
    explicit NodeBitset(std::uint32_t n) : n_(n), words_((n + 63) / 64, 0) {}

    void set(std::uint32_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::uint32_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::uint32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    std::uint32_t capacity() const { return n_; }

    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    std::uint32_t count() const {
        std::uint32_t c = 0;
        for (auto w : words_) c += static_cast<std::uint32_t>(std::popcount(w));
        return c;
    }

    static NodeBitset intersect(const NodeBitset& a, const NodeBitset& b) {
        NodeBitset out(a.n_);
        for (std::size_t i = 0; i < out.words_.size(); ++i)
            out.words_[i] = a.words_[i] & b.words_[i];
        return out;
    }

    static std::uint32_t intersect_count(const NodeBitset& a, const NodeBitset& b) {
        std::uint32_t c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            c += static_cast<std::uint32_t>(std::popcount(a.words_[i] & b.words_[i]));
        return c;
    }

    NodeBitset minus(const NodeBitset& other) const {
        NodeBitset out(n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            out.words_[i] = words_[i] & ~other.words_[i];
        return out;
    }

    NodeBitset unite(const NodeBitset& other) const {
        NodeBitset out(n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            out.words_[i] = words_[i] | other.words_[i];
        return out;
    }

    // Visits set bits in ascending order.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                auto bit = static_cast<std::uint32_t>(std::countr_zero(w));
                f(static_cast<std::uint32_t>(wi * 64 + bit));
                w &= w - 1;
            }
        }
    }

    std::vector<std::uint32_t> to_vector() const {
        std::vector<std::uint32_t> out;
        out.reserve(count());
        for_each([&](std::uint32_t v) { out.push_back(v); });
        return out;
    }

private:
    std::uint32_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace tempocent
