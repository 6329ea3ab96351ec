#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace zerr {

/// Fixed-capacity bitset over vertex indices.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t capacity) : n_(capacity), w_((capacity + 63) / 64, 0) {}

    static VertexSet full(std::size_t capacity) {
        VertexSet s(capacity);
        for (std::size_t i = 0; i < capacity; ++i) s.insert(i);
        return s;
    }

    std::size_t capacity() const noexcept { return n_; }
    bool contains(std::size_t v) const noexcept { return (w_[v >> 6] >> (v & 63)) & 1U; }
    void insert(std::size_t v) noexcept { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(std::size_t v) noexcept { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    bool empty() const noexcept {
        for (auto x : w_)
            if (x) return false;
        return true;
    }
    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }
    /// Smallest element, or capacity() when empty.
    std::size_t first() const noexcept {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i]));
        return n_;
    }

    VertexSet& operator&=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    /// Removes every element of o.
    VertexSet& subtract(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t x = w_[i];
            while (x) {
                f(i * 64 + static_cast<std::size_t>(std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }

    std::vector<std::size_t> to_vector() const {
        std::vector<std::size_t> out;
        for_each([&](std::size_t v) { out.push_back(v); });
        return out;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace zerr
