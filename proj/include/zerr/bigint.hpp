#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace zerr {

using BigInt = boost::multiprecision::cpp_int;

/// log2 of a positive big integer, accurate to double precision for any size.
inline double log2_big(const BigInt& v) {
    if (v <= 0) return -std::numeric_limits<double>::infinity();
    std::size_t bits = boost::multiprecision::msb(v) + 1;
    if (bits <= 60) return std::log2(v.convert_to<double>());
    std::size_t shift = bits - 60;
    BigInt top = v >> shift;
    return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Counts indexed by word length, starting at L = 0.
///
/// Terms are exact. Sequences produced by counting are non-negative; the
/// type itself does not enforce it because series expansions of arbitrary
/// fractions may go negative.
class CountSequence {
public:
    CountSequence() = default;
    explicit CountSequence(std::vector<BigInt> terms) : terms_(std::move(terms)) {}
    CountSequence(std::initializer_list<long long> init) {
        terms_.reserve(init.size());
        for (long long v : init) terms_.emplace_back(v);
    }

    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }
    const BigInt& operator[](std::size_t l) const { return terms_[l]; }
    BigInt& operator[](std::size_t l) { return terms_[l]; }
    const std::vector<BigInt>& terms() const noexcept { return terms_; }
    void push_back(BigInt v) { terms_.push_back(std::move(v)); }

    /// terms[L]^(1/L); empty for L = 0 or a non-positive term.
    std::optional<double> root(std::size_t l) const {
        if (l == 0 || l >= terms_.size() || terms_[l] <= 0) return std::nullopt;
        return std::exp2(log2_big(terms_[l]) / static_cast<double>(l));
    }

    /// Prefix of the first n terms.
    CountSequence prefix(std::size_t n) const {
        n = std::min(n, terms_.size());
        return CountSequence(std::vector<BigInt>(terms_.begin(), terms_.begin() + static_cast<std::ptrdiff_t>(n)));
    }

    friend bool operator==(const CountSequence&, const CountSequence&) = default;

private:
    std::vector<BigInt> terms_;
};

} // namespace zerr
