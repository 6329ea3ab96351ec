#pragma once

#include "zerr/bigint.hpp"
#include "zerr/error.hpp"
#include "zerr/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace zerr {

/// Dense square matrix of non-negative integer entries (edge multiplicities).
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}
    SquareMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) : n_(rows.size()), a_() {
        a_.reserve(n_ * n_);
        for (const auto& row : rows) {
            if (row.size() != n_) throw invalid_input("matrix is not square");
            for (auto v : row) {
                if (v < 0) throw invalid_input("matrix entries must be non-negative");
                a_.push_back(static_cast<std::uint64_t>(v));
            }
        }
    }

    static SquareMatrix identity(std::size_t n) {
        SquareMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t size() const noexcept { return n_; }
    std::uint64_t& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    std::uint64_t operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> a_;
};

/// Companion matrix of a linear recurrence: ones on the superdiagonal and
/// the recurrence coefficients on the last row. `last_row` is ordered from
/// the longest length down to length 1, so that M applied to a window of
/// consecutive terms advances the window by one.
struct CompanionMatrix {
    std::vector<BigInt> last_row;

    std::size_t order() const noexcept { return last_row.size(); }

    /// From counts per length (index l-1 holds the count of length l).
    static CompanionMatrix from_length_counts(const std::vector<BigInt>& per_length) {
        CompanionMatrix m;
        m.last_row.assign(per_length.rbegin(), per_length.rend());
        return m;
    }

    /// From a monic polynomial X^n - sum a_l X^(n-l).
    static CompanionMatrix from_polynomial(const IntPolynomial& p) {
        if (p.degree() < 1 || p.leading() != 1) throw invalid_input("companion matrix needs a monic polynomial");
        CompanionMatrix m;
        for (int k = 0; k < p.degree(); ++k) m.last_row.push_back(-p.coefficients()[static_cast<std::size_t>(k)]);
        return m;
    }

    SquareMatrix to_matrix() const {
        const std::size_t n = order();
        SquareMatrix m(n);
        for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (last_row[j] < 0) throw invalid_input("companion matrix with negative coefficient");
            m(n - 1, j) = last_row[j].convert_to<std::uint64_t>();
        }
        return m;
    }
};

namespace detail {

/// Strongly connected components (Tarjan, iterative).
inline std::vector<std::vector<std::size_t>> strongly_connected_components(const SquareMatrix& m) {
    const std::size_t n = m.size();
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unset), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> components;
    std::size_t counter = 0;

    struct Frame {
        std::size_t v;
        std::size_t next;
    };
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unset) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.next < n) {
                std::size_t w = f.next++;
                if (m(f.v, w) == 0) continue;
                if (index[w] == unset) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            std::size_t v = f.v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                std::vector<std::size_t> comp;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                components.push_back(std::move(comp));
            }
        }
    }
    return components;
}

/// Perron root of an irreducible block, by power iteration on (B + I) with
/// a Collatz-Wielandt bracket.
inline double irreducible_radius(const SquareMatrix& m, const std::vector<std::size_t>& block, double tol,
                                 long max_iterations) {
    const std::size_t k = block.size();
    if (k == 1) return static_cast<double>(m(block[0], block[0]));
    std::vector<long double> x(k, 1.0L), y(k);
    long double lower = 0, upper = 0;
    for (long it = 0; it < max_iterations; ++it) {
        lower = INFINITY;
        upper = 0;
        long double norm = 0;
        for (std::size_t i = 0; i < k; ++i) {
            long double acc = x[i];
            for (std::size_t j = 0; j < k; ++j) acc += static_cast<long double>(m(block[i], block[j])) * x[j];
            y[i] = acc;
            long double ratio = acc / x[i];
            lower = std::min(lower, ratio);
            upper = std::max(upper, ratio);
            norm = std::max(norm, acc);
        }
        for (std::size_t i = 0; i < k; ++i) x[i] = y[i] / norm;
        if (upper - lower <= tol * upper) break;
    }
    return static_cast<double>((lower + upper) / 2 - 1);
}

} // namespace detail

/// Spectral radius of a non-negative square matrix.
///
/// The radius is the largest Perron root among the strongly connected
/// components; each one is found by power iteration on (B + I), which is
/// primitive whenever B is irreducible, so periodic graphs converge too.
inline double spectral_radius(const SquareMatrix& m, double tol = 1e-12, long max_iterations = 1'000'000) {
    double best = 0;
    for (const auto& block : detail::strongly_connected_components(m))
        best = std::max(best, detail::irreducible_radius(m, block, tol, max_iterations));
    return best;
}

} // namespace zerr
