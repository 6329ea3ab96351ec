#pragma once

#include "zerr/bigint.hpp"
#include "zerr/error.hpp"

#include <algorithm>
#include <complex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace zerr {

/// Univariate polynomial with exact integer coefficients, index = degree.
///
/// Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) { normalize(); }
    IntPolynomial(std::initializer_list<long long> init) {
        for (long long v : init) c_.emplace_back(v);
        normalize();
    }

    static IntPolynomial constant(BigInt v) { return IntPolynomial(std::vector<BigInt>{std::move(v)}); }
    /// coefficient * X^degree
    static IntPolynomial monomial(std::size_t degree, BigInt coefficient = 1) {
        std::vector<BigInt> c(degree + 1);
        c[degree] = std::move(coefficient);
        return IntPolynomial(std::move(c));
    }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<BigInt>& coefficients() const noexcept { return c_; }

    BigInt coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }
    BigInt leading() const { return c_.empty() ? BigInt(0) : c_.back(); }
    BigInt constant_term() const { return coefficient(0); }

    template <typename T>
    T evaluate(T x) const {
        T acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->template convert_to<typename scalar_of<T>::type>();
        return acc;
    }

    IntPolynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<BigInt> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long long>(k);
        return IntPolynomial(std::move(d));
    }

    /// Coefficients in reverse order: z^deg p(1/z).
    IntPolynomial reversed() const {
        std::vector<BigInt> r(c_.rbegin(), c_.rend());
        return IntPolynomial(std::move(r));
    }

    /// gcd of the coefficients, sign taken from the leading coefficient.
    BigInt content() const {
        BigInt g = 0;
        for (const auto& v : c_) g = boost::multiprecision::gcd(g, v);
        if (!c_.empty() && c_.back() < 0) g = -g;
        return g;
    }

    IntPolynomial primitive_part() const {
        if (is_zero()) return {};
        BigInt g = content();
        std::vector<BigInt> r(c_);
        for (auto& v : r) v /= g;
        return IntPolynomial(std::move(r));
    }

    IntPolynomial operator-() const {
        std::vector<BigInt> r(c_);
        for (auto& v : r) v = -v;
        return IntPolynomial(std::move(r));
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coefficient(k) + b.coefficient(k);
        return IntPolynomial(std::move(r));
    }
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return IntPolynomial(std::move(r));
    }
    friend IntPolynomial operator*(const BigInt& s, const IntPolynomial& p) {
        std::vector<BigInt> r(p.c_);
        for (auto& v : r) v *= s;
        return IntPolynomial(std::move(r));
    }
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// Exact division in Z[X]; throws if `divisor` does not divide `*this`.
    IntPolynomial exact_divide(const IntPolynomial& divisor) const {
        if (divisor.is_zero()) throw invalid_input("polynomial division by zero");
        std::vector<BigInt> rem(c_);
        if (degree() < divisor.degree()) {
            if (is_zero()) return {};
            throw invalid_input("polynomial is not divisible");
        }
        std::size_t dd = static_cast<std::size_t>(divisor.degree());
        std::vector<BigInt> q(c_.size() - dd);
        const BigInt& lead = divisor.c_.back();
        for (std::size_t k = q.size(); k-- > 0;) {
            const BigInt& top = rem[k + dd];
            if (top % lead != 0) throw invalid_input("polynomial is not divisible over the integers");
            q[k] = top / lead;
            if (q[k] == 0) continue;
            for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q[k] * divisor.c_[j];
        }
        for (const auto& v : rem)
            if (v != 0) throw invalid_input("polynomial is not divisible");
        return IntPolynomial(std::move(q));
    }

    /// Pseudo-remainder: lc(d)^(deg a - deg d + 1) * a mod d.
    static IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& d) {
        if (d.is_zero()) throw invalid_input("pseudo-remainder by zero polynomial");
        std::vector<BigInt> r(a.c_);
        int dd = d.degree();
        const BigInt& lead = d.c_.back();
        int steps = a.degree() - dd + 1;
        while (!r.empty() && static_cast<int>(r.size()) - 1 >= dd) {
            int dr = static_cast<int>(r.size()) - 1;
            BigInt top = r.back();
            for (auto& v : r) v *= lead;
            for (int j = 0; j <= dd; ++j) r[static_cast<std::size_t>(dr - dd + j)] -= top * d.c_[static_cast<std::size_t>(j)];
            while (!r.empty() && r.back() == 0) r.pop_back();
            --steps;
        }
        BigInt scale = 1;
        for (int i = 0; i < steps; ++i) scale *= lead;
        for (auto& v : r) v *= scale;
        return IntPolynomial(std::move(r));
    }

    /// Primitive gcd with positive leading coefficient (primitive PRS).
    static IntPolynomial gcd(IntPolynomial a, IntPolynomial b) {
        if (a.is_zero()) return b.primitive_part();
        if (b.is_zero()) return a.primitive_part();
        a = a.primitive_part();
        b = b.primitive_part();
        if (a.degree() < b.degree()) std::swap(a, b);
        while (!b.is_zero()) {
            IntPolynomial r = pseudo_remainder(a, b);
            a = std::move(b);
            b = r.is_zero() ? IntPolynomial{} : r.primitive_part();
        }
        return a.primitive_part();
    }

    /// True if the polynomial has no repeated complex root.
    bool is_squarefree() const {
        if (degree() <= 1) return true;
        return gcd(*this, derivative()).degree() == 0;
    }

    /// Human form in variable `var`, e.g. "4z^2 + 2z - 1".
    std::string to_string(const std::string& var = "X") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const BigInt& v = c_[k];
            if (v == 0) continue;
            BigInt mag = v < 0 ? BigInt(-v) : v;
            if (first) {
                if (v < 0) os << "-";
            } else {
                os << (v < 0 ? " - " : " + ");
            }
            if (k == 0 || mag != 1) os << mag;
            if (k >= 1) os << var;
            if (k >= 2) os << "^" << k;
            first = false;
        }
        return os.str();
    }

private:
    template <typename T>
    struct scalar_of {
        using type = T;
    };
    template <typename T>
    struct scalar_of<std::complex<T>> {
        using type = T;
    };

    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

} // namespace zerr
