#pragma once

#include "zerr/bigint.hpp"
#include "zerr/error.hpp"
#include "zerr/polynomial.hpp"

#include <string>

namespace zerr {

/// Quotient of integer polynomials in the series variable z, kept in lowest
/// terms with the denominator's constant term positive (or, when that term
/// is zero, its leading coefficient positive).
class RationalFraction {
public:
    RationalFraction() : num_(), den_(IntPolynomial{1}) {}
    RationalFraction(IntPolynomial numerator, IntPolynomial denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_.is_zero()) throw invalid_input("rational fraction with zero denominator");
        reduce();
    }
    /// A polynomial viewed as a fraction over 1.
    explicit RationalFraction(IntPolynomial p) : RationalFraction(std::move(p), IntPolynomial{1}) {}

    static RationalFraction zero() { return {}; }
    static RationalFraction one() { return RationalFraction(IntPolynomial{1}); }
    static RationalFraction z() { return RationalFraction(IntPolynomial{0, 1}); }

    const IntPolynomial& numerator() const noexcept { return num_; }
    const IntPolynomial& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }

    friend RationalFraction operator+(const RationalFraction& f, const RationalFraction& g) {
        return {f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_};
    }
    friend RationalFraction operator-(const RationalFraction& f, const RationalFraction& g) {
        return {f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_};
    }
    friend RationalFraction operator*(const RationalFraction& f, const RationalFraction& g) {
        return {f.num_ * g.num_, f.den_ * g.den_};
    }
    friend bool operator==(const RationalFraction&, const RationalFraction&) = default;

    /// 1 / (1 - f). Requires f(0) = 0 so that the geometric series exists.
    RationalFraction star() const {
        if (den_.constant_term() == 0) throw invalid_input("star of a fraction with a pole at 0");
        if (num_.constant_term() != 0) throw invalid_input("star of a fraction with nonzero constant term");
        return {den_, den_ - num_};
    }

    std::string to_string(const std::string& var = "z") const {
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = IntPolynomial{1};
            return;
        }
        IntPolynomial g = IntPolynomial::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.exact_divide(g);
            den_ = den_.exact_divide(g);
        }
        BigInt cn = num_.content();
        BigInt cd = den_.content();
        BigInt c = boost::multiprecision::gcd(cn, cd);
        if (c < 0) c = -c;
        if (c > 1) {
            num_ = num_.exact_divide(IntPolynomial::constant(c));
            den_ = den_.exact_divide(IntPolynomial::constant(c));
        }
        BigInt sign_ref = den_.constant_term() != 0 ? den_.constant_term() : den_.leading();
        if (sign_ref < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    IntPolynomial num_;
    IntPolynomial den_;
};

inline RationalFraction add(const RationalFraction& f, const RationalFraction& g) { return f + g; }
inline RationalFraction multiply(const RationalFraction& f, const RationalFraction& g) { return f * g; }
inline RationalFraction star(const RationalFraction& f) { return f.star(); }

/// Power-series coefficients 0..up_to of f by exact long division.
///
/// Throws invalid_input when the denominator vanishes at 0 or when a
/// coefficient is not an integer.
inline CountSequence series_coefficients(const RationalFraction& f, std::size_t up_to) {
    const auto& n = f.numerator();
    const auto& d = f.denominator();
    BigInt d0 = d.constant_term();
    if (d0 == 0) throw invalid_input("series expansion needs a nonzero denominator constant term");
    std::vector<BigInt> a(up_to + 1);
    for (std::size_t l = 0; l <= up_to; ++l) {
        BigInt acc = n.coefficient(l);
        std::size_t top = std::min<std::size_t>(l, static_cast<std::size_t>(std::max(d.degree(), 0)));
        for (std::size_t k = 1; k <= top; ++k) acc -= d.coefficient(k) * a[l - k];
        if (acc % d0 != 0) throw invalid_input("series has non-integral coefficients");
        a[l] = acc / d0;
    }
    return CountSequence(std::move(a));
}

} // namespace zerr
