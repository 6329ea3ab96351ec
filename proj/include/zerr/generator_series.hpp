#pragma once

#include "zerr/bigint.hpp"
#include "zerr/dfa.hpp"
#include "zerr/error.hpp"
#include "zerr/rational_fraction.hpp"
#include "zerr/regex.hpp"
#include "zerr/roots.hpp"
#include "zerr/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>

namespace zerr {

/// Coefficient window used to confirm a series against its automaton: two
/// sequences obeying recurrences of order <= n agree everywhere once they
/// agree on 2n terms; the extra terms clear the numerator's degree.
inline std::size_t series_check_window(const Dfa& d, const RationalFraction& f) {
    const std::size_t n = d.state_count();
    const std::size_t deg = static_cast<std::size_t>(std::max({f.numerator().degree(), f.denominator().degree(), 0}));
    return std::max(2 * n + 5, n + deg + 1);
}

namespace detail {

inline RationalFraction checked_series(const Regex& e, std::size_t alphabet, bool check) {
    RationalFraction f;
    switch (e.kind()) {
    case Regex::Kind::empty:
        return RationalFraction::zero();
    case Regex::Kind::epsilon:
        return RationalFraction::one();
    case Regex::Kind::letter:
        return RationalFraction::z();
    case Regex::Kind::alternation:
        f = checked_series(e.left(), alphabet, check) + checked_series(e.right(), alphabet, check);
        break;
    case Regex::Kind::concatenation:
        f = checked_series(e.left(), alphabet, check) * checked_series(e.right(), alphabet, check);
        break;
    case Regex::Kind::star: {
        auto inner = checked_series(e.left(), alphabet, check);
        if (inner.numerator().constant_term() != 0)
            throw ambiguous_expression(to_string(e), "star of an expression whose language contains the empty word");
        f = inner.star();
        break;
    }
    }
    if (check) {
        Dfa d = regex_to_dfa(e, alphabet);
        const std::size_t window = series_check_window(d, f);
        if (series_coefficients(f, window) != count_language(d, window))
            throw ambiguous_expression(to_string(e), "subexpression '" + to_string(e) +
                                                         "' is ambiguous: its series over-counts its language");
    }
    return f;
}

} // namespace detail

/// Generator series sum_l #L(e)_l z^l by the recursive rules: F_# = 0,
/// F_@ = 1, F_x = z, sums for unions, products for concatenations and
/// 1/(1 - F) for stars. The rules assume unions are disjoint and
/// factorisations unique; each composite subexpression is checked against
/// its automaton's counts and rejected with ambiguous_expression otherwise.
inline RationalFraction generator_series(const Regex& e, std::size_t alphabet) {
    return detail::checked_series(e, alphabet, true);
}
inline RationalFraction generator_series(const Regex& e) {
    return generator_series(e, std::max<std::size_t>(e.alphabet_bound(), 1));
}

/// Rational code: the words of a starred expression E = (E')*.
class RationalCode {
public:
    RationalCode(Regex expression, std::size_t alphabet)
        : expression_(std::move(expression)), alphabet_(alphabet) {
        if (expression_.kind() != Regex::Kind::star) throw invalid_input("a rational code is a starred expression");
        dfa_ = regex_to_dfa(expression_, alphabet_);
        auto counts = count_language(dfa_, 2 * dfa_.state_count() + 1);
        bool infinite = false;
        for (std::size_t l = 1; l < counts.size(); ++l) infinite = infinite || counts[l] != 0;
        if (!infinite) throw invalid_input("a rational code needs an infinite language");
        period_ = estimate_period();
    }
    explicit RationalCode(Regex expression)
        : RationalCode(expression, std::max<std::size_t>(expression.alphabet_bound(), 1)) {}

    const Regex& expression() const noexcept { return expression_; }
    Regex inner() const { return expression_.left(); }
    std::size_t alphabet() const noexcept { return alphabet_; }
    const Dfa& dfa() const noexcept { return dfa_; }
    /// gcd of the lengths carrying words, from the first 2|states| of them.
    std::size_t period() const noexcept { return period_; }

private:
    std::size_t estimate_period() const {
        const std::size_t n = dfa_.state_count();
        const std::size_t horizon = 8 * n + 16;
        auto counts = count_language(dfa_, horizon);
        std::size_t d = 0, found = 0;
        for (std::size_t l = 1; l <= horizon && found < 2 * n; ++l)
            if (counts[l] != 0) {
                d = std::gcd(d, l);
                ++found;
            }
        return std::max<std::size_t>(d, 1);
    }

    Regex expression_;
    std::size_t alphabet_;
    Dfa dfa_;
    std::size_t period_ = 1;
};

struct RationalCodeRate {
    /// Smallest-modulus root of the reduced denominator; absent when the
    /// denominator is constant.
    std::optional<Complex> pole;
    double nu = 0;
    double r_bits = 0;
    double dfa_spectral_radius = 0;
    RationalFraction series;
    std::size_t period = 1;
    std::string diagnostic;
};

/// nu = 1/|pole| from the generator series, cross-checked against the
/// spectral radius of the trimmed automaton.
inline RationalCodeRate rational_code_rate(const RationalCode& c, double tolerance = 1e-8) {
    RationalCodeRate r;
    r.series = generator_series(c.expression(), c.alphabet());
    r.period = c.period();
    auto trim = trim_adjacency(c.dfa());
    r.dfa_spectral_radius = trim.size() == 0 ? 0.0 : spectral_radius(trim);
    if (r.series.denominator().degree() <= 0) {
        r.nu = r.dfa_spectral_radius;
        r.diagnostic = "series is a polynomial; growth taken from the automaton";
    } else {
        r.pole = smallest_modulus_root(r.series.denominator());
        r.nu = 1.0 / std::abs(*r.pole);
        if (std::abs(r.nu - r.dfa_spectral_radius) > tolerance)
            r.diagnostic = "pole and automaton spectral radius disagree by " +
                           std::to_string(std::abs(r.nu - r.dfa_spectral_radius));
    }
    r.r_bits = std::log2(r.nu);
    return r;
}

} // namespace zerr
