#pragma once

#include "zerr/bigint.hpp"
#include "zerr/error.hpp"
#include "zerr/polynomial.hpp"
#include "zerr/rational_fraction.hpp"

#include <vector>

namespace zerr {

/// Extends `seed` up to index `up_to` with
///   t[L] = sum_{l=1..n} coefficients[l-1] * t[L-l],
/// where coefficients[l-1] multiplies the term l steps back. The seed terms
/// are kept as given; it must hold at least n terms.
inline CountSequence linear_recurrence_extend(const std::vector<BigInt>& coefficients, const CountSequence& seed,
                                              std::size_t up_to) {
    const std::size_t n = coefficients.size();
    if (seed.size() < n) throw invalid_input("recurrence seed shorter than the recurrence order");
    std::vector<BigInt> t(seed.terms());
    if (t.size() > up_to + 1) t.resize(up_to + 1);
    while (t.size() <= up_to) {
        const std::size_t l = t.size();
        BigInt acc = 0;
        for (std::size_t k = 1; k <= n; ++k)
            if (coefficients[k - 1] != 0) acc += coefficients[k - 1] * t[l - k];
        t.push_back(std::move(acc));
    }
    return CountSequence(std::move(t));
}

/// Characteristic polynomial X^n - sum_{l} c_l X^(n-l) of counts per length,
/// with n the largest length carrying a nonzero count.
inline IntPolynomial characteristic_polynomial(const std::vector<BigInt>& per_length) {
    std::size_t n = per_length.size();
    while (n > 0 && per_length[n - 1] == 0) --n;
    if (n == 0) throw invalid_input("characteristic polynomial of an empty length profile");
    std::vector<BigInt> c(n + 1);
    c[n] = 1;
    for (std::size_t l = 1; l <= n; ++l) c[n - l] = -per_length[l - 1];
    return IntPolynomial(std::move(c));
}

/// Generator series 1 / (1 - sum_l c_l z^l) of all concatenations.
inline RationalFraction concatenation_series(const std::vector<BigInt>& per_length) {
    std::vector<BigInt> f(per_length.size() + 1);
    for (std::size_t l = 1; l <= per_length.size(); ++l) f[l] = per_length[l - 1];
    return RationalFraction(IntPolynomial(std::move(f))).star();
}

} // namespace zerr
