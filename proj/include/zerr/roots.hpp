#pragma once

#include "zerr/bigint.hpp"
#include "zerr/error.hpp"
#include "zerr/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace zerr {

using Complex = std::complex<double>;

struct RootOptions {
    double tolerance = 1e-10;
    int max_iterations = 200;
};

namespace detail {

using ComplexLd = std::complex<long double>;

inline std::vector<long double> to_long_double(const IntPolynomial& p) {
    std::vector<long double> c;
    c.reserve(p.coefficients().size());
    for (const auto& v : p.coefficients()) c.push_back(v.convert_to<long double>());
    return c;
}

inline void horner(const std::vector<long double>& c, ComplexLd z, ComplexLd& value, ComplexLd& slope) {
    value = 0;
    slope = 0;
    for (std::size_t k = c.size(); k-- > 0;) {
        slope = slope * z + value;
        value = value * z + c[k];
    }
}

inline Complex ipow(Complex base, std::size_t e) {
    Complex acc{1.0, 0.0};
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

} // namespace detail

/// All complex roots of p (with multiplicity), by Aberth simultaneous
/// iteration from a circle of Cauchy-bound radius, then Newton polishing.
///
/// Sorted by decreasing modulus, then decreasing real and imaginary part.
inline std::vector<Complex> polynomial_roots(const IntPolynomial& p, const RootOptions& opt = {}) {
    if (p.degree() < 1) throw invalid_input("root finding needs a polynomial of degree >= 1");

    std::size_t zeros = 0;
    while (p.coefficient(zeros) == 0) ++zeros;
    std::vector<BigInt> rest(p.coefficients().begin() + static_cast<std::ptrdiff_t>(zeros), p.coefficients().end());
    IntPolynomial q(std::move(rest));

    std::vector<Complex> roots(zeros, Complex{0.0, 0.0});
    const int n = q.degree();
    if (n >= 1) {
        auto c = detail::to_long_double(q);
        const long double lead = c.back();
        for (auto& v : c) v /= lead;
        long double bound = 0;
        for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(c[static_cast<std::size_t>(k)]));
        bound += 1;

        std::vector<detail::ComplexLd> z(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            long double angle = 2 * std::numbers::pi_v<long double> * j / n + 0.4L;
            z[static_cast<std::size_t>(j)] = std::polar(bound, angle);
        }
        for (int it = 0; it < opt.max_iterations; ++it) {
            long double worst = 0;
            for (std::size_t j = 0; j < z.size(); ++j) {
                detail::ComplexLd value, slope;
                detail::horner(c, z[j], value, slope);
                if (value == detail::ComplexLd(0)) continue;
                detail::ComplexLd ratio = value / slope;
                detail::ComplexLd repulsion = 0;
                for (std::size_t k = 0; k < z.size(); ++k)
                    if (k != j) repulsion += detail::ComplexLd(1) / (z[j] - z[k]);
                detail::ComplexLd step = ratio / (detail::ComplexLd(1) - ratio * repulsion);
                z[j] -= step;
                worst = std::max(worst, std::abs(step) / std::max<long double>(1, std::abs(z[j])));
            }
            if (worst <= opt.tolerance) break;
        }
        for (auto& r : z) {
            for (int k = 0; k < 3; ++k) {
                detail::ComplexLd value, slope;
                detail::horner(c, r, value, slope);
                if (slope == detail::ComplexLd(0)) break;
                r -= value / slope;
            }
            Complex rd{static_cast<double>(r.real()), static_cast<double>(r.imag())};
            if (std::abs(rd.imag()) <= 1e-10 * std::max(1.0, std::abs(rd))) rd.imag(0.0);
            roots.push_back(rd);
        }
    }
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() > b.imag();
    });
    return roots;
}

/// Unique positive root of X^n - sum a_l X^(n-l) with all a_l >= 0, not all
/// zero. Bisection on [1, 1 + max a_l]; the polynomial is negative below the
/// root and positive above.
inline double unique_positive_root(const IntPolynomial& p) {
    const int n = p.degree();
    if (n < 1 || p.leading() != 1) throw invalid_input("expected a monic polynomial of degree >= 1");
    BigInt largest = 0;
    for (int k = 0; k < n; ++k) {
        const BigInt& v = p.coefficients()[static_cast<std::size_t>(k)];
        if (v > 0) throw invalid_input("expected non-positive lower coefficients: " + p.to_string());
        largest = std::max(largest, BigInt(-v));
    }
    if (largest == 0) throw invalid_input("characteristic polynomial has no counted words: " + p.to_string());

    auto c = detail::to_long_double(p);
    auto eval = [&](long double x) {
        long double acc = 0;
        for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
        return acc;
    };
    long double lo = 1, hi = 1 + largest.convert_to<long double>();
    if (eval(lo) >= 0) return 1.0;
    for (int it = 0; it < 400; ++it) {
        long double mid = (lo + hi) / 2;
        if (mid <= lo || mid >= hi) break;
        if (eval(mid) < 0)
            lo = mid;
        else
            hi = mid;
    }
    return static_cast<double>((lo + hi) / 2);
}

/// Root of minimal modulus. Ties (relative 1e-9) go to the largest real part,
/// then the largest imaginary part.
inline Complex smallest_modulus_root(const IntPolynomial& p, const RootOptions& opt = {}) {
    if (p.degree() < 1) throw invalid_input("constant polynomial has no roots");
    auto roots = polynomial_roots(p, opt);
    double smallest = std::abs(roots.back());
    Complex best = roots.back();
    for (const auto& r : roots) {
        if (std::abs(r) > smallest * (1 + 1e-9) + 1e-12) continue;
        if (r.real() > best.real() + 1e-12 || (std::abs(r.real() - best.real()) <= 1e-12 && r.imag() > best.imag()))
            best = r;
    }
    return best;
}

/// One term h * root^L of an exponential-polynomial closed form.
struct ExponentialTerm {
    Complex root;
    Complex coefficient;
};

/// Evaluates sum h_i root_i^L.
inline Complex evaluate_closed_form(const std::vector<ExponentialTerm>& terms, std::size_t l) {
    Complex acc{0.0, 0.0};
    for (const auto& t : terms) acc += t.coefficient * detail::ipow(t.root, l);
    return acc;
}

/// Coefficients h_i with seed[j] = sum_i h_i r_i^(first_index + j) for the
/// roots r_i of `char_poly`, solved as a Vandermonde system. Terms come in the
/// order of polynomial_roots (dominant root first).
inline std::vector<ExponentialTerm> closed_form_counts(const IntPolynomial& char_poly, const std::vector<BigInt>& seed,
                                                       std::size_t first_index = 0) {
    const int n = char_poly.degree();
    if (n < 1) throw invalid_input("closed form needs a characteristic polynomial of degree >= 1");
    if (!char_poly.is_squarefree()) throw unsupported_multiplicity("characteristic polynomial has a repeated root");
    if (seed.size() < static_cast<std::size_t>(n)) throw invalid_input("closed form needs as many seed terms as the degree");

    auto roots = polynomial_roots(char_poly);
    const std::size_t m = static_cast<std::size_t>(n);
    std::vector<std::vector<Complex>> a(m, std::vector<Complex>(m + 1));
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < m; ++i) a[j][i] = detail::ipow(roots[i], first_index + j);
        a[j][m] = Complex(seed[j].convert_to<double>(), 0.0);
    }
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < m; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        if (std::abs(a[pivot][col]) == 0.0) throw unsupported_multiplicity("singular Vandermonde system");
        std::swap(a[col], a[pivot]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col) continue;
            Complex factor = a[r][col] / a[col][col];
            for (std::size_t k = col; k <= m; ++k) a[r][k] -= factor * a[col][k];
        }
    }
    std::vector<ExponentialTerm> terms;
    terms.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        Complex h = a[i][m] / a[i][i];
        if (std::abs(h.imag()) <= 1e-12 * std::max(1.0, std::abs(h))) h.imag(0.0);
        terms.push_back({roots[i], h});
    }
    return terms;
}

/// Envelope functions of an oscillating count sequence with a closed form,
/// evaluated at real t > 0. `upper` adds the moduli of the non-dominant
/// contributions, `lower` subtracts them, `dominant` keeps only the first
/// (dominant) term. Each value is already raised to 1/t.
struct Envelopes {
    double upper;
    double lower;
    double dominant;
};

inline Envelopes oscillation_envelopes(const std::vector<ExponentialTerm>& terms, double t) {
    if (terms.empty() || t <= 0) throw invalid_input("envelopes need a closed form and t > 0");
    auto part = [&](const ExponentialTerm& e) { return e.coefficient.real() * std::pow(std::abs(e.root), t); };
    double dominant = part(terms.front());
    double rest = 0;
    for (std::size_t i = 1; i < terms.size(); ++i) rest += part(terms[i]);
    auto root = [&](double v) { return v > 0 ? std::pow(v, 1.0 / t) : std::nan(""); };
    return {root(dominant + rest), root(dominant - rest), root(dominant)};
}

} // namespace zerr
