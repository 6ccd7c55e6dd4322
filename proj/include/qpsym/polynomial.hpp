#pragma once

#include <tuple>
#include <utility>
#include <vector>

#include "qpsym/rational.hpp"

namespace qpsym {

/// Dense univariate polynomial over the rationals, coefficients low-to-high.
/// The zero polynomial is the empty vector; otherwise the leading
/// coefficient is nonzero.
using Poly = std::vector<Rational>;

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly poly_from_int(const std::vector<BigInt>& coeffs) {
    Poly p;
    p.reserve(coeffs.size());
    for (const auto& c : coeffs) p.emplace_back(c);
    poly_trim(p);
    return p;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    poly_trim(r);
    return r;
}

inline Poly poly_scale(const Poly& a, const Rational& s) {
    if (s.is_zero()) return {};
    Poly r = a;
    for (auto& c : r) c *= s;
    return r;
}

inline Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_scale(b, Rational(-1))); }

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

/// Euclidean division: a = q*b + r with deg r < deg b. Requires b != 0.
inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.empty()) throw DivisionByZero("polynomial division by zero");
    Poly rem = a;
    Poly quot;
    if (rem.size() >= b.size()) quot.assign(rem.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    while (rem.size() >= b.size()) {
        std::size_t shift = rem.size() - b.size();
        Rational f = rem.back() / lead;
        quot[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= f * b[i];
        poly_trim(rem); // the leading term cancels exactly
    }
    poly_trim(quot);
    return {quot, rem};
}

/// Monic greatest common divisor.
inline Poly poly_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && !(a.back() == Rational(1))) a = poly_scale(a, a.back().inverse());
    return a;
}

/// Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
inline std::tuple<Poly, Poly, Poly> poly_ext_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    Poly r0 = a, r1 = b;
    Poly u0{Rational(1)}, u1{};
    Poly v0{}, v1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r2] = poly_divmod(r0, r1);
        Poly u2 = poly_sub(u0, poly_mul(q, u1));
        Poly v2 = poly_sub(v0, poly_mul(q, v1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (!r0.empty() && !(r0.back() == Rational(1))) {
        Rational inv = r0.back().inverse();
        r0 = poly_scale(r0, inv);
        u0 = poly_scale(u0, inv);
        v0 = poly_scale(v0, inv);
    }
    return {r0, u0, v0};
}

inline Poly poly_derivative(const Poly& p) {
    if (p.size() <= 1) return {};
    Poly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Rational(BigInt(i));
    return d;
}

/// Exact Horner evaluation.
inline Rational poly_eval(const Poly& p, const Rational& x) {
    Rational acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

/// Interval Horner: encloses {p(x) : x in [lo, hi]}. Inclusion-isotone.
inline std::pair<Rational, Rational> poly_eval_interval(const Poly& p, const Rational& lo,
                                                        const Rational& hi) {
    Rational alo, ahi; // accumulator interval, starts at [0, 0]
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        Rational c[4] = {alo * lo, alo * hi, ahi * lo, ahi * hi};
        Rational mn = c[0], mx = c[0];
        for (int i = 1; i < 4; ++i) {
            if (c[i] < mn) mn = c[i];
            if (c[i] > mx) mx = c[i];
        }
        alo = mn + *it;
        ahi = mx + *it;
    }
    return {alo, ahi};
}

} // namespace qpsym
