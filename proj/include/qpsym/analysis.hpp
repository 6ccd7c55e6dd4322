#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "qpsym/lift.hpp"

namespace qpsym {

/// The characteristic form of a symmetry lift: the free linear data b_ij
/// (j < n) and constants c_i of the general solution, together with the
/// last column that the multiplier equation forces.
struct CharacteristicForm {
    AlgebraicNumber alpha;
    std::size_t n;
    std::vector<AlgebraicNumber> linear_coeffs; // n x (n-1), row-major
    std::vector<AlgebraicNumber> constants;     // n
    std::vector<AlgebraicNumber> last_column;   // n, derived

    const AlgebraicNumber& coeff(std::size_t i, std::size_t j) const {
        return linear_coeffs[i * (n - 1) + j];
    }
};

/// Splits a valid lift into its characteristic form and re-derives the last
/// matrix column from the multiplier relation
///   b_in = alpha a_i / a_n - sum_{j<n} b_ij a_j / a_n,
/// checking it against the stored column. RelationViolated cannot fire on a
/// lift accepted by multiplier_from_matrix; it is a self-check.
inline CharacteristicForm decompose_lift(const AffineLift& f, const FrequencyVector& a) {
    std::size_t n = a.size();
    if (f.size() != n) throw DimensionMismatch("lift dimension does not match flow");
    Multiplier m = multiplier_from_matrix(f.matrix(), a);
    const FieldPtr& field = a.field();
    AlgebraicNumber an_inv = a.coord(n - 1).inverse();

    CharacteristicForm form{m.value, n, {}, {}, {}};
    form.linear_coeffs.reserve(n * (n - 1));
    form.constants = f.translation();
    form.last_column.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        AlgebraicNumber derived = m.value * a.coord(i) * an_inv;
        for (std::size_t j = 0; j + 1 < n; ++j) {
            AlgebraicNumber bij = AlgebraicNumber::from_rational(field, Rational(f.matrix().at(i, j)));
            derived = derived - bij * a.coord(j) * an_inv;
            form.linear_coeffs.push_back(std::move(bij));
        }
        AlgebraicNumber stored =
            AlgebraicNumber::from_rational(field, Rational(f.matrix().at(i, n - 1)));
        if (derived != stored)
            throw RelationViolated("derived last column disagrees with the matrix");
        form.last_column.push_back(std::move(derived));
    }
    return form;
}

/// Residual of the lifted symmetry equation for an affine candidate:
/// component i is sum_j b_ij a_j - alpha a_i. Zero exactly iff (B, alpha)
/// satisfies the equation.
inline std::vector<AlgebraicNumber> pde_residual(const AffineLift& f, const AlgebraicNumber& alpha,
                                                 const FrequencyVector& a) {
    std::vector<AlgebraicNumber> image = apply_matrix(f.matrix(), a.coords());
    std::vector<AlgebraicNumber> r;
    r.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.push_back(image[i] - alpha * a.coord(i));
    return r;
}

inline bool residual_is_zero(const std::vector<AlgebraicNumber>& r) {
    return std::all_of(r.begin(), r.end(), [](const AlgebraicNumber& x) { return x.is_zero(); });
}

/// Maximum circular gap of the direction set {frac(m a_1/a_n) : |m| <= M}
/// on [0,1), each point approximated to within eps. Nonincreasing in M and
/// tending to 0 as M grows, by density of the set. n = 2 only.
inline Rational density_gap(const FrequencyVector& a, long max_m, const Rational& eps) {
    if (a.size() != 2)
        throw DimensionUnsupported("gap statistic needs n = 2; use the covering radius");
    if (max_m < 0) throw Error("M must be >= 0");
    AlgebraicNumber ratio = a.coord(0) / a.coord(1);
    std::vector<Rational> pts;
    pts.reserve(2 * static_cast<std::size_t>(max_m) + 1);
    for (long m = -max_m; m <= max_m; ++m) {
        Rational p = frac(ratio * Rational(m)).approximate(eps);
        p -= Rational(p.floor()); // guard against eps spill outside [0,1)
        pts.push_back(std::move(p));
    }
    std::sort(pts.begin(), pts.end());
    Rational gap = pts.front() + Rational(1) - pts.back();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) gap = std::max(gap, pts[i + 1] - pts[i]);
    return gap;
}

/// Covering radius of the reduced direction set on the (n-1)-torus in the
/// L-infinity torus metric, probed on the uniform k/grid lattice:
/// max over probes of the distance to the nearest set point. Nonincreasing
/// in M for a fixed grid and eps.
inline Rational density_covering_radius(const FrequencyVector& a, long max_m, long grid,
                                        const Rational& eps) {
    if (max_m < 1) throw Error("M must be >= 1");
    if (grid < 1) throw Error("grid must be >= 1");
    std::size_t dim = a.size() - 1;
    std::vector<AlgebraicNumber> ratios;
    ratios.reserve(dim);
    AlgebraicNumber an_inv = a.coord(a.size() - 1).inverse();
    for (std::size_t i = 0; i < dim; ++i) ratios.push_back(a.coord(i) * an_inv);

    std::vector<std::vector<Rational>> pts;
    pts.reserve(2 * static_cast<std::size_t>(max_m) + 1);
    for (long m = -max_m; m <= max_m; ++m) {
        std::vector<Rational> p;
        p.reserve(dim);
        for (const auto& r : ratios) {
            Rational c = frac(r * Rational(m)).approximate(eps);
            c -= Rational(c.floor());
            p.push_back(std::move(c));
        }
        pts.push_back(std::move(p));
    }

    const Rational one(1);
    auto circ_dist = [&](const Rational& u, const Rational& v) {
        Rational d = (u - v).abs();
        return std::min(d, one - d);
    };

    Rational radius(0);
    std::vector<long> probe(dim, 0);
    for (;;) {
        std::vector<Rational> qpt;
        qpt.reserve(dim);
        for (long k : probe) qpt.emplace_back(BigInt(k), BigInt(grid));
        Rational best = one; // any distance is < 1
        for (const auto& p : pts) {
            Rational d(0);
            for (std::size_t i = 0; i < dim; ++i) d = std::max(d, circ_dist(p[i], qpt[i]));
            best = std::min(best, d);
            if (best.is_zero()) break;
        }
        radius = std::max(radius, best);
        std::size_t i = 0;
        while (i < dim && ++probe[i] == grid) probe[i++] = 0;
        if (i == dim) break;
    }
    return radius;
}

} // namespace qpsym
