#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qpsym/polynomial.hpp"

namespace qpsym {

/// A real number field Q(beta) presented as Q[z]/(p) together with a
/// rational interval isolating the real root beta that fixes the embedding.
///
/// Construction validates what is cheap to validate: p monic over Z, a sign
/// change across the interval, squarefreeness (gcd(p, p') constant), and an
/// integer-root screen that rejects roots other than +-1. Irreducibility is
/// not established up front; a reducible modulus surfaces later as
/// ReduciblePolynomial when a zero divisor is inverted or refined.
class NumberField {
public:
    NumberField(std::vector<BigInt> min_poly, Rational root_lo, Rational root_hi)
        : min_poly_(std::move(min_poly)), lo_(std::move(root_lo)), hi_(std::move(root_hi)) {
        if (min_poly_.size() < 2) throw InvalidField("min_poly must have degree >= 1");
        if (min_poly_.back() != 1) throw InvalidField("min_poly must be monic");
        min_poly_q_ = poly_from_int(min_poly_);
        if (!(lo_ < hi_)) throw InvalidField("root interval must satisfy lo < hi");
        sign_lo_ = poly_eval(min_poly_q_, lo_).sign();
        int sign_hi = poly_eval(min_poly_q_, hi_).sign();
        if (sign_lo_ == 0 || sign_hi == 0 || sign_lo_ == sign_hi)
            throw InvalidField("min_poly must change sign across the root interval");
        Poly g = poly_gcd(min_poly_q_, poly_derivative(min_poly_q_));
        if (poly_degree(g) > 0) throw InvalidField("min_poly must be squarefree");
        if (degree() >= 2) screen_integer_roots();
    }

    std::size_t degree() const { return min_poly_.size() - 1; }
    const std::vector<BigInt>& min_poly() const { return min_poly_; }
    const Poly& min_poly_rational() const { return min_poly_q_; }
    const Rational& root_lower() const { return lo_; }
    const Rational& root_upper() const { return hi_; }
    int sign_at_lower() const { return sign_lo_; }

    bool operator==(const NumberField& o) const {
        return min_poly_ == o.min_poly_ && lo_ == o.lo_ && hi_ == o.hi_;
    }
    bool operator!=(const NumberField& o) const { return !(*this == o); }

private:
    // Any rational root of a monic integer polynomial is an integer dividing
    // the constant term. Roots at +-1 are tolerated so that reducible moduli
    // like z^2 - 1 load and fail lazily; anything else is rejected here.
    void screen_integer_roots() {
        BigInt c0 = min_poly_.front();
        if (c0 == 0) throw InvalidField("min_poly has rational root 0");
        BigInt a = c0 < 0 ? BigInt(-c0) : c0;
        std::vector<BigInt> divisors{1};
        for (BigInt i = 2; i * i <= a && i <= 1000000; ++i)
            if (a % i == 0) {
                divisors.push_back(i);
                divisors.push_back(a / i);
            }
        if (a > 1) divisors.push_back(a);
        for (const BigInt& d : divisors)
            for (BigInt r : {d, BigInt(-d)}) {
                if (r == 1 || r == -1) continue;
                BigInt v = 0;
                for (auto it = min_poly_.rbegin(); it != min_poly_.rend(); ++it) v = v * r + *it;
                if (v == 0) throw InvalidField("min_poly has rational root " + r.str());
            }
    }

    std::vector<BigInt> min_poly_;
    Poly min_poly_q_;
    Rational lo_, hi_;
    int sign_lo_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

inline FieldPtr make_field(std::vector<BigInt> min_poly, Rational lo, Rational hi) {
    return std::make_shared<NumberField>(std::move(min_poly), std::move(lo), std::move(hi));
}

/// Element of a number field in power-basis coordinates. Immutable; all
/// arithmetic is exact in Q[z]/(p). Sign and approximation queries refine a
/// local copy of the field's isolating interval, so shared field objects are
/// never mutated.
class AlgebraicNumber {
public:
    AlgebraicNumber(FieldPtr field, std::vector<Rational> coords)
        : field_(std::move(field)), coords_(std::move(coords)) {
        if (!field_) throw InvalidField("null field");
        if (coords_.size() != field_->degree())
            throw FieldMismatch("coordinate count does not match field degree");
    }

    static AlgebraicNumber zero(const FieldPtr& f) {
        return AlgebraicNumber(f, std::vector<Rational>(f->degree()));
    }
    static AlgebraicNumber from_rational(const FieldPtr& f, Rational q) {
        std::vector<Rational> c(f->degree());
        c[0] = std::move(q);
        return AlgebraicNumber(f, std::move(c));
    }
    static AlgebraicNumber one(const FieldPtr& f) { return from_rational(f, Rational(1)); }
    /// The distinguished root beta. For a degree-1 field this is rational.
    static AlgebraicNumber generator(const FieldPtr& f) {
        if (f->degree() == 1) return from_rational(f, Rational(-f->min_poly().front()));
        std::vector<Rational> c(f->degree());
        c[1] = Rational(1);
        return AlgebraicNumber(f, std::move(c));
    }

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (!c.is_zero()) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < coords_.size(); ++i)
            if (!coords_[i].is_zero()) return false;
        return true;
    }
    const Rational& as_rational() const {
        if (!is_rational()) throw Error("element is not rational");
        return coords_[0];
    }

    bool operator==(const AlgebraicNumber& o) const {
        return same_field(o) && coords_ == o.coords_;
    }
    bool operator!=(const AlgebraicNumber& o) const { return !(*this == o); }

    AlgebraicNumber operator-() const {
        std::vector<Rational> c(coords_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coords_[i];
        return AlgebraicNumber(field_, std::move(c));
    }

    AlgebraicNumber operator+(const AlgebraicNumber& o) const {
        check_field(o);
        std::vector<Rational> c(coords_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] + o.coords_[i];
        return AlgebraicNumber(field_, std::move(c));
    }
    AlgebraicNumber operator-(const AlgebraicNumber& o) const { return *this + (-o); }

    AlgebraicNumber operator*(const AlgebraicNumber& o) const {
        check_field(o);
        std::size_t d = field_->degree();
        std::vector<Rational> prod(2 * d - 1);
        for (std::size_t i = 0; i < d; ++i) {
            if (coords_[i].is_zero()) continue;
            for (std::size_t j = 0; j < d; ++j) prod[i + j] += coords_[i] * o.coords_[j];
        }
        reduce(prod, d);
        prod.resize(d);
        return AlgebraicNumber(field_, std::move(prod));
    }

    AlgebraicNumber operator*(const Rational& s) const {
        std::vector<Rational> c(coords_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] * s;
        return AlgebraicNumber(field_, std::move(c));
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the modulus. A nonconstant gcd means the modulus was reducible.
    AlgebraicNumber inverse() const {
        Poly rep(coords_);
        poly_trim(rep);
        if (rep.empty()) throw DivisionByZero("inverse of zero field element");
        auto [g, u, v] = poly_ext_gcd(rep, field_->min_poly_rational());
        (void)v;
        if (poly_degree(g) > 0)
            throw ReduciblePolynomial("element shares a factor with the modulus");
        Poly inv = poly_divmod(u, field_->min_poly_rational()).second;
        inv.resize(field_->degree(), Rational(0));
        return AlgebraicNumber(field_, std::move(inv));
    }

    AlgebraicNumber operator/(const AlgebraicNumber& o) const { return *this * o.inverse(); }

    /// Exact sign of the real embedding: -1, 0 or +1. Decided by refining
    /// the isolating interval with exact rational endpoint evaluation until
    /// the enclosure of the element excludes zero. For genuinely irreducible
    /// moduli this always terminates; a zero divisor of a reducible modulus
    /// is detected after a bounded number of refinements and reported.
    int sign() const {
        Poly rep(coords_);
        poly_trim(rep);
        if (rep.empty()) return 0;
        if (rep.size() == 1) return rep[0].sign();
        Rational lo = field_->root_lower(), hi = field_->root_upper();
        const int sign_lo = field_->sign_at_lower();
        const Poly& p = field_->min_poly_rational();
        for (int iter = 0;; ++iter) {
            auto [elo, ehi] = poly_eval_interval(rep, lo, hi);
            if (elo.sign() > 0) return 1;
            if (ehi.sign() < 0) return -1;
            if (iter == 32 && poly_degree(poly_gcd(rep, p)) > 0)
                throw ReduciblePolynomial("sign refinement hit a zero divisor");
            Rational mid = (lo + hi) * Rational(BigInt(1), BigInt(2));
            int s = poly_eval(p, mid).sign();
            if (s == 0) return poly_eval(rep, mid).sign(); // beta is exactly mid
            (s == sign_lo ? lo : hi) = mid;
        }
    }

    /// A rational q with |q - x| < eps, obtained by the same interval
    /// refinement; q is the midpoint of the final enclosure.
    Rational approximate(const Rational& eps) const {
        if (!(Rational(0) < eps)) throw Error("approximate requires eps > 0");
        Poly rep(coords_);
        poly_trim(rep);
        if (rep.size() <= 1) return rep.empty() ? Rational(0) : rep[0];
        Rational lo = field_->root_lower(), hi = field_->root_upper();
        const int sign_lo = field_->sign_at_lower();
        const Poly& p = field_->min_poly_rational();
        const Rational half(BigInt(1), BigInt(2));
        for (;;) {
            auto [elo, ehi] = poly_eval_interval(rep, lo, hi);
            if (ehi - elo < eps) return (elo + ehi) * half;
            Rational mid = (lo + hi) * half;
            int s = poly_eval(p, mid).sign();
            if (s == 0) return poly_eval(rep, mid); // beta is exactly mid
            (s == sign_lo ? lo : hi) = mid;
        }
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) s += ' ';
            s += coords_[i].to_string();
        }
        return s;
    }

    bool same_field(const AlgebraicNumber& o) const {
        return field_ == o.field_ || *field_ == *o.field_;
    }

private:
    void check_field(const AlgebraicNumber& o) const {
        if (!same_field(o)) throw FieldMismatch("operands belong to different fields");
    }

    // Reduce a degree < 2d-1 coefficient vector modulo the monic modulus.
    void reduce(std::vector<Rational>& c, std::size_t d) const {
        const auto& p = field_->min_poly();
        for (std::size_t k = c.size(); k-- > d;) {
            if (c[k].is_zero()) continue;
            Rational f = c[k];
            c[k] = Rational(0);
            for (std::size_t j = 0; j < d; ++j) c[k - d + j] -= f * Rational(p[j]);
        }
    }

    FieldPtr field_;
    std::vector<Rational> coords_;
};

/// Exact three-way comparison of real embeddings.
inline int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) { return (a - b).sign(); }

/// Largest integer <= x, decided exactly via sign refinement.
inline BigInt int_floor(const AlgebraicNumber& x) {
    if (x.is_rational()) return x.as_rational().floor();
    BigInt k = x.approximate(Rational(BigInt(1), BigInt(4))).floor();
    auto shifted_sign = [&](const BigInt& m) {
        return (x - AlgebraicNumber::from_rational(x.field(), Rational(m))).sign();
    };
    while (shifted_sign(k) < 0) --k;
    while (shifted_sign(k + 1) >= 0) ++k;
    return k;
}

/// Fractional part x - floor(x), in [0, 1).
inline AlgebraicNumber frac(const AlgebraicNumber& x) {
    return x - AlgebraicNumber::from_rational(x.field(), Rational(int_floor(x)));
}

/// Lexicographic order on coordinates; a total order usable for containers
/// (not the order of real embeddings).
inline bool coord_less(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    const auto& x = a.coords();
    const auto& y = b.coords();
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        if (x[i] < y[i]) return true;
        if (y[i] < x[i]) return false;
    }
    return x.size() < y.size();
}

} // namespace qpsym
