#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qpsym/flow.hpp"

namespace qpsym {

/// Applies an integer matrix to a vector of field elements.
inline std::vector<AlgebraicNumber> apply_matrix(const IntMatrix& m,
                                          const std::vector<AlgebraicNumber>& v) {
    if (m.size() != v.size()) throw DimensionMismatch("matrix/vector size mismatch");
    std::vector<AlgebraicNumber> r;
    r.reserve(v.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        AlgebraicNumber acc = AlgebraicNumber::zero(v.front().field());
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (m.at(i, j) == 0) continue;
            acc = acc + v[j] * Rational(m.at(i, j));
        }
        r.push_back(std::move(acc));
    }
    return r;
}

/// Affine lift x -> Bx + c of a torus symmetry: B unimodular, c reduced to
/// the fundamental domain [0,1)^n so that equal torus maps compare equal.
class AffineLift {
public:
    AffineLift(IntMatrix matrix, std::vector<AlgebraicNumber> translation)
        : matrix_(std::move(matrix)), translation_(std::move(translation)) {
        if (matrix_.size() != translation_.size())
            throw DimensionMismatch("translation length does not match matrix size");
        if (!matrix_.is_unimodular())
            throw NotUnimodular("linear part must have determinant +-1");
        for (auto& t : translation_) t = frac(t);
    }

    static AffineLift identity(const FieldPtr& field, std::size_t n) {
        return AffineLift(IntMatrix::identity(n),
                          std::vector<AlgebraicNumber>(n, AlgebraicNumber::zero(field)));
    }

    const IntMatrix& matrix() const { return matrix_; }
    const std::vector<AlgebraicNumber>& translation() const { return translation_; }
    std::size_t size() const { return matrix_.size(); }
    const FieldPtr& field() const { return translation_.front().field(); }

    bool translation_is_zero() const {
        for (const auto& t : translation_)
            if (!t.is_zero()) return false;
        return true;
    }

    bool operator==(const AffineLift& o) const {
        return matrix_ == o.matrix_ && translation_ == o.translation_;
    }
    bool operator!=(const AffineLift& o) const { return !(*this == o); }
    bool operator<(const AffineLift& o) const {
        if (matrix_ != o.matrix_) return matrix_ < o.matrix_;
        for (std::size_t i = 0; i < translation_.size(); ++i) {
            if (coord_less(translation_[i], o.translation_[i])) return true;
            if (coord_less(o.translation_[i], translation_[i])) return false;
        }
        return false;
    }

    /// "<matrix>@<translation>"; translation coordinates are '|'-separated
    /// power-basis tuples with ','-separated rational entries.
    std::string to_string() const {
        std::string s = matrix_.to_string();
        s += '@';
        for (std::size_t i = 0; i < translation_.size(); ++i) {
            if (i) s += '|';
            const auto& c = translation_[i].coords();
            for (std::size_t k = 0; k < c.size(); ++k) {
                if (k) s += ',';
                s += c[k].to_string();
            }
        }
        return s;
    }

private:
    IntMatrix matrix_;
    std::vector<AlgebraicNumber> translation_;
};

/// Composition (f . g)(x) = f(g(x)) = B_f B_g x + B_f c_g + c_f.
inline AffineLift compose(const AffineLift& f, const AffineLift& g) {
    if (f.size() != g.size()) throw DimensionMismatch("composing lifts of different dimension");
    std::vector<AlgebraicNumber> t = apply_matrix(f.matrix(), g.translation());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = t[i] + f.translation()[i];
    return AffineLift(f.matrix() * g.matrix(), std::move(t));
}

inline AffineLift invert(const AffineLift& f) {
    IntMatrix inv = f.matrix().inverse_unimodular();
    std::vector<AlgebraicNumber> t = apply_matrix(inv, f.translation());
    for (auto& x : t) x = -x;
    return AffineLift(std::move(inv), std::move(t));
}

/// Lift of the time-t flow map: (I, t*a) reduced mod Z^n.
inline AffineLift flow_translation(const Rational& t, const FrequencyVector& a) {
    std::vector<AlgebraicNumber> c;
    c.reserve(a.size());
    for (const auto& ai : a.coords()) c.push_back(ai * t);
    return AffineLift(IntMatrix::identity(a.size()), std::move(c));
}

/// A multiplier together with the unimodular matrix realizing it on the
/// frequency vector: witness * a = value * a, exactly.
struct Multiplier {
    AlgebraicNumber value;
    IntMatrix witness;

    bool operator==(const Multiplier& o) const {
        return value == o.value && witness == o.witness;
    }
};

/// The multiplier of the symmetry with linear part B: the common ratio
/// (B a)_i / a_i. Fails with NotAnEigenvector if the rows disagree, with
/// NotUnimodular if det B != +-1.
inline Multiplier multiplier_from_matrix(const IntMatrix& b, const FrequencyVector& a) {
    if (b.size() != a.size()) throw DimensionMismatch("matrix size does not match flow");
    std::vector<AlgebraicNumber> image = apply_matrix(b, a.coords());
    AlgebraicNumber alpha = image[0] / a.coord(0);
    for (std::size_t i = 1; i < a.size(); ++i)
        if (image[i] / a.coord(i) != alpha)
            throw NotAnEigenvector("frequency vector is not an eigenvector of the matrix");
    if (!b.is_unimodular()) throw NotUnimodular("eigen-relation holds but det is not +-1");
    return Multiplier{std::move(alpha), b};
}

/// The unique integer matrix with B a = alpha a, obtained by solving each
/// row exactly in power-basis coordinates. Fails with NoIntegerSolution if
/// no integral solution exists, with NotUnimodular if alpha is not a unit.
inline IntMatrix matrix_from_multiplier(const AlgebraicNumber& alpha, const FrequencyVector& a) {
    std::size_t n = a.size();
    std::size_t d = a.field()->degree();
    std::vector<std::vector<Rational>> sys(d, std::vector<Rational>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < d; ++k) sys[k][j] = a.coord(j).coords()[k];
    std::vector<std::vector<Rational>> rhs(d, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        AlgebraicNumber target = alpha * a.coord(i);
        for (std::size_t k = 0; k < d; ++k) rhs[k][i] = target.coords()[k];
    }
    auto x = solve_linear(sys, rhs);
    if (!x) throw NoIntegerSolution("alpha*a is outside the integer span of a");
    IntMatrix b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& v = (*x)[j][i];
            if (!v.is_integer()) throw NoIntegerSolution("solution matrix is not integral");
            b.at(i, j) = v.numerator();
        }
    if (!b.is_unimodular()) throw NotUnimodular("alpha is not a unit: det of solution is not +-1");
    return b;
}

enum class SymmetryKind { Symmetry, Reversing, Generalized };

struct Classification {
    SymmetryKind kind;
    Multiplier multiplier;
};

/// Classifies a lift by its multiplier: alpha = 1 is a symmetry, alpha = -1
/// a reversing symmetry (linear part forced to -I), anything else is a
/// proper generalized symmetry.
inline Classification classify(const AffineLift& f, const FrequencyVector& a) {
    Multiplier m = multiplier_from_matrix(f.matrix(), a);
    const FieldPtr& fld = a.field();
    if (m.value == AlgebraicNumber::one(fld)) {
        if (f.matrix() != IntMatrix::identity(a.size()))
            throw RelationViolated("multiplier 1 with linear part != I");
        return {SymmetryKind::Symmetry, std::move(m)};
    }
    if (m.value == -AlgebraicNumber::one(fld)) {
        if (f.matrix() != -IntMatrix::identity(a.size()))
            throw RelationViolated("multiplier -1 with linear part != -I");
        return {SymmetryKind::Reversing, std::move(m)};
    }
    return {SymmetryKind::Generalized, std::move(m)};
}

inline const char* to_string(SymmetryKind k) {
    switch (k) {
        case SymmetryKind::Symmetry: return "Symmetry";
        case SymmetryKind::Reversing: return "Reversing";
        default: return "Generalized";
    }
}

} // namespace qpsym
