#pragma once

#include <utility>
#include <vector>

#include "qpsym/matrix.hpp"
#include "qpsym/number_field.hpp"

namespace qpsym {

/// True iff the elements admit no nonzero rational linear relation, i.e.
/// their power-basis coordinate matrix has full row rank.
inline bool rationally_independent(const std::vector<AlgebraicNumber>& a) {
    if (a.empty()) return false;
    std::vector<std::vector<Rational>> m;
    m.reserve(a.size());
    for (const auto& x : a) {
        if (!x.same_field(a.front())) throw FieldMismatch("mixed fields in independence check");
        m.push_back(x.coords());
    }
    return rational_rank(std::move(m)) == a.size();
}

/// The frequency vector of a constant vector field on the n-torus:
/// exact coordinates a_1..a_n in one number field, independent over Q.
class FrequencyVector {
public:
    FrequencyVector(FieldPtr field, std::vector<AlgebraicNumber> a)
        : field_(std::move(field)), a_(std::move(a)) {
        if (a_.size() < 2) throw InvalidFlow("need at least two frequencies");
        for (const auto& x : a_)
            if (!(x.field() == field_ || *x.field() == *field_))
                throw FieldMismatch("frequency outside the declared field");
        if (a_.size() > field_->degree())
            throw InvalidFlow("more frequencies than the field degree allows");
        if (a_.back().is_zero()) throw InvalidFlow("last frequency must be nonzero");
        if (!rationally_independent(a_)) throw InvalidFlow("frequencies are rationally dependent");
    }

    std::size_t size() const { return a_.size(); }
    const FieldPtr& field() const { return field_; }
    const AlgebraicNumber& coord(std::size_t i) const { return a_[i]; }
    const std::vector<AlgebraicNumber>& coords() const { return a_; }

private:
    FieldPtr field_;
    std::vector<AlgebraicNumber> a_;
};

} // namespace qpsym
