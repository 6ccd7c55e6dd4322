#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qpsym/lift.hpp"

namespace qpsym {

/// Enumerates all candidates alpha = sum e_k beta^k with integer
/// coefficients |e_k| <= height and keeps those realized by a unimodular
/// integer matrix on the flow. Output is ordered by the coefficient tuple
/// (lexicographic, e_0 first); it is closed under negation and, within the
/// height bound, under inversion.
inline std::vector<Multiplier> search_multipliers(const FrequencyVector& a, long height) {
    if (height < 0) throw Error("height must be >= 0");
    std::size_t d = a.field()->degree();
    std::vector<Multiplier> found;
    std::vector<long> e(d, -height);
    for (;;) {
        bool all_zero = true;
        for (long v : e)
            if (v != 0) {
                all_zero = false;
                break;
            }
        if (!all_zero) {
            std::vector<Rational> coords(d);
            for (std::size_t k = 0; k < d; ++k) coords[k] = Rational(e[k]);
            AlgebraicNumber alpha(a.field(), std::move(coords));
            try {
                IntMatrix b = matrix_from_multiplier(alpha, a);
                found.push_back(Multiplier{std::move(alpha), std::move(b)});
            } catch (const NoIntegerSolution&) {
            } catch (const NotUnimodular&) {
            }
        }
        // advance odometer; e_0 is the most significant digit
        std::size_t i = d;
        while (i-- > 0) {
            if (e[i] < height) {
                ++e[i];
                break;
            }
            e[i] = -height;
            if (i == 0) return found;
        }
    }
}

/// The fundamental unit > 1 of the order Z[beta] of a real quadratic field,
/// found on the continued-fraction expansion of the larger root. The first
/// convergent whose norm form evaluates to +-1 yields the unit; it is then
/// normalized to the candidate exceeding 1 in the field's embedding.
inline AlgebraicNumber quadratic_fundamental_unit(const FieldPtr& field) {
    if (field->degree() != 2) throw NotQuadratic("field degree is not 2");
    const BigInt& c0 = field->min_poly()[0];
    const BigInt& c1 = field->min_poly()[1];
    BigInt disc = c1 * c1 - 4 * c0;
    if (disc <= 0) throw NotRealQuadratic("discriminant is not positive");
    BigInt s = boost::multiprecision::sqrt(disc);
    if (s * s == disc) throw NotRealQuadratic("discriminant is a perfect square");

    auto norm_form = [&](const BigInt& x, const BigInt& y) {
        return x * x - c1 * x * y + c0 * y * y;
    };
    // continued fraction of (P + sqrt(disc)) / Q, floor taken exactly
    BigInt p = -c1, q = 2;
    BigInt h_prev = 1, h_prev2 = 0; // convergent numerators
    BigInt k_prev = 0, k_prev2 = 1; // convergent denominators
    for (int iter = 0; iter < 100000; ++iter) {
        BigInt digit = q > 0 ? floor_div(p + s, q) : floor_div(p + s + 1, q);
        BigInt h = digit * h_prev + h_prev2;
        BigInt k = digit * k_prev + k_prev2;
        BigInt norm = norm_form(h, -k);
        if (norm == 1 || norm == -1) {
            AlgebraicNumber u(field, {Rational(h), Rational(-k)});
            AlgebraicNumber one = AlgebraicNumber::one(field);
            for (const AlgebraicNumber& cand : {u, -u, u.inverse(), -(u.inverse())})
                if ((cand - one).sign() > 0) return cand;
            throw Error("no unit candidate exceeds 1"); // unreachable
        }
        p = digit * q - p;
        q = (disc - p * p) / q;
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
    }
    throw Error("continued fraction expansion exceeded iteration cap");
}

/// One line per multiplier: MULT <coeffs> MATRIX <rows> DET <+-1>,
/// tab-separated fields.
inline void save_results(std::ostream& os, const std::vector<Multiplier>& results) {
    for (const auto& m : results) {
        os << "MULT\t";
        const auto& c = m.value.coords();
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) os << ' ';
            os << c[i];
        }
        os << "\tMATRIX\t" << m.witness.to_string() << "\tDET\t" << m.witness.det() << '\n';
    }
}

/// Parses a results stream back against a flow; every line is revalidated
/// through the eigen-relation so a stale or mismatched file is rejected.
inline std::vector<Multiplier> load_results(std::istream& is, const FrequencyVector& flow) {
    std::vector<Multiplier> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::string cur;
        for (char ch : line) {
            if (ch == '\t') {
                fields.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        fields.push_back(cur);
        if (fields.size() != 6 || fields[0] != "MULT" || fields[2] != "MATRIX" ||
            fields[4] != "DET")
            throw ParseError("results line " + std::to_string(lineno) + " is malformed");
        std::istringstream coeff_in(fields[1]);
        std::vector<Rational> coords;
        std::string tok;
        while (coeff_in >> tok) coords.push_back(Rational::parse(tok));
        if (coords.size() != flow.field()->degree())
            throw ParseError("results line " + std::to_string(lineno) + ": wrong coefficient count");
        AlgebraicNumber value(flow.field(), std::move(coords));
        IntMatrix witness = IntMatrix::parse(fields[3]);
        try {
            if (multiplier_from_matrix(witness, flow).value != value)
                throw ParseError("results line " + std::to_string(lineno) +
                                 ": witness does not realize the multiplier");
        } catch (const NotAnEigenvector&) {
            throw ParseError("results line " + std::to_string(lineno) +
                             ": witness does not realize the multiplier");
        } catch (const NotUnimodular&) {
            throw ParseError("results line " + std::to_string(lineno) +
                             ": witness is not unimodular");
        }
        if (witness.det() != Rational::parse_int(fields[5]))
            throw ParseError("results line " + std::to_string(lineno) + ": DET mismatch");
        out.push_back(Multiplier{std::move(value), std::move(witness)});
    }
    return out;
}

} // namespace qpsym
