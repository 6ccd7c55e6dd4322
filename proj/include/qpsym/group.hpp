#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qpsym/lift.hpp"

namespace qpsym {

/// A finitely generated subgroup of the multiplier group, carried by its
/// generators and their witness matrices.
class MultiplierSubgroup {
public:
    MultiplierSubgroup(FrequencyVector flow, std::vector<Multiplier> generators)
        : flow_(std::move(flow)), generators_(std::move(generators)) {
        for (const auto& g : generators_) {
            Multiplier check = multiplier_from_matrix(g.witness, flow_);
            if (check.value != g.value)
                throw NotAnEigenvector("generator witness does not realize its multiplier");
        }
    }

    const FrequencyVector& flow() const { return flow_; }
    const std::vector<Multiplier>& generators() const { return generators_; }

private:
    FrequencyVector flow_;
    std::vector<Multiplier> generators_;
};

/// The subgroup {1, -1}, present for every flow; -1 is witnessed by -I.
inline MultiplierSubgroup reversing_group(const FrequencyVector& a) {
    Multiplier neg{-AlgebraicNumber::one(a.field()), -IntMatrix::identity(a.size())};
    return MultiplierSubgroup(a, {std::move(neg)});
}

/// The canonical section of the multiplier map: alpha -> (B_alpha, 0) with
/// zero translation.
inline AffineLift splitting_map(const AlgebraicNumber& alpha, const MultiplierSubgroup& l) {
    const FrequencyVector& flow = l.flow();
    IntMatrix b = matrix_from_multiplier(alpha, flow);
    return AffineLift(std::move(b),
                      std::vector<AlgebraicNumber>(flow.size(), AlgebraicNumber::zero(flow.field())));
}

namespace detail {

struct Word {
    IntMatrix matrix;
    AlgebraicNumber value;
    int length;
};

/// All distinct matrices expressible as words of the given length or less in
/// the generator witnesses and their inverses, with their multipliers and the
/// minimal word length realizing them. Deterministic order (matrix order).
inline std::vector<Word> enumerate_words(const MultiplierSubgroup& l, int bound) {
    const FrequencyVector& flow = l.flow();
    std::vector<std::pair<IntMatrix, AlgebraicNumber>> steps;
    for (const auto& g : l.generators()) {
        steps.emplace_back(g.witness, g.value);
        steps.emplace_back(g.witness.inverse_unimodular(), g.value.inverse());
    }
    std::map<IntMatrix, std::pair<AlgebraicNumber, int>> seen;
    seen.emplace(IntMatrix::identity(flow.size()),
                 std::make_pair(AlgebraicNumber::one(flow.field()), 0));
    std::vector<IntMatrix> frontier{IntMatrix::identity(flow.size())};
    for (int len = 1; len <= bound && !frontier.empty(); ++len) {
        std::vector<IntMatrix> next;
        for (const auto& m : frontier) {
            const AlgebraicNumber& val = seen.at(m).first;
            for (const auto& [sm, sv] : steps) {
                IntMatrix prod = m * sm;
                if (seen.emplace(prod, std::make_pair(val * sv, len)).second)
                    next.push_back(std::move(prod));
            }
        }
        frontier = std::move(next);
    }
    std::vector<Word> out;
    out.reserve(seen.size());
    for (auto& [m, rest] : seen) out.push_back(Word{m, rest.first, rest.second});
    return out;
}

} // namespace detail

/// Checks the splitting laws on every pair of words up to the bound:
/// the section is multiplicative and the multiplier map undoes it.
inline bool verify_splitting(const MultiplierSubgroup& l, int word_length_bound) {
    if (word_length_bound < 1) throw Error("word length bound must be >= 1");
    auto words = detail::enumerate_words(l, word_length_bound);
    const FrequencyVector& flow = l.flow();
    try {
        for (const auto& w : words) {
            if (multiplier_from_matrix(w.matrix, flow).value != w.value) return false;
            if (matrix_from_multiplier(w.value, flow) != w.matrix) return false;
        }
        for (const auto& w : words)
            for (const auto& v : words) {
                AffineLift lhs = compose(splitting_map(w.value, l), splitting_map(v.value, l));
                AffineLift rhs = splitting_map(w.value * v.value, l);
                if (lhs != rhs) return false;
            }
    } catch (const Error&) {
        return false;
    }
    return true;
}

/// Finite verification model: all lifts (B, t) with B a word matrix within
/// the bound and t in the (1/q)-lattice modulo Z^n. Elements are sorted.
struct TorsionModel {
    FrequencyVector flow;
    long q = 1;
    int word_length_bound = 0;
    std::vector<AffineLift> elements;

    bool contains(const AffineLift& x) const {
        return std::binary_search(elements.begin(), elements.end(), x);
    }
};

inline TorsionModel build_torsion_model(const MultiplierSubgroup& l, long q,
                                        int word_length_bound,
                                        std::size_t element_cap = 1000000) {
    if (q < 1) throw Error("torsion denominator must be >= 1");
    if (word_length_bound < 0) throw Error("word length bound must be >= 0");
    const FrequencyVector& flow = l.flow();
    std::size_t n = flow.size();
    auto words = detail::enumerate_words(l, word_length_bound);

    BigInt count = BigInt(words.size());
    for (std::size_t i = 0; i < n; ++i) count *= q;
    if (count > element_cap)
        throw ModelTooLarge("model would have " + count.str() + " elements (cap " +
                            std::to_string(element_cap) + ")");

    // all translation tuples in (1/q)Z^n mod Z^n, odometer order
    std::vector<std::vector<AlgebraicNumber>> translations;
    std::vector<long> odo(n, 0);
    const FieldPtr& field = flow.field();
    for (;;) {
        std::vector<AlgebraicNumber> t;
        t.reserve(n);
        for (long k : odo)
            t.push_back(AlgebraicNumber::from_rational(field, Rational(BigInt(k), BigInt(q))));
        translations.push_back(std::move(t));
        std::size_t i = 0;
        while (i < n && ++odo[i] == q) odo[i++] = 0;
        if (i == n) break;
    }

    TorsionModel model{flow, q, word_length_bound, {}};
    model.elements.reserve(words.size() * translations.size());
    for (const auto& w : words)
        for (const auto& t : translations) model.elements.emplace_back(w.matrix, t);
    std::sort(model.elements.begin(), model.elements.end());
    return model;
}

/// Outcome of the exhaustive structure checks on a torsion model. Every
/// flag is the result of an executed scan, never an assumption.
struct StructureCertificate {
    bool split_verified = false;
    bool kernel_normal = false;
    bool trivial_intersection = false;
    bool factorization_unique = false;
    bool nonabelian = false;
    int word_length_bound = 0;
    long q = 1;
    std::optional<std::pair<AffineLift, AffineLift>> noncommuting;

    /// The four structural flags (nonabelian is a report, not a gate).
    bool structure_ok() const {
        return split_verified && kernel_normal && trivial_intersection && factorization_unique;
    }
};

/// Exhaustively certifies the semidirect-product structure of the model:
/// the translations form a normal subgroup meeting the zero-translation
/// section trivially, every element factors uniquely, and noncommuting is
/// witnessed by an explicit pair when one exists. Throws NotClosed when an
/// inverse, conjugate or factor needed by the checks is missing from the
/// model.
inline StructureCertificate certify_structure(const TorsionModel& m) {
    const FrequencyVector& flow = m.flow;
    std::size_t n = flow.size();
    StructureCertificate cert;
    cert.word_length_bound = m.word_length_bound;
    cert.q = m.q;

    IntMatrix id = IntMatrix::identity(n);
    std::vector<AffineLift> translations, sections;
    std::vector<IntMatrix> matrices;
    for (const auto& e : m.elements) {
        if (e.matrix() == id) translations.push_back(e);
        if (e.translation_is_zero()) sections.push_back(e);
        if (matrices.empty() || !(matrices.back() == e.matrix())) matrices.push_back(e.matrix());
    }
    std::sort(matrices.begin(), matrices.end());
    matrices.erase(std::unique(matrices.begin(), matrices.end()), matrices.end());

    std::vector<AffineLift> inverses;
    inverses.reserve(m.elements.size());
    for (const auto& e : m.elements) {
        AffineLift inv = invert(e);
        if (!m.contains(inv)) throw NotClosed("inverse of " + e.to_string() + " escapes the model");
        inverses.push_back(std::move(inv));
    }

    cert.kernel_normal = true;
    for (std::size_t i = 0; i < m.elements.size(); ++i) {
        for (const auto& t : translations) {
            AffineLift conj = compose(compose(m.elements[i], t), inverses[i]);
            if (conj.matrix() != id) {
                cert.kernel_normal = false;
                break;
            }
            if (!m.contains(conj))
                throw NotClosed("conjugated translation escapes the model");
        }
        if (!cert.kernel_normal) break;
    }

    std::size_t both = 0;
    for (const auto& t : translations)
        if (t.translation_is_zero()) ++both;
    cert.trivial_intersection = both == 1;

    cert.factorization_unique = true;
    for (const auto& e : m.elements) {
        AffineLift tpart(id, e.translation());
        AffineLift hpart(e.matrix(),
                         std::vector<AlgebraicNumber>(n, AlgebraicNumber::zero(flow.field())));
        if (!m.contains(tpart) || !m.contains(hpart))
            throw NotClosed("factor of " + e.to_string() + " escapes the model");
        std::size_t matches = 0;
        for (const auto& t : translations)
            for (const auto& h : sections)
                if (compose(t, h) == e) ++matches;
        if (compose(tpart, hpart) != e || matches != 1) {
            cert.factorization_unique = false;
            break;
        }
    }

    cert.split_verified = true;
    try {
        std::map<IntMatrix, AlgebraicNumber> mult;
        for (const auto& b : matrices) {
            AlgebraicNumber v = multiplier_from_matrix(b, flow).value;
            if (matrix_from_multiplier(v, flow) != b) cert.split_verified = false;
            mult.emplace(b, std::move(v));
        }
        for (const auto& b1 : matrices)
            for (const auto& b2 : matrices) {
                AlgebraicNumber lhs = multiplier_from_matrix(b1 * b2, flow).value;
                if (lhs != mult.at(b1) * mult.at(b2)) {
                    cert.split_verified = false;
                    break;
                }
            }
    } catch (const NotAnEigenvector&) {
        cert.split_verified = false;
    } catch (const NotUnimodular&) {
        cert.split_verified = false;
    } catch (const NoIntegerSolution&) {
        cert.split_verified = false;
    }

    cert.nonabelian = false;
    for (std::size_t i = 0; i < m.elements.size() && !cert.nonabelian; ++i)
        for (std::size_t j = i + 1; j < m.elements.size(); ++j) {
            const AffineLift &f = m.elements[i], &g = m.elements[j];
            if (compose(f, g) != compose(g, f)) {
                cert.nonabelian = true;
                cert.noncommuting = std::make_pair(f, g);
                break;
            }
        }
    return cert;
}

} // namespace qpsym
