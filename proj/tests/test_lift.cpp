#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace qpsym;
using namespace qpsym::testing;

namespace {

std::vector<AlgebraicNumber> zero_translation(const FrequencyVector& flow) {
    return std::vector<AlgebraicNumber>(flow.size(), AlgebraicNumber::zero(flow.field()));
}

} // namespace

TEST_CASE("multiplier of known matrices on the golden flow") {
    FrequencyVector flow = golden_flow();
    FieldPtr f = flow.field();

    CHECK(multiplier_from_matrix(IntMatrix::identity(2), flow).value == AlgebraicNumber::one(f));
    CHECK(multiplier_from_matrix(-IntMatrix::identity(2), flow).value == -AlgebraicNumber::one(f));
    CHECK(multiplier_from_matrix(mat({{0, 1}, {1, 1}}), flow).value ==
          AlgebraicNumber::generator(f));
    CHECK_THROWS_AS(multiplier_from_matrix(mat({{1, 1}, {0, 1}}), flow), NotAnEigenvector);
    CHECK_THROWS_AS(multiplier_from_matrix(mat({{2, 0}, {0, 2}}), flow), NotUnimodular);
}

TEST_CASE("matrix reconstruction from a multiplier") {
    FrequencyVector flow = golden_flow();
    FieldPtr f = flow.field();

    CHECK(matrix_from_multiplier(AlgebraicNumber::one(f), flow) == IntMatrix::identity(2));
    CHECK(matrix_from_multiplier(-AlgebraicNumber::one(f), flow) == -IntMatrix::identity(2));
    CHECK(matrix_from_multiplier(AlgebraicNumber::generator(f), flow) == mat({{0, 1}, {1, 1}}));
    CHECK_THROWS_AS(matrix_from_multiplier(AlgebraicNumber::from_rational(f, Rational(2)), flow),
                    NotUnimodular);
    // phi/2 is not in the integer span pattern
    CHECK_THROWS_AS(
        matrix_from_multiplier(AlgebraicNumber::generator(f) * Rational(BigInt(1), BigInt(2)), flow),
        NoIntegerSolution);
}

TEST_CASE("the cubic generator is realized by its companion matrix") {
    FrequencyVector flow = plastic_flow();
    AlgebraicNumber rho = AlgebraicNumber::generator(flow.field());
    CHECK(matrix_from_multiplier(rho, flow) == mat({{0, 1, 0}, {0, 0, 1}, {1, 1, 0}}));
}

TEST_CASE("round trip through the matrix-multiplier correspondence") {
    for (const FrequencyVector& flow : {golden_flow(), sqrt2_flow(), plastic_flow()}) {
        for (const Multiplier& m : search_multipliers(flow, 2)) {
            CHECK(matrix_from_multiplier(m.value, flow) == m.witness);
            CHECK(multiplier_from_matrix(m.witness, flow).value == m.value);
        }
    }
}

TEST_CASE("distinct matrices have distinct multipliers") {
    FrequencyVector flow = golden_flow();
    auto found = search_multipliers(flow, 1);
    for (std::size_t i = 0; i < found.size(); ++i)
        for (std::size_t j = i + 1; j < found.size(); ++j) {
            CHECK(found[i].value != found[j].value);
            CHECK(found[i].witness != found[j].witness);
        }
}

TEST_CASE("lift construction canonicalizes the translation") {
    FrequencyVector flow = golden_flow();
    FieldPtr f = flow.field();
    AlgebraicNumber phi = AlgebraicNumber::generator(f);

    AffineLift a(IntMatrix::identity(2), {phi, AlgebraicNumber::from_rational(f, Rational(-3))});
    CHECK(a.translation()[0] == elem(f, {-1, 1})); // phi - 1
    CHECK(a.translation()[1].is_zero());

    // shifting by integers gives the same torus map
    AffineLift b(IntMatrix::identity(2),
                 {phi + AlgebraicNumber::from_rational(f, Rational(7)),
                  AlgebraicNumber::from_rational(f, Rational(4))});
    CHECK(a == b);

    CHECK_THROWS_AS(AffineLift(mat({{2, 0}, {0, 2}}), zero_translation(flow)), NotUnimodular);
    CHECK_THROWS_AS(AffineLift(IntMatrix::identity(3), zero_translation(flow)), DimensionMismatch);
}

TEST_CASE("composition and inversion") {
    FrequencyVector flow = golden_flow();
    FieldPtr f = flow.field();
    AffineLift id = AffineLift::identity(f, 2);

    // translations add mod Z^n
    AlgebraicNumber c1 = AlgebraicNumber::from_rational(f, Rational(BigInt(2), BigInt(3)));
    AlgebraicNumber c2 = AlgebraicNumber::from_rational(f, Rational(BigInt(1), BigInt(2)));
    AffineLift t1(IntMatrix::identity(2), {c1, c2});
    AffineLift t2(IntMatrix::identity(2), {c1, c2});
    AffineLift both = compose(t1, t2);
    CHECK(both.translation()[0] ==
          AlgebraicNumber::from_rational(f, Rational(BigInt(1), BigInt(3))));
    CHECK(both.translation()[1].is_zero());

    // a reversing lift squares to the identity
    AffineLift rev(-IntMatrix::identity(2), zero_translation(flow));
    CHECK(compose(rev, rev) == id);

    AffineLift gen(mat({{0, 1}, {1, 1}}), zero_translation(flow));
    AffineLift geninv(mat({{-1, 1}, {1, 0}}), zero_translation(flow));
    CHECK(compose(gen, geninv) == id);
    CHECK(invert(gen) == geninv);
    CHECK(invert(id) == id);

    AffineLift shift(IntMatrix::identity(2), {c1, c2});
    CHECK(compose(shift, invert(shift)) == id);
    CHECK(compose(invert(shift), shift) == id);
}

TEST_CASE("flow translations") {
    FrequencyVector flow = golden_flow();
    FieldPtr f = flow.field();

    CHECK(flow_translation(Rational(0), flow) == AffineLift::identity(f, 2));

    AffineLift t1 = flow_translation(Rational(1), flow);
    CHECK(t1.matrix() == IntMatrix::identity(2));
    CHECK(t1.translation()[0].is_zero());
    CHECK(t1.translation()[1] == elem(f, {-1, 1})); // phi mod 1 = phi - 1

    AffineLift th = flow_translation(Rational(BigInt(1), BigInt(2)), flow);
    CHECK(th.translation()[0] == AlgebraicNumber::from_rational(f, Rational(BigInt(1), BigInt(2))));
    CHECK(th.translation()[1] == AlgebraicNumber::generator(f) * Rational(BigInt(1), BigInt(2)));

    CHECK(multiplier_from_matrix(t1.matrix(), flow).value == AlgebraicNumber::one(f));
}

TEST_CASE("classification") {
    FrequencyVector flow = golden_flow();
    FieldPtr f = flow.field();
    AlgebraicNumber c = AlgebraicNumber::from_rational(f, Rational(BigInt(1), BigInt(3)));

    AffineLift sym(IntMatrix::identity(2), {c, c});
    CHECK(classify(sym, flow).kind == SymmetryKind::Symmetry);

    AffineLift rev(-IntMatrix::identity(2), {c, c});
    CHECK(classify(rev, flow).kind == SymmetryKind::Reversing);

    AffineLift gen(mat({{0, 1}, {1, 1}}), zero_translation(flow));
    Classification cls = classify(gen, flow);
    CHECK(cls.kind == SymmetryKind::Generalized);
    CHECK(cls.multiplier.value == AlgebraicNumber::generator(f));

    AffineLift bad(mat({{1, 1}, {0, 1}}), zero_translation(flow));
    CHECK_THROWS_AS(classify(bad, flow), NotAnEigenvector);
}

TEST_CASE("multipliers are multiplicative under composition") {
    FrequencyVector flow = golden_flow();
    FieldPtr f = flow.field();
    std::mt19937 rng(20240806);
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_int_distribution<long> numer(0, 11);

    std::vector<IntMatrix> gens{IntMatrix::identity(2), -IntMatrix::identity(2),
                                mat({{0, 1}, {1, 1}}), mat({{-1, 1}, {1, 0}})};
    auto random_lift = [&]() {
        IntMatrix b = gens[pick(rng)] * gens[pick(rng)];
        std::vector<AlgebraicNumber> t;
        for (int i = 0; i < 2; ++i)
            t.push_back(
                AlgebraicNumber::from_rational(f, Rational(BigInt(numer(rng)), BigInt(12))));
        return AffineLift(std::move(b), std::move(t));
    };

    for (int i = 0; i < 100; ++i) {
        AffineLift a = random_lift(), b = random_lift();
        AlgebraicNumber ma = multiplier_from_matrix(a.matrix(), flow).value;
        AlgebraicNumber mb = multiplier_from_matrix(b.matrix(), flow).value;
        CHECK(multiplier_from_matrix(compose(a, b).matrix(), flow).value == ma * mb);
    }
}

TEST_CASE("multiplier +-1 forces the linear part to +-I") {
    FrequencyVector flow = golden_flow();
    FieldPtr f = flow.field();
    AlgebraicNumber one = AlgebraicNumber::one(f);
    std::mt19937 rng(20240807);
    std::uniform_int_distribution<long> entry(-3, 3);
    int unimodular_seen = 0;
    for (int rep = 0; rep < 4000; ++rep) {
        IntMatrix b(2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) b.at(i, j) = entry(rng);
        if (!b.is_unimodular()) continue;
        ++unimodular_seen;
        try {
            Multiplier m = multiplier_from_matrix(b, flow);
            if (m.value == one) CHECK(b == IntMatrix::identity(2));
            if (m.value == -one) CHECK(b == -IntMatrix::identity(2));
            if (m.value.is_rational())
                CHECK((m.value == one || m.value == -one));
        } catch (const NotAnEigenvector&) {
        }
    }
    CHECK(unimodular_seen > 100);
}
