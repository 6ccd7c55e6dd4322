#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace qpsym;
using namespace qpsym::testing;

TEST_CASE("independence of (1, phi)") {
    FieldPtr f = golden_field();
    CHECK(rationally_independent({AlgebraicNumber::one(f), AlgebraicNumber::generator(f)}));
}

TEST_CASE("dependent tuples are rejected") {
    FieldPtr f = golden_field();
    AlgebraicNumber one = AlgebraicNumber::one(f);
    AlgebraicNumber phi = AlgebraicNumber::generator(f);

    // (1, 2): 2*a1 - a2 = 0
    CHECK_FALSE(rationally_independent({one, AlgebraicNumber::from_rational(f, Rational(2))}));
    // (1, phi, 1 + phi): a3 = a1 + a2 (also n > d)
    CHECK_FALSE(rationally_independent({one, phi, one + phi}));

    CHECK_THROWS_AS(FrequencyVector(f, {one, AlgebraicNumber::from_rational(f, Rational(2))}),
                    InvalidFlow);
    CHECK_THROWS_AS(FrequencyVector(f, {one, phi, one + phi}), InvalidFlow);
}

TEST_CASE("last frequency must be nonzero") {
    FieldPtr f = golden_field();
    CHECK_THROWS_AS(
        FrequencyVector(f, {AlgebraicNumber::generator(f), AlgebraicNumber::zero(f)}),
        InvalidFlow);
}

TEST_CASE("at least two frequencies") {
    FieldPtr f = golden_field();
    CHECK_THROWS_AS(FrequencyVector(f, {AlgebraicNumber::one(f)}), InvalidFlow);
}

TEST_CASE("cubic flow is independent") {
    FrequencyVector flow = plastic_flow();
    CHECK(flow.size() == 3);
    CHECK(rationally_independent(flow.coords()));
}

TEST_CASE("scaled power basis stays independent") {
    FieldPtr f = plastic_field();
    AlgebraicNumber rho = AlgebraicNumber::generator(f);
    Rational half(BigInt(1), BigInt(2));
    CHECK(rationally_independent({AlgebraicNumber::one(f) * half, rho * Rational(3), rho * rho}));
}
