#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "test_support.hpp"

using namespace qpsym;
using namespace qpsym::testing;

namespace {

// Independent oracle for quadratic fields: x + y*beta is a unit of Z[beta]
// iff |x^2 - c1*x*y + c0*y^2| = 1. Enumerates the coefficient box directly,
// with no matrix solving involved.
std::set<std::pair<long, long>> pell_units(long c0, long c1, long bound) {
    std::set<std::pair<long, long>> units;
    for (long x = -bound; x <= bound; ++x)
        for (long y = -bound; y <= bound; ++y) {
            long norm = x * x - c1 * x * y + c0 * y * y;
            if (norm == 1 || norm == -1) units.insert({x, y});
        }
    return units;
}

std::set<std::pair<long, long>> coefficient_set(const std::vector<Multiplier>& found) {
    std::set<std::pair<long, long>> out;
    for (const auto& m : found) {
        const auto& c = m.value.coords();
        REQUIRE(c.size() == 2);
        REQUIRE(c[0].is_integer());
        REQUIRE(c[1].is_integer());
        out.insert({static_cast<long>(c[0].numerator()), static_cast<long>(c[1].numerator())});
    }
    return out;
}

} // namespace

TEST_CASE("height 0 finds nothing") {
    CHECK(search_multipliers(golden_flow(), 0).empty());
}

TEST_CASE("golden flow at height 1: exactly the eight units in the box") {
    auto found = search_multipliers(golden_flow(), 1);
    std::set<std::pair<long, long>> expected{{-1, -1}, {-1, 0}, {-1, 1}, {0, -1},
                                             {0, 1},  {1, -1}, {1, 0},  {1, 1}};
    CHECK(coefficient_set(found) == expected);
    CHECK(found.size() == 8);
    // output is ordered by coefficient tuple
    CHECK(std::is_sorted(found.begin(), found.end(), [](const Multiplier& a, const Multiplier& b) {
        return coord_less(a.value, b.value);
    }));
}

TEST_CASE("search agrees with the Pell oracle on quadratic flows") {
    struct Case {
        FrequencyVector flow;
        long c0, c1;
    };
    for (long height : {1L, 2L}) {
        for (const Case& c : {Case{golden_flow(), -1, -1}, Case{sqrt2_flow(), -2, 0},
                              Case{sqrt3_flow(), -3, 0}}) {
            auto oracle = pell_units(c.c0, c.c1, height);
            CHECK(coefficient_set(search_multipliers(c.flow, height)) == oracle);
        }
    }
}

TEST_CASE("sqrt2 flow at height 1") {
    auto found = search_multipliers(sqrt2_flow(), 1);
    std::set<std::pair<long, long>> expected{{-1, -1}, {-1, 0}, {-1, 1},
                                             {1, -1},  {1, 0},  {1, 1}};
    CHECK(coefficient_set(found) == expected);
}

TEST_CASE("results are closed under negation and inversion within the box") {
    for (const FrequencyVector& flow : {golden_flow(), sqrt2_flow()}) {
        auto found = search_multipliers(flow, 2);
        auto values = coefficient_set(found);
        for (const auto& m : found) {
            AlgebraicNumber neg = -m.value;
            CHECK(values.count({static_cast<long>(neg.coords()[0].numerator()),
                                static_cast<long>(neg.coords()[1].numerator())}) == 1);
            AlgebraicNumber inv = m.value.inverse();
            auto small = [](const Rational& r) {
                return r.is_integer() && r.numerator() >= -2 && r.numerator() <= 2;
            };
            bool in_box = small(inv.coords()[0]) && small(inv.coords()[1]);
            if (in_box)
                CHECK(values.count({static_cast<long>(inv.coords()[0].numerator()),
                                    static_cast<long>(inv.coords()[1].numerator())}) == 1);
        }
    }
}

TEST_CASE("1 and -1 are found at every height >= 1") {
    for (const FrequencyVector& flow : {golden_flow(), sqrt2_flow(), sqrt3_flow(), plastic_flow()}) {
        auto found = search_multipliers(flow, 1);
        AlgebraicNumber one = AlgebraicNumber::one(flow.field());
        CHECK(std::any_of(found.begin(), found.end(),
                          [&](const Multiplier& m) { return m.value == one; }));
        CHECK(std::any_of(found.begin(), found.end(),
                          [&](const Multiplier& m) { return m.value == -one; }));
    }
}

TEST_CASE("no rational multiplier other than +-1 appears") {
    for (const FrequencyVector& flow : {golden_flow(), sqrt2_flow(), plastic_flow()}) {
        for (const auto& m : search_multipliers(flow, 2)) {
            if (m.value.is_rational()) {
                CHECK((m.value.as_rational() == Rational(1) ||
                       m.value.as_rational() == Rational(-1)));
            }
        }
    }
}

TEST_CASE("fundamental units of small real quadratic orders") {
    CHECK(quadratic_fundamental_unit(golden_field()) ==
          AlgebraicNumber::generator(golden_field())); // phi
    CHECK(quadratic_fundamental_unit(sqrt2_field()) == elem(sqrt2_field(), {1, 1}));  // 1 + sqrt2
    CHECK(quadratic_fundamental_unit(sqrt3_field()) == elem(sqrt3_field(), {2, 1}));  // 2 + sqrt3
    // z^2 - 7: fundamental unit 8 + 3 sqrt7
    FieldPtr f7 = make_field({-7, 0, 1}, Rational(2), Rational(3));
    CHECK(quadratic_fundamental_unit(f7) == elem(f7, {8, 3}));
}

TEST_CASE("fundamental unit agrees with a brute-force smallest-unit oracle") {
    // oracle: scan x + y*beta over a box, keep units > 1, take the smallest
    auto brute_smallest = [](const FieldPtr& f) {
        AlgebraicNumber one = AlgebraicNumber::one(f);
        std::optional<AlgebraicNumber> best;
        for (long x = -40; x <= 40; ++x)
            for (long y = -40; y <= 40; ++y) {
                AlgebraicNumber u = elem(f, {x, y});
                if (u.is_zero()) continue;
                // unit check via the norm form read off the minimal polynomial
                const auto& mp = f->min_poly();
                BigInt norm = BigInt(x) * x - mp[1] * x * y + mp[0] * y * y;
                if (norm != 1 && norm != -1) continue;
                if ((u - one).sign() <= 0) continue;
                if (!best || (u - *best).sign() < 0) best = u;
            }
        REQUIRE(best.has_value());
        return *best;
    };
    // z^2 - z - 3 (beta = (1+sqrt13)/2) and z^2 + 3z + 1 (negative root of
    // the phi order) exercise non-reduced continued-fraction starts
    for (const FieldPtr& f :
         {golden_field(), sqrt2_field(), sqrt3_field(),
          make_field({-7, 0, 1}, Rational(2), Rational(3)),
          make_field({-3, -1, 1}, Rational(2), Rational(3)),
          make_field({1, 3, 1}, Rational(-1), Rational(0)),
          make_field({-1, -3, 1}, Rational(3), Rational(4))}) {
        CHECK(quadratic_fundamental_unit(f) == brute_smallest(f));
    }
}

TEST_CASE("fundamental unit respects the chosen embedding") {
    // same polynomial, other root: the unit > 1 is written differently
    FieldPtr conj = make_field({-1, -1, 1}, Rational(-1), Rational(0)); // root 1 - phi
    AlgebraicNumber u = quadratic_fundamental_unit(conj);
    CHECK((u - AlgebraicNumber::one(conj)).sign() > 0);
    // beta = 1 - phi, so phi = 1 - beta
    CHECK(u == elem(conj, {1, -1}));
}

TEST_CASE("unit search rejects wrong fields") {
    CHECK_THROWS_AS(quadratic_fundamental_unit(plastic_field()), NotQuadratic);
    // z^2 - 1 loads but has square discriminant
    FieldPtr sq = make_field({-1, 0, 1}, Rational(0), Rational(2));
    CHECK_THROWS_AS(quadratic_fundamental_unit(sq), NotRealQuadratic);
}

TEST_CASE("positive search results are exactly the fundamental-unit powers") {
    FrequencyVector flow = golden_flow();
    AlgebraicNumber u = quadratic_fundamental_unit(flow.field());
    std::set<std::pair<long, long>> positive;
    for (const auto& m : search_multipliers(flow, 2))
        if (m.value.sign() > 0)
            positive.insert({static_cast<long>(m.value.coords()[0].numerator()),
                             static_cast<long>(m.value.coords()[1].numerator())});
    // u^k for k = -2..3 lie in the height-2 box: phi^-2, phi^-1, 1, phi, phi^2, phi^3
    std::set<std::pair<long, long>> expected{{2, -1}, {-1, 1}, {1, 0}, {0, 1}, {1, 1}, {1, 2}};
    CHECK(positive == expected);
    AlgebraicNumber p = AlgebraicNumber::one(flow.field());
    for (int k = 1; k <= 3; ++k) {
        p = p * u;
        if (k <= 3) CHECK(positive.count({static_cast<long>(p.coords()[0].numerator()),
                                          static_cast<long>(p.coords()[1].numerator())}) == 1);
    }
}

TEST_CASE("results file round trips") {
    FrequencyVector flow = golden_flow();
    auto found = search_multipliers(flow, 1);
    std::ostringstream out;
    save_results(out, found);
    std::istringstream in(out.str());
    auto loaded = load_results(in, flow);
    REQUIRE(loaded.size() == found.size());
    for (std::size_t i = 0; i < found.size(); ++i) CHECK(loaded[i] == found[i]);

    // a second save is byte-identical
    std::ostringstream out2;
    save_results(out2, loaded);
    CHECK(out.str() == out2.str());

    std::istringstream bad("MULT\t1 0\tMATRIX\t1,0;0,1\tDET\t-1\n");
    CHECK_THROWS_AS(load_results(bad, flow), ParseError);
    std::istringstream mangled("MULT\t1 0\n");
    CHECK_THROWS_AS(load_results(mangled, flow), ParseError);
}
