#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace cstar;
using namespace testing_support;

TEST_CASE("floor and fractional part") {
    CHECK(floor_div(div({{q(0), q(1, 2)}})).is_zero());
    CHECK(floor_div(div({{q(0), q(-1, 2)}, {q(1), q(-1)}})) == div({{q(0), q(-1)}, {q(1), q(-1)}}));
    CHECK(floor_div(q(2) * div({{q(0), q(1, 2)}})) == div({{q(0), q(1)}}));
    CHECK(fractional_part(div({{q(0), q(1, 2)}})) == div({{q(0), q(1, 2)}}));
    CHECK(fractional_part(div({{q(0), q(-1, 2)}, {q(1), q(-1)}})) == div({{q(0), q(1, 2)}}));
    CHECK(fractional_part(QDivisor()).is_zero());
}

TEST_CASE("floor decomposition and superadditivity on random divisors") {
    Gen g(21);
    for (int n = 0; n < 200; ++n) {
        DivisorPair p = random_pair(g);
        const QDivisor& d = p.dplus;
        CHECK(floor_div(d) + fractional_part(d) == d);
        const QDivisor frac = fractional_part(d);
        for (const auto& [pt, c] : frac.entries()) {
            CHECK(c >= 0);
            CHECK(c < 1);
        }
        long i = g.integer(1, 8), j = g.integer(1, 8);
        if (g.coin()) {
            i = -i;
            j = -j;
        }
        QDivisor gap = floor_div(Rational(i + j) * d) - floor_div(Rational(i) * d) - floor_div(Rational(j) * d);
        for (const auto& [pt, c] : gap.entries())
            CHECK(c >= 0);
    }
}

TEST_CASE("divisor of a factored rational") {
    CHECK(divisor_of(FactoredRational(1, {{1, 1}, {-1, 1}})) == div({{q(1), q(1)}, {q(-1), q(1)}}));
    CHECK(divisor_of(FactoredRational(5)).is_zero());
    CHECK(divisor_of(FactoredRational(1, {{0, -2}})) == div({{q(0), q(-2)}}));
    // on P^1 the pole or zero at infinity balances the degree
    QDivisor proj = divisor_of(FactoredRational(1, {{0, 2}, {1, 1}}), CurveKind::ProjectiveLine);
    CHECK(proj.degree() == 0);
    CHECK(proj[Point::infinity()] == -3);
    // on C* the unit t has no divisor
    CHECK(divisor_of(FactoredRational::linear(0), CurveKind::PuncturedLine).is_zero());

    Gen g(22);
    for (int n = 0; n < 100; ++n) {
        FactoredRational f = random_function(g), h = random_function(g);
        CHECK(divisor_of(f * h) == divisor_of(f) + divisor_of(h));
        CHECK(divisor_of(f.inverse()) == -divisor_of(f));
    }
}

TEST_CASE("shift_pair") {
    DivisorPair p{QDivisor(), div({{q(1), q(-1)}, {q(-1), q(-1)}})};
    DivisorPair s = shift_pair(p, FactoredRational::linear(1));
    CHECK(s.dplus == div({{q(1), q(1)}}));
    CHECK(s.dminus == div({{q(1), q(-2)}, {q(-1), q(-1)}}));
    CHECK(shift_pair(p, FactoredRational(7)) == p);

    DivisorPair quad{div({{q(0), q(1, 2)}}), div({{q(0), q(-1, 2)}, {q(1), q(-1)}})};
    DivisorPair t = shift_pair(quad, FactoredRational::linear(0));
    CHECK(t.dplus == div({{q(0), q(3, 2)}}));
    CHECK(t.dminus == div({{q(0), q(-3, 2)}, {q(1), q(-1)}}));

    Gen g(23);
    for (int n = 0; n < 100; ++n) {
        DivisorPair r = random_pair(g);
        CHECK(shift_pair(r, random_function(g)).sum() == r.sum());
    }
}

TEST_CASE("pairs_equivalent on fixed examples") {
    DivisorPair p{QDivisor(), div({{q(1), q(-1)}, {q(-1), q(-1)}})};
    DivisorPair p2{QDivisor(), div({{q(0), q(-1)}, {q(2), q(-1)}})};
    auto w = pairs_equivalent(p, p2, false, true);
    REQUIRE(w);
    CHECK(apply_witness(p2, *w) == p);
    CHECK(w->map.a * w->map.a == 1);
    CHECK(w->f.is_constant());
    CHECK(!w->swapped);

    auto id = pairs_equivalent(p, p, false, true);
    REQUIRE(id);
    CHECK(id->map.is_identity());

    DivisorPair quad{div({{q(0), q(1, 2)}}), div({{q(0), q(-1, 2)}, {q(1), q(-1)}})};
    CHECK(!pairs_equivalent(p, quad, true, true));
    CHECK(!pairs_equivalent(quad, p, true, true));

    CHECK_THROWS_AS(pairs_equivalent(DivisorPair{QDivisor(CurveKind::PuncturedLine), QDivisor(CurveKind::PuncturedLine)},
                                     p, true, true),
                    PreconditionError);
}

TEST_CASE("swap is only used when allowed") {
    DivisorPair p{div({{q(0), q(1, 3)}}), div({{q(0), q(-1, 2)}, {q(1), q(-1)}})};
    DivisorPair s = p.swapped();
    CHECK(!pairs_equivalent(p, s, false, true));
    auto w = pairs_equivalent(p, s, true, true);
    REQUIRE(w);
    CHECK(w->swapped);
    CHECK(apply_witness(s, *w) == p);
}

TEST_CASE("pair equivalence is an equivalence relation on random orbits") {
    Gen g(24);
    for (CurveKind curve : {CurveKind::AffineLine, CurveKind::PuncturedLine}) {
        for (int n = 0; n < 150; ++n) {
            DivisorPair p = random_pair(g, curve);
            EquivalenceWitness w1 = random_witness(g, curve);
            EquivalenceWitness w2 = random_witness(g, curve);
            DivisorPair p1 = apply_witness(p, w1);
            DivisorPair p2 = apply_witness(p1, w2);

            // witness algebra
            CHECK(apply_witness(p1, inverse(w1)) == p);
            CHECK(apply_witness(p, compose(w2, w1)) == p2);

            // the search finds the orbit relations
            auto fwd = pairs_equivalent(p1, p, true, true);
            REQUIRE(fwd);
            CHECK(apply_witness(p, *fwd) == p1);
            auto back = pairs_equivalent(p, p1, true, true);
            REQUIRE(back);
            CHECK(apply_witness(p1, *back) == p);
            CHECK(apply_witness(p, inverse(*back)) == p1);
            auto trans = pairs_equivalent(p2, p, true, true);
            REQUIRE(trans);
            auto via = pairs_equivalent(p2, p1, true, true);
            REQUIRE(via);
            CHECK(apply_witness(p, compose(*via, *fwd)) == p2);
        }
    }
}

TEST_CASE("different sum profiles are never equivalent") {
    // Oracle: the sorted values of D+ + D- are invariant under every move.
    Gen g(25);
    auto profile = [](const DivisorPair& p) {
        std::vector<Rational> v;
        const QDivisor sum = p.sum();
        for (const auto& [pt, c] : sum.entries())
            v.push_back(c);
        std::sort(v.begin(), v.end());
        return v;
    };
    int compared = 0;
    for (int n = 0; n < 300; ++n) {
        DivisorPair a = random_pair(g), b = random_pair(g);
        if (profile(a) == profile(b))
            continue;
        ++compared;
        CHECK(!pairs_equivalent(a, b, true, true));
    }
    CHECK(compared > 100);
}
