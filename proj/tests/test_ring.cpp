#include <gtest/gtest.h>

#include <random>

#include "support/rings.hpp"

using namespace radcube;
using namespace radcube::testing;

TEST(BuildFromQuadrics, TwoVariablesSquaresKilled) {
    auto pres = build_from_quadrics(PrimeField(5), {"x", "y"}, {quad({{0, 0, 1}}), quad({{1, 1, 1}})});
    EXPECT_EQ(pres.e, 2U);
    EXPECT_EQ(pres.s, 1U);
    EXPECT_EQ(pres.names2, std::vector<std::string>({"x*y"}));
    EXPECT_TRUE(validate(pres).empty());
}

TEST(BuildFromQuadrics, ThreeVariables) {
    auto R = ring_r4();
    EXPECT_EQ(R.e(), 3U);
    EXPECT_EQ(R.s(), 2U);
    EXPECT_EQ(R.presentation().names2, std::vector<std::string>({"x*z", "y*z"}));
}

TEST(BuildFromQuadrics, XSquaredSurvives) {
    auto R = ring_rs();
    EXPECT_EQ(R.s(), 1U);
    EXPECT_EQ(R.presentation().names2, std::vector<std::string>({"x^2"}));
}

TEST(BuildFromQuadrics, Errors) {
    PrimeField F(5);
    EXPECT_THROW(build_from_quadrics(F, {"x", "x"}, {}), InputError);
    EXPECT_THROW(build_from_quadrics(F, {"x"}, {quad({{0, 0, 1}})}), InputError);
}

TEST(BuildFromQuadrics, NonPivotReduction) {
    // x^2 - y^2, y^2 - z^2, xy, yz: every square reduces to z^2.
    auto pres = build_from_quadrics(PrimeField(5), {"x", "y", "z"},
                                    {quad({{0, 0, 1}, {1, 1, -1}}), quad({{1, 1, 1}, {2, 2, -1}}),
                                     quad({{0, 1, 1}}), quad({{1, 2, 1}})});
    ASSERT_EQ(pres.names2, std::vector<std::string>({"x*z", "z^2"}));
    EXPECT_EQ(pres.c(0, 0, 1), 1U);
    EXPECT_EQ(pres.c(1, 1, 1), 1U);
    EXPECT_EQ(pres.c(2, 2, 1), 1U);
    EXPECT_EQ(pres.c(0, 2, 0), 1U);
    EXPECT_EQ(pres.c(0, 1, 0), 0U);
}

TEST(Validate, Violations) {
    auto pres = ring_r1().presentation();
    EXPECT_TRUE(validate(pres).empty());
    auto broken = pres;
    broken.c(0, 1, 0) = 2;
    auto v = validate(broken);
    ASSERT_FALSE(v.empty());
    EXPECT_NE(v.front().find("not commutative"), std::string::npos);

    auto dead = RingPresentation::blank(PrimeField(5), 2, 1);
    auto d = validate(dead);
    ASSERT_EQ(d.size(), 1U);
    EXPECT_EQ(d.front(), "structure constants do not span V2");
    EXPECT_THROW(Ring{dead}, InputError);

    auto flat = RingPresentation::blank(PrimeField(5), 2, 0);
    EXPECT_FALSE(validate(flat).empty());
}

TEST(Mult, Examples) {
    auto R = ring_r1();
    auto x = R.var(0), y = R.var(1);
    EXPECT_EQ(R.mul(x, y), R.square_basis(0));
    EXPECT_TRUE(R.is_zero(R.mul(x, R.mul(x, y))));

    auto S = ring_r4();
    auto a = elem(S, {{1, 1}, {3, 1}});   // x + z
    auto b = elem(S, {{1, 1}, {3, -1}});  // x - z
    EXPECT_TRUE(S.is_zero(S.mul(a, b)));
}

TEST(Mult, ProductIsCommutativeAndAssociative) {
    auto R = ring_r4();
    std::mt19937 gen(11);
    std::uniform_int_distribution<std::uint32_t> val(0, 4);
    auto rnd = [&] {
        auto a = R.zero();
        for (auto& c : a.coeffs) c = val(gen);
        return a;
    };
    for (int k = 0; k < 200; ++k) {
        auto a = rnd(), b = rnd(), c = rnd();
        EXPECT_EQ(R.mul(a, b), R.mul(b, a));
        EXPECT_EQ(R.mul(R.mul(a, b), c), R.mul(a, R.mul(b, c)));
        EXPECT_EQ(R.mul(a, R.add(b, c)), R.add(R.mul(a, b), R.mul(a, c)));
    }
}

TEST(Invariants, GorensteinR1) {
    auto inv = invariants(ring_r1());
    EXPECT_EQ(inv.e, 2U);
    EXPECT_EQ(inv.s, 1U);
    EXPECT_EQ(inv.r, 1U);
    EXPECT_EQ(inv.length, 4U);
    EXPECT_TRUE(inv.soc_eq_msq);
    EXPECT_TRUE(inv.gorenstein);
}

TEST(Invariants, NonGorensteinR4) {
    auto inv = invariants(ring_r4());
    EXPECT_EQ(inv.e, 3U);
    EXPECT_EQ(inv.s, 2U);
    EXPECT_EQ(inv.r, 2U);
    EXPECT_EQ(inv.length, 6U);
    EXPECT_TRUE(inv.soc_eq_msq);
    EXPECT_FALSE(inv.gorenstein);
}

TEST(Invariants, SocleBiggerThanSquare) {
    auto R = ring_rs();
    auto inv = invariants(R);
    EXPECT_EQ(inv.r, 2U);
    EXPECT_FALSE(inv.soc_eq_msq);
    ASSERT_EQ(inv.socle_basis.size(), 2U);
    EXPECT_EQ(inv.socle_basis[0], R.var(1));  // y
}

// Socle dimension via enumeration: elements killed by every variable.
TEST(Invariants, SocleMatchesEnumeration) {
    for (const auto& R : {ring_r1(), ring_r4(), ring_rs()}) {
        std::size_t count = 0;
        for_each_element(R, [&](const RingElement& g) {
            bool killed = true;
            for (std::size_t i = 0; i < R.e(); ++i) killed = killed && R.is_zero(R.mul(R.var(i), g));
            if (killed) ++count;
        });
        std::size_t d = 0;
        while (count > 1) {
            count /= 5;
            ++d;
        }
        auto inv = invariants(R);
        EXPECT_EQ(inv.r, d);
        EXPECT_GE(inv.r, inv.s);
        EXPECT_EQ(inv.soc_eq_msq, inv.r == inv.s);
    }
}

TEST(Invariants, RandomQuadricRingsValidate) {
    std::mt19937 gen(99);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<std::size_t> edist(1, 4);
        const std::size_t e = edist(gen);
        std::vector<std::string> names;
        for (std::size_t i = 0; i < e; ++i) names.push_back("v" + std::to_string(i));
        std::uniform_int_distribution<std::size_t> qn(0, e * (e + 1) / 2);
        std::uniform_int_distribution<std::int64_t> cf(-2, 2);
        std::vector<QuadraticForm> qs(qn(gen));
        for (auto& q : qs)
            for (std::size_t i = 0; i < e; ++i)
                for (std::size_t j = i; j < e; ++j) q[{i, j}] = cf(gen);
        try {
            auto pres = build_from_quadrics(PrimeField(5), names, qs);
            EXPECT_TRUE(validate(pres).empty());
            auto inv = invariants(Ring(pres));
            EXPECT_EQ(inv.length, 1 + inv.e + inv.s);
            EXPECT_GE(inv.r, inv.s);
        } catch (const InputError&) {
            // every monomial killed
        }
    }
}
