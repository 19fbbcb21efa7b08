#include <gtest/gtest.h>

#include "radcube/parse.hpp"
#include "support/windows.hpp"

using namespace radcube;
using namespace radcube::io;
using namespace radcube::testing;

namespace {

// Line and column of the error thrown by f, or (0, 0) if none.
template <class F>
std::pair<std::size_t, std::size_t> error_at(F&& f) {
    try {
        f();
    } catch (const ParseError& err) {
        return {err.line(), err.column()};
    }
    return {0, 0};
}

const char* kR4 = "# the flagship\np = 5\nvars = x, y, z\nrelations = x^2, x*y, y^2, z^2\n";

}  // namespace

TEST(ParseRing, QuadricForm) {
    EXPECT_EQ(parse_ring(kR4), ring_r4());
    EXPECT_EQ(parse_ring("p = 5\nvars = x, y\nrelations = x^2\nrelations = y^2\n"), ring_r1());
    EXPECT_EQ(parse_ring("p=5\nvars=x,y\nrelations = x*y, y*y\n"), ring_rs());
}

TEST(ParseRing, RelationsAreExpressions) {
    // x^2 - y^2 and (x+y)^2 - 2 x y - y^2 = x^2 generate the same span as x^2, y^2
    EXPECT_EQ(parse_ring("p = 5\nvars = x, y\nrelations = x^2 - y^2, (x + y)^2 - 2*x*y - y^2\n"), ring_r1());
}

TEST(ParseRing, StructureConstantForm) {
    const auto R = parse_ring("p = 5\ne = 2\ns = 1\nmult = 1 2 1 1\n");
    EXPECT_EQ(R.e(), 2U);
    EXPECT_EQ(R.s(), 1U);
    EXPECT_EQ(invariants(R).r, 1U);
    // x1 x2 = y1 and nothing else: this is R1 in the basis x, y
    EXPECT_EQ(R.format(R.mul(R.var(0), R.var(1))), "y1");
    EXPECT_TRUE(R.is_zero(R.mul(R.var(0), R.var(0))));
}

TEST(ParseRing, WriterRoundTrips) {
    for (const auto& R : {ring_r1(), ring_r4(), ring_rs()}) {
        const auto text = write_ring(R);
        EXPECT_EQ(parse_ring(text), R) << text;
    }
    auto pres = RingPresentation::blank(PrimeField(7), 2, 1);
    pres.names1 = {"a", "b"};
    pres.names2 = {"u"};
    pres.c(0, 0, 0) = 3;
    pres.c(1, 1, 0) = 1;
    const Ring R(pres);
    const auto back = parse_ring(write_ring(R));
    EXPECT_EQ(back, R);
    EXPECT_EQ(back.presentation().names2, std::vector<std::string>{"u"});
}

TEST(ParseRing, ErrorsCarryPositions) {
    EXPECT_EQ(error_at([] { parse_ring("p = 5\nvars = x, y\nrelations = x^2, x*w\n"); }), std::make_pair(3UL, 20UL));
    EXPECT_EQ(error_at([] { parse_ring("p = 5\nvars = x, y\nrelations = x^2 + y\n"); }), std::make_pair(3UL, 13UL));
    EXPECT_EQ(error_at([] { parse_ring("p = 5\nvars = x, y\nrelations = x^2 +\n"); }), std::make_pair(3UL, 18UL));
    EXPECT_EQ(error_at([] { parse_ring("p = 5\nvars = x y\n"); }), std::make_pair(2UL, 8UL));
    EXPECT_EQ(error_at([] { parse_ring("p = 5\n  colour = red\n"); }), std::make_pair(2UL, 3UL));
    EXPECT_EQ(error_at([] { parse_ring("p = 5\nwhat\n"); }), std::make_pair(2UL, 1UL));
    EXPECT_EQ(error_at([] { parse_ring("p = 5\ne = 2\ns = 1\nmult = 1 3 1 1\n"); }), std::make_pair(4UL, 10UL));
    EXPECT_EQ(error_at([] { parse_ring("p = 5\ne = 2\ns = 1\nmult = 1 2 1 1\nmult = 2 1 1 2\n"); }).first, 5UL);
    EXPECT_THROW(parse_ring("p = 6\nvars = x\nrelations = \n"), ParseError);
    EXPECT_THROW(parse_ring("vars = x\n"), ParseError);
    EXPECT_THROW(parse_ring("p = 5\nvars = x, y\nrelations = x^2, x*y, y^2\n"), ParseError);  // m^2 = 0
    EXPECT_THROW(parse_ring("p = 5\nvars = x\nrelations = x^2\ne = 1\n"), ParseError);
    EXPECT_THROW(parse_ring("p = 5\ne = 2\ns = 1\n"), ParseError);  // constants do not span V2
}

TEST(ParseElement, Arithmetic) {
    const auto R = ring_r4();
    EXPECT_EQ(parse_element(R, "x + 2*z"), elem(R, {{1, 1}, {3, 2}}));
    EXPECT_EQ(parse_element(R, "-x"), elem(R, {{1, -1}}));
    EXPECT_EQ(parse_element(R, "(x + z)^2"), R.mul(r4_x_plus_z(R), r4_x_plus_z(R)));
    EXPECT_EQ(parse_element(R, "(x + z)*(x - z)"), R.zero());
    EXPECT_EQ(parse_element(R, "3 - 3 + 0*y"), R.zero());
    EXPECT_EQ(parse_element(R, "x^0"), R.one());
    EXPECT_EQ(parse_element(R, "7"), R.constant(2));
    for (std::size_t u = 0; u < R.length(); ++u) EXPECT_EQ(parse_element(R, R.format(R.basis(u))), R.basis(u));
    const auto a = R.add(R.scale(R.var(1), 4), R.square_basis(0));
    EXPECT_EQ(parse_element(R, R.format(a)), a);
    EXPECT_THROW(parse_element(R, ""), ParseError);
    EXPECT_THROW(parse_element(R, "x +* y"), ParseError);
    EXPECT_THROW(parse_element(R, "(x"), ParseError);
    EXPECT_THROW(parse_element(R, "x^"), ParseError);
}

TEST(ParseModule, ReadWrite) {
    const auto R = ring_r4();
    const auto P = parse_module(R, "rows = 1\ncols = 2\nrow = x, y + z\n");
    ASSERT_EQ(P.target_rank, 1U);
    ASSERT_EQ(P.source_rank, 2U);
    EXPECT_EQ(P.at(0, 1), elem(R, {{2, 1}, {3, 1}}));
    EXPECT_EQ(parse_module(R, write_module(R, P)).entries, P.entries);

    const auto F = parse_module(R, "rows = 2\ncols = 0\n");
    EXPECT_EQ(F.target_rank, 2U);
    EXPECT_EQ(F.source_rank, 0U);
    EXPECT_EQ(parse_module(R, write_module(R, F)).target_rank, 2U);

    EXPECT_EQ(error_at([&] { parse_module(R, "rows = 1\ncols = 2\nrow = x\n"); }), std::make_pair(3UL, 7UL));
    EXPECT_EQ(error_at([&] { parse_module(R, "rows = 1\ncols = 1\nrow = q\n"); }), std::make_pair(3UL, 7UL));
    EXPECT_EQ(error_at([&] { parse_module(R, "rows = 2\ncols = 1\nrow = x\n"); }).first, 2UL);
    EXPECT_THROW(parse_module(R, "rows = 1\ncols = 1\nrow = x\nrow = y\n"), ParseError);
    EXPECT_THROW(parse_module(R, "cols = 1\nrow = x\n"), ParseError);
}

TEST(ParseWindow, RoundTrip) {
    const auto R = ring_r4();
    for (const auto& W : {alternating_window(R, -3, 4), k_resolution_window(R, -1, 3, 0), spliced_window(R, -2, 2)}) {
        const auto text = write_window(R, W);
        EXPECT_EQ(parse_window(R, text), W) << text;
    }
}

TEST(ParseWindow, Errors) {
    const auto R = ring_r4();
    const std::string good = "lo = 0\nhi = 2\nranks = 1, 1, 1\n[d 1]\nrow = x + z\n[d 2]\nrow = x - z\n";
    EXPECT_NO_THROW(parse_window(R, good));
    EXPECT_EQ(error_at([&] { parse_window(R, "lo = 0\nhi = 2\nranks = 1, 1\n"); }).first, 1UL);
    EXPECT_EQ(error_at([&] { parse_window(R, "lo = 0\nhi = 2\nranks = 1, 1, 1\n[d 2]\nrow = x\n"); }), std::make_pair(4UL, 1UL));
    EXPECT_EQ(error_at([&] { parse_window(R, good + "row = x\n"); }).first, 8UL);
    EXPECT_EQ(error_at([&] { parse_window(R, "lo = 0\nhi = 1\nranks = 1, 1\n[d 1\n"); }).first, 4UL);
    EXPECT_THROW(parse_window(R, "lo = 2\nhi = 2\nranks = 1\n"), ParseError);
}
