#include <gtest/gtest.h>

#include <random>

#include "radcube/kmatrix.hpp"

using namespace radcube;

namespace {

KMatrix random_matrix(std::mt19937& gen, PrimeField F, std::size_t r, std::size_t c, int zero_bias) {
    std::uniform_int_distribution<int> coin(0, 9);
    std::uniform_int_distribution<std::uint32_t> val(0, F.modulus() - 1);
    KMatrix m(F, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = coin(gen) < zero_bias ? 0 : val(gen);
    return m;
}

// Kernel size by enumerating all of F_p^cols.
std::size_t brute_kernel_dim(const KMatrix& m) {
    const auto p = m.field().modulus();
    KVector x(m.cols(), 0);
    std::size_t count = 0;
    for (;;) {
        auto y = m.apply(x);
        if (std::all_of(y.begin(), y.end(), [](Residue v) { return v == 0; })) ++count;
        std::size_t u = 0;
        while (u < x.size() && ++x[u] == p) x[u++] = 0;
        if (u == x.size()) break;
    }
    std::size_t d = 0;
    while (count > 1) {
        count /= p;
        ++d;
    }
    return d;
}

}  // namespace

TEST(Rref, DependentRows) {
    auto r = rref(KMatrix::from_rows(PrimeField(5), {{1, 2}, {2, 4}}));
    EXPECT_EQ(r.rank, 1U);
    EXPECT_EQ(r.pivots, std::vector<std::size_t>({0}));
}

TEST(Rref, Identity) {
    auto r = rref(KMatrix::identity(PrimeField(7), 3));
    EXPECT_EQ(r.rank, 3U);
    EXPECT_EQ(r.pivots, std::vector<std::size_t>({0, 1, 2}));
}

TEST(Rref, Zero) {
    auto r = rref(KMatrix(PrimeField(5), 2, 3));
    EXPECT_EQ(r.rank, 0U);
    EXPECT_TRUE(r.pivots.empty());
}

TEST(Nullspace, Examples) {
    PrimeField F(5);
    auto b = nullspace_basis(KMatrix::from_rows(F, {{1, 2}}));
    ASSERT_EQ(b.cols(), 1U);
    EXPECT_EQ(b.column(0), (KVector{3, 1}));
    EXPECT_EQ(nullspace_basis(KMatrix::identity(F, 2)).cols(), 0U);
    auto z = nullspace_basis(KMatrix(F, 1, 2));
    ASSERT_EQ(z.cols(), 2U);
    EXPECT_EQ(z.column(0), (KVector{1, 0}));
    EXPECT_EQ(z.column(1), (KVector{0, 1}));
}

TEST(Solve, Examples) {
    PrimeField F(5);
    EXPECT_EQ(solve(KMatrix::identity(F, 2), {3, 4}), (KVector{3, 4}));
    auto m = KMatrix::from_rows(F, {{1, 2}, {2, 4}});
    EXPECT_FALSE(solve(m, {1, 3}).has_value());
    EXPECT_EQ(solve(m, {1, 2}), (KVector{1, 0}));
    EXPECT_THROW((void)solve(m, {1}), InputError);
}

TEST(Field, RejectsComposite) {
    EXPECT_THROW(PrimeField(6), InputError);
    EXPECT_THROW(PrimeField(1), InputError);
    EXPECT_NO_THROW(PrimeField(2147483647));
}

TEST(Field, MixedModuliRejected) {
    EXPECT_THROW((void)(KMatrix::identity(PrimeField(5), 2) * KMatrix::identity(PrimeField(7), 2)), InputError);
}

TEST(KMatrixProperties, RandomizedInvariants) {
    std::mt19937 gen(20061123);
    for (int trial = 0; trial < 200; ++trial) {
        PrimeField F(trial % 3 == 0 ? 2 : (trial % 3 == 1 ? 5 : 101));
        std::uniform_int_distribution<std::size_t> dim(0, 9);
        auto m = random_matrix(gen, F, dim(gen), dim(gen), trial % 10);
        auto r = rref(m);
        EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
        EXPECT_EQ(rank(m), r.rank);
        EXPECT_EQ(rank(m.transpose()), r.rank);
        for (std::size_t k = 1; k < r.pivots.size(); ++k) EXPECT_LT(r.pivots[k - 1], r.pivots[k]);
        auto ns = nullspace_basis(m);
        EXPECT_EQ(m.cols(), r.rank + ns.cols());
        if (m.rows() > 0 && ns.cols() > 0) EXPECT_TRUE((m * ns).is_zero());
        EXPECT_EQ(rank(ns), ns.cols());
        std::uniform_int_distribution<std::uint32_t> val(0, F.modulus() - 1);
        KVector b(m.rows());
        for (auto& v : b) v = val(gen);
        if (auto x = solve(m, b)) {
            EXPECT_EQ(m.apply(*x), b);
        }
        // a consistent right-hand side always solves
        KVector x0(m.cols());
        for (auto& v : x0) v = val(gen);
        auto b0 = m.apply(x0);
        auto x1 = solve(m, b0);
        ASSERT_TRUE(x1.has_value());
        EXPECT_EQ(m.apply(*x1), b0);
    }
}

TEST(KMatrixProperties, NullityMatchesEnumeration) {
    std::mt19937 gen(7);
    PrimeField F(3);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        auto m = random_matrix(gen, F, dim(gen), dim(gen), trial % 7);
        EXPECT_EQ(nullity(m), brute_kernel_dim(m));
    }
}

TEST(SubspaceBasis, CoordinatesReconstruct) {
    std::mt19937 gen(3);
    PrimeField F(7);
    auto m = random_matrix(gen, F, 4, 8, 3);
    SubspaceBasis sb(F, 8);
    for (std::size_t r = 0; r < 4; ++r) sb.add(m.row(r));
    EXPECT_EQ(sb.dim(), rank(m));
    auto v = m.transpose().apply({1, 2, 3, 4});
    auto w = v;
    auto coords = sb.coordinates(w);
    EXPECT_TRUE(std::all_of(w.begin(), w.end(), [](Residue x) { return x == 0; }));
    KVector rebuilt(8, 0);
    for (std::size_t k = 0; k < coords.size(); ++k)
        for (std::size_t j = 0; j < 8; ++j) rebuilt[j] = F.add(rebuilt[j], F.mul(coords[k], sb.rows()[k][j]));
    EXPECT_EQ(rebuilt, v);
}
