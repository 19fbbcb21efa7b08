#include <gtest/gtest.h>

#include <random>

#include "radcube/theorems.hpp"
#include "support/windows.hpp"

using namespace radcube;
using namespace radcube::testing;

namespace {

bool all_pass(const Verdict& v) {
    for (const auto& c : v.checks)
        if (c.status == CheckStatus::Fail) return false;
    return v.hypotheses_met();
}

bool mentions(const std::vector<std::string>& msgs, const std::string& needle) {
    for (const auto& m : msgs)
        if (m.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST(TheoremA, AlternatingWindow) {
    auto R = ring_r4();
    auto v = check_theorem_A(R, alternating_window(R, -3, 3), 4);
    EXPECT_TRUE(all_pass(v));
    EXPECT_EQ(v.exit_code(), 0);
    EXPECT_EQ(v.e, 3U);
    EXPECT_EQ(v.r, 2U);
    EXPECT_EQ(v.length, 6U);
    EXPECT_EQ(v.betti_k, SeriesTruncation({1, 3, 7, 15, 31}));
    EXPECT_EQ(v.bass, SeriesTruncation({2, 3, 6, 12, 24}));
    EXPECT_TRUE(v.passed("(d) I_R(t) = (r-t)/(1-rt)"));
    EXPECT_TRUE(v.passed("(c') P_k(-t) H_R(t) = 1"));
}

TEST(TheoremA, SeriesRecurrenceOnComputedBetti) {
    auto R = ring_r4();
    auto v = check_theorem_A(R, alternating_window(R, -2, 2), 7);
    ASSERT_TRUE(v.passed("(c) P_k(t) = 1/((1-t)(1-rt))"));
    const auto r = static_cast<std::int64_t>(v.r);
    for (std::size_t i = 2; i < v.betti_k.size(); ++i)
        EXPECT_EQ(v.betti_k[i], (r + 1) * v.betti_k[i - 1] - r * v.betti_k[i - 2]);
}

TEST(TheoremA, GorensteinRefused) {
    auto R = ring_r1();
    auto v = check_theorem_A(R, constant_window(R.var(0), -2, 2), 4);
    EXPECT_EQ(v.exit_code(), 2);
    EXPECT_TRUE(mentions(v.unmet, "Gorenstein"));
    EXPECT_TRUE(v.checks.empty());
}

TEST(TheoremA, SocleWitnessOnBadRing) {
    auto R = ring_rs();
    auto v = check_theorem_A(R, constant_window(R.var(0), -2, 2), 4);
    EXPECT_EQ(v.exit_code(), 2);  // x * x != 0 here, so the window is not a complex
    EXPECT_TRUE(mentions(v.unmet, "d o d != 0"));
    const auto* a = v.find("(a) Soc R = m^2");
    ASSERT_NE(a, nullptr);
    EXPECT_EQ(a->status, CheckStatus::Fail);
    EXPECT_NE(a->detail.find("y"), std::string::npos);
}

TEST(TheoremA, NonMinimalAndZeroWindows) {
    auto R = ring_r4();
    auto v = check_theorem_A(R, window_from_maps(0, {matrix1x1(R.one()), matrix1x1(R.zero())}), 3);
    EXPECT_TRUE(mentions(v.unmet, "not minimal"));
    auto z = check_theorem_A(R, window_from_maps(0, {RModuleMap{0, 0, {}}}), 3);
    EXPECT_TRUE(mentions(z.unmet, "zero"));
}

TEST(TheoremA, DualHomologyMissingSkipsD) {
    auto R = ring_r4();
    // resolution of k with zero on the left, window starting at F_0: only
    // h^1 .. are computable, and they are Ext^i(k,R) != 0
    auto W = k_resolution_window(R, 0, 4, 0);
    auto v = check_theorem_A(R, W, 3, CheckOptions{false});
    const auto* d = v.find("(d) I_R(t) = (r-t)/(1-rt)");
    ASSERT_NE(d, nullptr);
    EXPECT_EQ(d->status, CheckStatus::Skipped);
}

TEST(TheoremB, AlternatingIsTypeOne) {
    auto R = ring_r4();
    auto v = classify_theorem_B(R, alternating_window(R, -3, 3));
    EXPECT_TRUE(all_pass(v));
    EXPECT_EQ(v.type, TheoremBVerdict::Type::I);
    ASSERT_TRUE(v.a.has_value());
    EXPECT_EQ(*v.a, 1U);
    for (auto l : v.lengths) EXPECT_EQ(l, 3U);
    EXPECT_FALSE(v.kappa.has_value());
}

TEST(TheoremB, EngineeredSummandIsTypeTwo) {
    auto R = ring_r4();
    auto W = direct_sum(R, alternating_window(R, -3, 3), k_resolution_window(R, -3, 3, -1));
    auto v = classify_theorem_B(R, W, CheckOptions{false});
    EXPECT_EQ(v.type, TheoremBVerdict::Type::II);
    ASSERT_TRUE(v.kappa.has_value());
    EXPECT_EQ(*v.kappa, -2);
    EXPECT_EQ(v.ranks, std::vector<std::size_t>({1, 1, 2, 4, 8, 16, 32}));
    EXPECT_TRUE(v.passed("ranks strictly increase from kappa"));
    EXPECT_TRUE(v.passed("ranks equal a"));
    EXPECT_TRUE(v.passed("l(C_i) = ae"));
    EXPECT_FALSE(v.notes.empty());
    // with the default options the broken primal side is an unmet hypothesis
    EXPECT_EQ(classify_theorem_B(R, W).exit_code(), 2);
}

TEST(TheoremB, GorensteinRefused) {
    auto R = ring_r1();
    EXPECT_EQ(classify_theorem_B(R, constant_window(R.var(0), -2, 2)).exit_code(), 2);
}

TEST(TheoremC, AlternatingWindow) {
    auto R = ring_r4();
    auto v = check_theorem_C(R, alternating_window(R, -4, 4));
    EXPECT_TRUE(all_pass(v));
    EXPECT_TRUE(v.equal_ranks);
    EXPECT_EQ(v.H, v.computable);
    EXPECT_TRUE(v.closure_full);
    EXPECT_TRUE(v.passed("length argument"));
    EXPECT_TRUE(v.passed("two out of three => all"));
}

TEST(TheoremC, DoubledWindow) {
    auto R = ring_r4();
    auto A = alternating_window(R, -3, 3);
    auto v = check_theorem_C(R, direct_sum(R, A, A));
    EXPECT_TRUE(all_pass(v));
    EXPECT_TRUE(v.equal_ranks);
    EXPECT_EQ(v.dual.ker_dual.at(0), 6U);  // ae with a = 2
}

TEST(TheoremC, SplicedFixtureViolatesImplication) {
    auto R = ring_r4();
    auto W = spliced_window(R, -3, 3);
    auto h = homology_of_dual(R, W).dual_homology;
    EXPECT_EQ(h.at(-1), 0U);
    EXPECT_EQ(h.at(0), 1U);
    EXPECT_EQ(h.at(1), 0U);

    auto v = check_theorem_C(R, W, CheckOptions{false});
    EXPECT_TRUE(v.hypotheses_met());
    EXPECT_TRUE(mentions(v.notes, "d o d != 0 at 0"));
    const auto* imp = v.find("(ii) => (iii)");
    ASSERT_NE(imp, nullptr);
    EXPECT_EQ(imp->status, CheckStatus::Fail);
    EXPECT_NE(imp->detail.find("implication violated at l = 0"), std::string::npos);
    EXPECT_EQ(v.exit_code(), 1);
    EXPECT_EQ(check_theorem_C(R, W).exit_code(), 2);
}

TEST(TheoremC, UnequalRanksSkipImplication) {
    auto R = ring_r4();
    auto W = direct_sum(R, alternating_window(R, -3, 3), k_resolution_window(R, -3, 3, -1));
    auto v = check_theorem_C(R, W, CheckOptions{false});
    EXPECT_FALSE(v.equal_ranks);
    EXPECT_EQ(v.find("(ii) => (iii)")->status, CheckStatus::Skipped);
}

TEST(TheoremC, ConstructedWindow) {
    auto R = ring_r4();
    auto con = construct_from_module(R, matrix1x1(r4_x_plus_z(R)), 5);
    EXPECT_TRUE(all_pass(check_theorem_C(R, con.window)));
    EXPECT_TRUE(all_pass(check_theorem_A(R, con.window, 5)));
    EXPECT_TRUE(all_pass(classify_theorem_B(R, con.window)));
}

TEST(Exceptionality, ResidueField) {
    auto R = ring_r4();
    auto v = exceptionality(R, residue_field_presentation(R), 4);
    EXPECT_TRUE(all_pass(v));
    EXPECT_EQ(v.betti, std::vector<std::size_t>({1, 3, 7, 15, 31}));
    EXPECT_EQ(v.exceptional_up_to, 4U);
    EXPECT_TRUE(v.passed("P_k agrees with 1/(1-et+rt^2) iff k exceptional"));
}

TEST(Exceptionality, ExactZeroDivisorQuotient) {
    auto R = ring_r4();
    auto P = matrix1x1(r4_x_plus_z(R));
    auto v = exceptionality(R, P, 4);
    EXPECT_TRUE(all_pass(v));
    EXPECT_EQ(v.exceptional_up_to, 4U);
    EXPECT_EQ(coker_realize(R, P).msub_dim, 2U);
    for (bool b : v.identity) EXPECT_TRUE(b);
    EXPECT_TRUE(v.passed("rank m M_1 = r beta_0"));
}

TEST(Exceptionality, Guards) {
    auto S = ring_rs();
    EXPECT_TRUE(mentions(exceptionality(S, residue_field_presentation(S), 3).unmet, "Soc R != m^2"));
    auto R = ring_r4();
    EXPECT_TRUE(mentions(exceptionality(R, matrix1x1(R.var(0)), 3).unmet, "m^2 M != 0"));
    EXPECT_THROW(exceptionality(R, residue_field_presentation(R), 0), InputError);
}

// Cyclic modules R/(a, b) with sparse a, b, replaced by their first syzygy
// when m^2 M != 0 (a first syzygy always has m^2 M_1 = 0).  The Betti
// identities must match the k-summand detector on each of them.
TEST(Exceptionality, RandomModulesAgreeWithSummandDetector) {
    std::mt19937 gen(11);
    auto R = ring_r4();
    std::uniform_int_distribution<int> coef(0, 4), keep(0, 2);
    std::size_t with_summand = 0, without = 0;
    for (int trial = 0; trial < 40; ++trial) {
        RModuleMap P{1, 2, {R.zero(), R.zero()}};
        for (auto& a : P.entries)
            for (std::size_t u = 1; u < R.length(); ++u)
                if (keep(gen) == 0) a.coeffs[u] = static_cast<Residue>(coef(gen));
        auto M = coker_realize(R, P);
        if (!M.msq_annihilates()) P = presentation_of(R, coker_realize(R, syzygy_step(R, trim_relations(R, P))));
        if (coker_realize(R, P).dim == 0) continue;
        auto v = exceptionality(R, P, 3);
        ASSERT_TRUE(v.hypotheses_met()) << trial;
        EXPECT_FALSE(v.violated()) << trial;
        (v.exceptional_up_to == 3 ? without : with_summand)++;
    }
    EXPECT_GT(without, 0U);
    EXPECT_GT(with_summand, 0U);
}

TEST(Exceptionality, ResidueSummandInFirstSyzygy) {
    // M = R/(x, yz): yz is a socle generator of M_1 = (x, yz)R outside m M_1
    auto R = ring_r4();
    auto v = exceptionality(R, RModuleMap{1, 2, {R.var(0), elem(R, {{5, 1}})}}, 3);
    EXPECT_TRUE(v.hypotheses_met());
    EXPECT_FALSE(v.violated());
    EXPECT_TRUE(v.k_summand[0]);
    EXPECT_EQ(v.exceptional_up_to, 0U);
    EXPECT_FALSE(v.identity[0]);
}

TEST(Lemmas, BassSeriesOnFlagship) {
    auto R = ring_r4();
    auto v = lemma_checks(R, matrix1x1(r4_x_plus_z(R)), 4);
    EXPECT_TRUE(all_pass(v));
    for (const auto& c : v.checks) EXPECT_EQ(c.status, CheckStatus::Pass) << c.name;
    EXPECT_EQ(v.bass, SeriesTruncation({2, 3, 6, 12, 24}));
    EXPECT_EQ(v.find("bass: beta_0(E_1) = e(r-1)")->detail, "3 vs 3");
    EXPECT_EQ(v.find("bass: l(E_1) = (r-1)(1+e+r)")->detail, "6 vs 6");
    EXPECT_EQ(v.find("bass: rank m E_1 = r^2-1")->detail, "3 vs 3");
    EXPECT_EQ(v.find("length (b)")->detail, "l(M*) = 3, r l(M) - beta_0 mu^1 = 3");
}

TEST(Lemmas, DualLengthSkippedWhenExtNonzero) {
    auto R = ring_r4();
    auto v = lemma_checks(R, residue_field_presentation(R), 3);
    const auto* c = v.find("length (b)");
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->status, CheckStatus::Skipped);
    EXPECT_NE(c->detail.find("Ext^1"), std::string::npos);
}

TEST(Lemmas, GorensteinDualLength) {
    auto R = ring_r1();
    auto v = lemma_checks(R, matrix1x1(R.var(0)), 4);
    EXPECT_EQ(v.find("length (b)")->status, CheckStatus::Pass);
    EXPECT_EQ(v.find("length (b)")->detail, "l(M*) = 2, r l(M) - beta_0 mu^1 = 2");
    EXPECT_EQ(v.find("bass: I_R truncation")->status, CheckStatus::Skipped);
}

TEST(Observation, FlagshipModule) {
    auto R = ring_r4();
    auto v = check_observation(R, matrix1x1(r4_x_plus_z(R)), 4);
    EXPECT_TRUE(all_pass(v));
    EXPECT_EQ(v.betti, std::vector<std::size_t>({1, 1, 1, 1, 1}));
}

TEST(Observation, Guards) {
    auto S = ring_r1();
    EXPECT_TRUE(mentions(check_observation(S, residue_field_presentation(S), 4).unmet, "Gorenstein"));
    auto R = ring_r4();
    EXPECT_TRUE(mentions(check_observation(R, matrix1x1(r4_x_plus_z(R)), 2).unmet, "n < 3"));
    EXPECT_TRUE(mentions(check_observation(R, residue_field_presentation(R), 3).unmet, "Ext^"));
}
