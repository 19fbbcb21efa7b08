#pragma once

// The six acceptance criteria, runnable from the test suite and from
// `radcube selftest`.  Each criterion is a list of exact comparisons plus a
// wall-clock budget.

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "radcube/catalog.hpp"
#include "radcube/recursion.hpp"
#include "radcube/theorems.hpp"

namespace radcube::acceptance {

struct Item {
    std::string what;
    bool ok = false;
    std::string detail;
};

struct Criterion {
    int id = 0;
    std::string title;
    double budget_seconds = 0;
    double seconds = 0;
    std::vector<Item> items;
    std::vector<std::string> notes;  // informational, never affect the outcome

    [[nodiscard]] bool within_budget() const { return seconds < budget_seconds; }
    [[nodiscard]] bool passed() const {
        return within_budget() && std::all_of(items.begin(), items.end(), [](const Item& i) { return i.ok; });
    }
};

namespace detail {

using Sizes = std::vector<std::size_t>;

inline std::string seq(const Sizes& v) { return format_sequence(v); }

inline void expect_seq(Criterion& c, std::string what, const Sizes& got, const Sizes& want) {
    c.items.push_back({std::move(what), got == want, seq(got) + (got == want ? " == " : " != ") + seq(want)});
}

inline void expect_series(Criterion& c, std::string what, const Sizes& got, const SeriesTruncation& want) {
    const SeriesTruncation g(got.begin(), got.end());
    c.items.push_back({std::move(what), g == want, format_sequence(g) + (g == want ? " == " : " != ") + format_sequence(want)});
}

inline void expect_true(Criterion& c, std::string what, bool ok, std::string detail = "") {
    c.items.push_back({std::move(what), ok, std::move(detail)});
}

inline Sizes head(const Sizes& v, std::size_t n) { return Sizes(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)); }

inline std::string verdict_line(const Verdict& v) {
    std::string s = v.hypotheses_met() ? (v.violated() ? "violated" : "holds") : "hypothesis not met";
    for (const auto& u : v.unmet) s += "; " + u;
    for (const auto& ch : v.checks)
        if (ch.status == CheckStatus::Fail) s += "; " + ch.name + ": " + ch.detail;
    return s;
}

inline bool clean(const Verdict& v) { return v.hypotheses_met() && !v.violated(); }

template <class F>
Criterion timed(int id, std::string title, double budget, F&& body) {
    Criterion c;
    c.id = id;
    c.title = std::move(title);
    c.budget_seconds = budget;
    const auto t0 = std::chrono::steady_clock::now();
    body(c);
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c;
}

inline Sizes all_ones(std::size_t n) { return Sizes(n, 1); }

}  // namespace detail

inline Criterion criterion1() {
    using namespace detail;
    return timed(1, "non-Gorenstein flagship R4", 5.0, [](Criterion& c) {
        const auto& entry = catalog_entry("R4");
        const auto R = entry.ring();
        const auto inv = invariants(R);
        expect_seq(c, "e, s, r, length", {inv.e, inv.s, inv.r, inv.length}, {3, 2, 2, 6});
        expect_true(c, "Soc R = m^2", inv.soc_eq_msq);
        expect_true(c, "length = 2e", inv.length == 2 * inv.e);

        const auto kres = resolve(R, residue_field_presentation(R), 6);
        expect_seq(c, "resolve(k, 6)", kres.table.betti, {1, 3, 7, 15, 31, 63, 127});
        expect_series(c, "Betti numbers = 1/((1-t)(1-2t))", kres.table.betti,
                      expand_rational_series({1}, poly_mul({1, -1}, {1, -2}), 6));
        const auto mu = head(ext_dims_from(R, kres, 6), 5);
        expect_seq(c, "Bass numbers", mu, {2, 3, 6, 12, 24});
        expect_series(c, "Bass numbers = (2-t)/(1-2t)", mu, expand_rational_series({2, -1}, {1, -2}, 4));

        const auto P = entry.module(R, "x+z");
        const auto con = construct_from_module(R, P, 6);
        expect_true(c, "construct([x+z], 6) acyclic on window", con.verify.acyclic);
        expect_true(c, "dual homology zero on window", con.dual.all_vanish());
        expect_seq(c, "ranks", con.window.ranks, all_ones(13));

        const auto A = check_theorem_A(R, con.window, 6);
        expect_true(c, "Theorem A", clean(A), verdict_line(A));
        const auto B = classify_theorem_B(R, con.window);
        expect_true(c, "Theorem B verdict", clean(B), verdict_line(B));
        expect_true(c, "Theorem B type I, a = 1", B.type == TheoremBVerdict::Type::I && B.a == std::size_t{1},
                    std::string("type ") + (B.type == TheoremBVerdict::Type::I ? "I" : "II"));
        expect_seq(c, "l(C_i) = ae = 3", B.lengths, Sizes(B.lengths.size(), 3));
        const auto C = check_theorem_C(R, con.window);
        expect_true(c, "Theorem C verdict", clean(C), verdict_line(C));
        expect_true(c, "H full on window", C.closure_full && C.H.size() == C.computable.size(),
                    "H = " + format_sequence(C.H));
        expect_true(c, "all implications hold",
                    std::all_of(C.implications.begin(), C.implications.end(), [](const auto& i) { return i.holds; }));
    });
}

inline Criterion criterion2() {
    using namespace detail;
    return timed(2, "Gorenstein suite R1", 5.0, [](Criterion& c) {
        const auto& entry = catalog_entry("R1");
        const auto R = entry.ring();
        const auto kres = resolve(R, entry.module(R, "k"), 8);
        expect_seq(c, "beta_i(k) = i + 1, i <= 8", kres.table.betti, {1, 2, 3, 4, 5, 6, 7, 8, 9});
        expect_seq(c, "Ext^i(k, R), i <= 6", ext_dims_from(R, kres, 7), {1, 0, 0, 0, 0, 0, 0});

        const auto cx = construct_from_module(R, entry.module(R, "x"), 5);
        expect_seq(c, "construct R/(x): ranks", cx.window.ranks, all_ones(11));
        expect_true(c, "construct R/(x): acyclic, dual homology zero", cx.verify.acyclic && cx.dual.all_vanish());

        const auto ck = construct_from_module(R, entry.module(R, "k"), 5);
        expect_seq(c, "construct k: ranks", ck.window.ranks, {6, 5, 4, 3, 2, 1, 1, 2, 3, 4, 5});
        expect_true(c, "construct k: acyclic, dual homology zero", ck.verify.acyclic && ck.dual.all_vanish());
    });
}

inline Criterion criterion3() {
    using namespace detail;
    return timed(3, "socle guard RS", 2.0, [](Criterion& c) {
        const auto& entry = catalog_entry("RS");
        const auto R = entry.ring();
        const auto inv = invariants(R);
        expect_true(c, "Soc R != m^2", !inv.soc_eq_msq);
        expect_seq(c, "r", {inv.r}, {2});
        const auto b = resolve(R, residue_field_presentation(R), 8).table.betti;
        bool up = true;
        for (std::size_t i = 1; i + 1 < b.size(); ++i) up = up && b[i] < b[i + 1];
        expect_true(c, "beta_1 < beta_2 < ... < beta_8", up, seq(b));
    });
}

inline Criterion criterion4() {
    using namespace detail;
    return timed(4, "recursion grid, 12 terms, bound 40", 10.0, [](Criterion& c) {
        std::string disagree, nonconst, tele;
        std::size_t cells = 0, disagree13 = 0;
        for (std::int64_t r = 2; r <= 6; ++r)
            for (std::int64_t e = 1; e <= 8; ++e) {
                ++cells;
                const auto cls = recursion::classify(e, r);
                const bool constant_only = cls.kind == recursion::Classification::Kind::ConstantOnly;
                const auto found = recursion::search_sequences(e, r, 12, 40);
                const std::string cell = "(e=" + std::to_string(e) + ",r=" + std::to_string(r) + ")";
                if (found.empty() == constant_only || constant_only != (e == r + 1))
                    disagree += " " + cell + " " + std::to_string(found.size()) + " found";
                for (const auto& a : found) {
                    if (!recursion::is_constant(a)) nonconst += " " + cell + " " + format_sequence(a);
                    if (!recursion::telescoping_holds(a)) tele += " " + cell;
                }
                if (recursion::search_sequences(e, r, 13, 40).empty() == constant_only) ++disagree13;
            }
        expect_true(c, "classify agrees with search", disagree.empty(),
                    disagree.empty() ? std::to_string(cells) + " cells" : "disagreement at" + disagree);
        expect_true(c, "found prefixes are constant", nonconst.empty(), nonconst.empty() ? "" : "non-constant:" + nonconst);
        expect_true(c, "a_i a_{i+2} = a_{i+1}^2 on found prefixes", tele.empty(), tele.empty() ? "" : "fails at" + tele);
        c.notes.push_back("with 13 terms: " + std::to_string(cells - disagree13) + " of " + std::to_string(cells) +
                          " cells agree");
    });
}

namespace detail {

/// Random graded ring over F_5 with e <= 4.  The number of relations is
/// chosen so that s lands in 1..3, which keeps resolutions small.
inline Ring random_ring(std::mt19937_64& gen) {
    std::uniform_int_distribution<std::size_t> pick_e(1, 4);
    std::uniform_int_distribution<int> coef(0, 4), coin(0, 1);
    const std::size_t e = pick_e(gen);
    const std::size_t n = e * (e + 1) / 2;
    std::uniform_int_distribution<std::size_t> pick_s(1, std::min<std::size_t>(n, 3));
    const std::size_t q = n - pick_s(gen);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < e; ++i) names.push_back("x" + std::to_string(i + 1));
    std::vector<QuadraticForm> rels(q);
    for (auto& f : rels)
        for (std::size_t i = 0; i < e; ++i)
            for (std::size_t j = i; j < e; ++j)
                if (coin(gen)) f[{i, j}] = coef(gen);
    return Ring(build_from_quadrics(PrimeField(5), names, rels));
}

/// R/(a_1, .., a_k) with k in {1, 2} and random a_j in m, sparse.
inline RModuleMap random_cyclic(const Ring& R, std::mt19937_64& gen) {
    std::uniform_int_distribution<int> coef(1, 4), keep(0, 2), count(1, 2);
    const auto k = static_cast<std::size_t>(count(gen));
    RModuleMap P{1, k, std::vector<RingElement>(k, R.zero())};
    for (auto& a : P.entries)
        for (std::size_t u = 1; u < R.length(); ++u)
            if (keep(gen) == 0) a.coeffs[u] = static_cast<Residue>(coef(gen));
    return P;
}

}  // namespace detail

inline Criterion criterion5() {
    using namespace detail;
    return timed(5, "property suite, 100 random rings", 60.0, [](Criterion& c) {
        std::mt19937_64 gen(20240611);
        std::size_t composed = 0, composed_ok = 0, cokernels = 0, lengths_ok = 0, soc_rings = 0, exc_runs = 0, exc_ok = 0,
                    exc_with_summand = 0, matlis = 0, matlis_ok = 0, mu0_ok = 0, ranks = 0, ranks_ok = 0;
        std::vector<std::string> failures;
        std::map<std::size_t, std::size_t> s_hist;
        auto fail = [&](std::string msg) {
            if (failures.size() < 5) failures.push_back(std::move(msg));
        };
        for (int ring_no = 0; ring_no < 100; ++ring_no) {
            const auto R = random_ring(gen);
            const auto inv = invariants(R);
            ++s_hist[R.s()];
            const std::string tag = "ring " + std::to_string(ring_no);

            // (v) beta_0 of the injective hull of k is r
            const auto E = matlis_dual(R, free_module(R, 1));
            if (E.gens() == inv.r) ++mu0_ok;
            else fail(tag + ": beta_0(E) = " + std::to_string(E.gens()) + ", r = " + std::to_string(inv.r));
            if (inv.soc_eq_msq) ++soc_rings;

            for (int m = 0; m < 3; ++m) {
                const auto P = random_cyclic(R, gen);
                const auto res = resolve(R, P, 6);
                const auto& d = res.differentials;
                // (i) consecutive differentials compose to zero
                for (std::size_t i = 0; i + 1 < d.size(); ++i) {
                    const auto dd = compose(R, d[i], d[i + 1]);
                    ++composed;
                    if (std::all_of(dd.entries.begin(), dd.entries.end(), [&](const RingElement& a) { return R.is_zero(a); }))
                        ++composed_ok;
                    else
                        fail(tag + ": d o d != 0 at " + std::to_string(i + 1));
                }
                // (ii) length of each syzygy = rank m M_i + beta_i, beta_i from the resolution
                for (std::size_t i = 0; i < d.size(); ++i) {
                    const auto Mi = coker_realize(R, d[i]);
                    ++cokernels;
                    if (Mi.dim == Mi.msub_dim + res.table.betti[i]) ++lengths_ok;
                    else fail(tag + ": l(M_" + std::to_string(i) + ") != rank mM + beta");
                    // (iv) Matlis duality preserves length, swaps top and socle, and is an involution on length
                    const auto D = matlis_dual(R, Mi);
                    const auto DD = matlis_dual(R, D);
                    ++matlis;
                    if (D.dim == Mi.dim && DD.dim == Mi.dim && D.socle_dim == Mi.gens() && DD.msub_dim == Mi.msub_dim) ++matlis_ok;
                    else fail(tag + ": Matlis dual dimensions");
                }
                // (vi) row rank = column rank
                for (const auto& f : d) {
                    const auto K = to_kmatrix(R, f);
                    ++ranks;
                    if (rank(K) == rank(K.transpose())) ++ranks_ok;
                    else fail(tag + ": rank(K) != rank(K^T)");
                }
                // (iii) Betti identities exactly where no k-summand has appeared
                if (inv.soc_eq_msq) {
                    // m^2 M != 0: use M_1 instead, one step shorter so the depth stays 6
                    auto Q = P;
                    std::size_t h = 5;
                    if (!coker_realize(R, Q).msq_annihilates() && d.size() > 1) {
                        Q = presentation_of(R, coker_realize(R, d[1]));
                        h = 4;
                    }
                    if (coker_realize(R, Q).dim == 0 || !is_minimal(Q)) continue;
                    const auto v = exceptionality(R, Q, h);
                    ++exc_runs;
                    if (v.hypotheses_met() && !v.violated()) ++exc_ok;
                    else fail(tag + ": exceptionality " + verdict_line(v));
                    if (v.exceptional_up_to < h) ++exc_with_summand;
                }
            }
        }
        auto frac = [](std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); };
        expect_true(c, "(i) d o d = 0", composed_ok == composed, frac(composed_ok, composed) + " products");
        expect_true(c, "(ii) l = rank mM + beta_0", lengths_ok == cokernels, frac(lengths_ok, cokernels));
        expect_true(c, "(iii) Betti identities <=> no k-summand", exc_ok == exc_runs && exc_runs > 0,
                    frac(exc_ok, exc_runs) + " modules, " + std::to_string(exc_with_summand) + " with a k-summand, " +
                        std::to_string(soc_rings) + " rings with Soc = m^2");
        expect_true(c, "(iv) Matlis dual dimensions", matlis_ok == matlis, frac(matlis_ok, matlis));
        expect_true(c, "(v) beta_0(E) = r", mu0_ok == 100, frac(mu0_ok, 100));
        expect_true(c, "(vi) rank K = rank K^T", ranks_ok == ranks, frac(ranks_ok, ranks));
        expect_true(c, "no individual failures", failures.empty(), failures.empty() ? "" : failures.front());
        std::string hist = "s distribution:";
        for (const auto& [s, n] : s_hist) hist += " s=" + std::to_string(s) + ":" + std::to_string(n);
        c.notes.push_back(hist);
        for (const auto& item : c.items)
            if (!item.detail.empty() && item.ok) c.notes.push_back(item.what + ": " + item.detail);
    });
}

inline Criterion criterion6() {
    using namespace detail;
    return timed(6, "Bass series identities on R4, M = R/(x+z), n = 4", 5.0, [](Criterion& c) {
        const auto& entry = catalog_entry("R4");
        const auto R = entry.ring();
        const auto v = lemma_checks(R, entry.module(R, "x+z"), 4);
        auto check = [&](const std::string& name, const std::string& want) {
            const auto* ch = v.find(name);
            expect_true(c, name, ch && ch->status == CheckStatus::Pass && ch->detail == want,
                        ch ? std::string(to_string(ch->status)) + ", " + ch->detail : "missing");
        };
        check("bass: beta_0(E_1) = e(r-1)", "3 vs 3");
        check("bass: l(E_1) = (r-1)(1+e+r)", "6 vs 6");
        check("bass: rank m E_1 = r^2-1", "3 vs 3");
        check("bass: I_R truncation", "(2, 3, 6, 12, 24) == (2, 3, 6, 12, 24)");
        expect_true(c, "expected series is (r - et + t^2)/(1 - et + rt^2)",
                    v.expected_bass == expand_rational_series({2, -3, 1}, {1, -3, 2}, 4), format_sequence(v.expected_bass));
    });
}

inline std::vector<Criterion> run_all() {
    return {criterion1(), criterion2(), criterion3(), criterion4(), criterion5(), criterion6()};
}

inline std::string summary_line(const Criterion& c) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f s", c.seconds);
    return "criterion " + std::to_string(c.id) + ": " + (c.passed() ? "PASS" : "FAIL") + "  " + c.title + " (" + buf +
           (c.within_budget() ? "" : ", over budget") + ")";
}

}  // namespace radcube::acceptance
