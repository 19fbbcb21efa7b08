#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "radcube/complex.hpp"
#include "radcube/series.hpp"

namespace radcube {

enum class CheckStatus { Pass, Fail, Skipped };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

/// One numeric identity or predicate, with both sides spelled out in detail.
struct Check {
    std::string name;
    CheckStatus status = CheckStatus::Skipped;
    std::string detail;
};

/// Common part of every report.  Unmet hypotheses make the verdict
/// inapplicable (exit 2); a failed check on an applicable verdict is a
/// genuine violation (exit 1).
struct Verdict {
    std::string subject;
    std::vector<std::string> unmet;
    std::vector<std::string> notes;
    std::vector<Check> checks;

    void add(std::string name, bool ok, std::string detail) {
        checks.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
    }
    void skip(std::string name, std::string reason) {
        checks.push_back({std::move(name), CheckStatus::Skipped, std::move(reason)});
    }

    [[nodiscard]] bool hypotheses_met() const { return unmet.empty(); }
    [[nodiscard]] bool violated() const {
        return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
    }
    [[nodiscard]] int exit_code() const { return !unmet.empty() ? 2 : violated() ? 1 : 0; }

    [[nodiscard]] const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
    [[nodiscard]] bool passed(const std::string& name) const {
        const auto* c = find(name);
        return c && c->status == CheckStatus::Pass;
    }
};

struct CheckOptions {
    /// When false, a window that fails verify_window only earns a note.  Used
    /// by self-test fixtures that corrupt the primal side on purpose.
    bool require_acyclic = true;
};

namespace detail {

inline std::string positions(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s;
}

inline std::string window_label(const ChainWindow& W) {
    return "on window [" + std::to_string(W.lo) + ", " + std::to_string(W.hi) + "]";
}

/// Records the standing hypotheses of Theorems A-C: R not Gorenstein, W a
/// non-zero minimal acyclic window.  Returns false when R is Gorenstein, in
/// which case nothing else is evaluated.
inline bool window_hypotheses(const Ring& R, const RingInvariants& inv, const ChainWindow& W,
                              const CheckOptions& opt, Verdict& v) {
    if (inv.gorenstein) {
        v.unmet.emplace_back("R Gorenstein (r = 1)");
        return false;
    }
    const auto wr = verify_window(R, W);
    auto flag = [&](std::string msg) {
        if (opt.require_acyclic) v.unmet.push_back(std::move(msg));
        else v.notes.push_back("primal side: " + msg);
    };
    if (std::all_of(W.ranks.begin(), W.ranks.end(), [](std::size_t b) { return b == 0; }))
        v.unmet.emplace_back("window is zero");
    if (!wr.minimal()) v.unmet.push_back("window not minimal at " + positions(wr.nonminimal));
    if (!wr.composes()) flag("d o d != 0 at " + positions(wr.composition_failures));
    std::vector<int> bad;
    for (const auto& [i, h] : wr.homology)
        if (h != 0) bad.push_back(i);
    if (!bad.empty()) flag("homology nonzero at " + positions(bad));
    return true;
}

inline std::string socle_witness(const Ring& R, const RingInvariants& inv) {
    for (const auto& a : inv.socle_basis)
        for (std::size_t i = 0; i < R.e(); ++i)
            if (a.coeffs[1 + i] != 0) return R.format(a);
    return "";
}

/// Parts (a) and (b) of Theorem A, which only concern the ring.
inline void ring_structure_checks(const Ring& R, const RingInvariants& inv, Verdict& v) {
    if (inv.soc_eq_msq) v.add("(a) Soc R = m^2", true, "Soc R = m^2, r = s = " + std::to_string(inv.r));
    else v.add("(a) Soc R = m^2", false, "socle element " + socle_witness(R, inv) + " is not in m^2");
    const bool ok = inv.e == inv.r + 1 && inv.length == 2 * inv.e;
    v.add("(b) e = r + 1, length = 2e", ok,
          "e = " + std::to_string(inv.e) + ", r = " + std::to_string(inv.r) + ", length = " + std::to_string(inv.length));
}

template <class T>
SeriesTruncation as_series(const std::vector<T>& v) {
    return SeriesTruncation(v.begin(), v.end());
}

inline std::string compare(const SeriesTruncation& got, const SeriesTruncation& want) {
    return format_sequence(got) + (got == want ? " == " : " != ") + format_sequence(want);
}

inline std::int64_t i64(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace detail

// ---------------------------------------------------------------- Theorem A

struct TheoremAVerdict : Verdict {
    std::size_t e = 0, r = 0, length = 0;
    SeriesTruncation betti_k, expected_betti;
    SeriesTruncation koszul_product;  // P_k(-t) * (1 + e t + s t^2)
    std::optional<int> vanishing_position;
    SeriesTruncation bass, expected_bass;
};

inline TheoremAVerdict check_theorem_A(const Ring& R, const ChainWindow& W, std::size_t N,
                                       const CheckOptions& opt = {}) {
    TheoremAVerdict v;
    v.subject = "Theorem A " + detail::window_label(W);
    const auto inv = invariants(R);
    v.e = inv.e;
    v.r = inv.r;
    v.length = inv.length;
    if (!detail::window_hypotheses(R, inv, W, opt, v)) return v;
    detail::ring_structure_checks(R, inv, v);

    const auto e = detail::i64(inv.e), r = detail::i64(inv.r), s = detail::i64(inv.s);
    const auto res = resolve(R, residue_field_presentation(R), static_cast<int>(N) + 1);
    v.betti_k = detail::as_series(res.table.betti);
    v.betti_k.resize(N + 1);
    v.expected_betti = expand_rational_series({1}, poly_mul({1, -1}, {1, -r}), N);
    v.add("(c) P_k(t) = 1/((1-t)(1-rt))", v.betti_k == v.expected_betti,
          detail::compare(v.betti_k, v.expected_betti));

    SeriesTruncation alt = v.betti_k;
    for (std::size_t i = 1; i < alt.size(); i += 2) alt[i] = -alt[i];
    SeriesTruncation hilb(N + 1, 0);
    hilb[0] = 1;
    if (N >= 1) hilb[1] = e;
    if (N >= 2) hilb[2] = s;
    v.koszul_product = multiply_truncated(alt, hilb);
    SeriesTruncation one(N + 1, 0);
    one[0] = 1;
    v.add("(c') P_k(-t) H_R(t) = 1", v.koszul_product == one, detail::compare(v.koszul_product, one));

    const auto hd = homology_of_dual(R, W);
    if (hd.vanishing.empty()) {
        v.skip("(d) I_R(t) = (r-t)/(1-rt)", "no vanishing H_n(A*) on window");
        return v;
    }
    v.vanishing_position = hd.vanishing.front();
    v.bass = detail::as_series(ext_dims_from(R, res, static_cast<int>(N) + 1));
    v.expected_bass = expand_rational_series({r, -1}, {1, -r}, N);
    v.add("(d) I_R(t) = (r-t)/(1-rt)", v.bass == v.expected_bass,
          detail::compare(v.bass, v.expected_bass) + " (H_" + std::to_string(*v.vanishing_position) + "(A*) = 0)");
    return v;
}

// ---------------------------------------------------------------- Theorem B

struct TheoremBVerdict : Verdict {
    enum class Type { I, II };
    Type type = Type::I;
    std::optional<int> kappa;
    std::optional<std::size_t> a;
    std::vector<std::size_t> ranks;
    std::vector<std::size_t> lengths;  // l(C_i), i = lo .. hi-1
    std::vector<bool> k_summands;
};

inline TheoremBVerdict classify_theorem_B(const Ring& R, const ChainWindow& W, const CheckOptions& opt = {}) {
    TheoremBVerdict v;
    v.subject = "Theorem B " + detail::window_label(W);
    const auto inv = invariants(R);
    if (!detail::window_hypotheses(R, inv, W, opt, v)) return v;
    const auto cok = cokernels(R, W);
    v.ranks = W.ranks;
    for (const auto& c : cok.entries) {
        v.lengths.push_back(c.length);
        v.k_summands.push_back(c.k_summand);
    }
    v.kappa = cok.kappa;
    const std::size_t e = inv.e;

    // ranks must equal a on lo..upto, and l(C_i) = ae on lo..min(upto, hi-1)
    auto constant_part = [&](int upto) {
        if (upto < W.lo) {
            v.notes.emplace_back("constant-rank part lies left of the window");
            return;
        }
        v.a = W.rank_at(W.lo);
        const std::size_t a = *v.a;
        std::vector<int> off;
        for (int i = W.lo; i <= upto; ++i)
            if (W.rank_at(i) != a) off.push_back(i);
        v.add("ranks equal a", off.empty(),
              "a = " + std::to_string(a) + (off.empty() ? "" : ", differs at " + detail::positions(off)));
        off.clear();
        for (int i = W.lo; i <= std::min(upto, W.hi - 1); ++i)
            if (cok.at(i).length != a * e) off.push_back(i);
        v.add("l(C_i) = ae", off.empty(),
              "ae = " + std::to_string(a * e) + (off.empty() ? "" : ", differs at " + detail::positions(off)));
    };

    if (!v.kappa) {
        v.type = TheoremBVerdict::Type::I;
        constant_part(W.hi);
        return v;
    }
    v.type = TheoremBVerdict::Type::II;
    const int kappa = *v.kappa;
    constant_part(kappa);
    std::vector<int> off;
    for (int i = std::max(kappa, W.lo); i < W.hi; ++i)
        if (W.rank_at(i + 1) <= W.rank_at(i)) off.push_back(i);
    v.add("ranks strictly increase from kappa", off.empty(),
          "kappa = " + std::to_string(kappa) + (off.empty() ? "" : ", no increase at " + detail::positions(off)));
    return v;
}

// ---------------------------------------------------------------- Theorem C

struct TheoremCVerdict : Verdict {
    struct Implication {
        int l = 0;
        bool premise = false;  // l-1 and l+1 in H
        bool holds = true;     // premise => l in H
    };
    std::vector<int> computable;  // positions where h^i is defined
    std::vector<int> H;
    bool equal_ranks = false;
    std::vector<Implication> implications;
    std::vector<int> closure;
    bool closure_full = false;
    HomologyReport dual;
};

inline TheoremCVerdict check_theorem_C(const Ring& R, const ChainWindow& W, const CheckOptions& opt = {}) {
    TheoremCVerdict v;
    v.subject = "Theorem C " + detail::window_label(W);
    const auto inv = invariants(R);
    if (!detail::window_hypotheses(R, inv, W, opt, v)) return v;
    v.dual = homology_of_dual(R, W);
    for (const auto& [i, h] : v.dual.dual_homology) v.computable.push_back(i);
    v.H = v.dual.vanishing;
    const std::set<int> in_h(v.H.begin(), v.H.end());
    const std::set<int> comp(v.computable.begin(), v.computable.end());
    v.equal_ranks = std::all_of(W.ranks.begin(), W.ranks.end(), [&](std::size_t b) { return b == W.ranks.front(); });

    for (int l : v.computable) {
        if (!comp.count(l - 1) || !comp.count(l + 1)) continue;
        TheoremCVerdict::Implication imp{l, in_h.count(l - 1) && in_h.count(l + 1), true};
        imp.holds = !imp.premise || in_h.count(l) > 0;
        v.implications.push_back(imp);
    }

    std::set<int> closed = in_h;
    for (bool grew = true; grew;) {
        grew = false;
        for (int l : v.computable)
            if (!closed.count(l) && closed.count(l - 1) && closed.count(l + 1)) grew = closed.insert(l).second;
    }
    v.closure.assign(closed.begin(), closed.end());
    v.closure_full = closed.size() == comp.size();

    if (!v.equal_ranks) {
        v.skip("(ii) => (iii)", "ranks are not all equal on window");
        return v;
    }
    std::vector<int> broken;
    for (const auto& imp : v.implications)
        if (!imp.holds) broken.push_back(imp.l);
    v.add("(ii) => (iii)", broken.empty(),
          broken.empty() ? std::to_string(v.implications.size()) + " triples checked"
                         : "implication violated at l = " + detail::positions(broken));

    bool two_of_three = !v.computable.empty();
    for (int l : v.computable)
        if (comp.count(l + 2)) {
            const int hits = static_cast<int>(in_h.count(l) + in_h.count(l + 1) + in_h.count(l + 2));
            if (hits < 2) two_of_three = false;
        }
    if (two_of_three) {
        std::vector<int> missing;
        for (int l : v.computable)
            if (comp.count(l - 1) && comp.count(l + 1) && !closed.count(l)) missing.push_back(l);
        v.add("two out of three => all", missing.empty(),
              "H = {" + detail::positions(v.H) + "}" +
                  (missing.empty() ? "" : ", closure misses " + detail::positions(missing)));
    }
    else
        v.skip("two out of three => all", "premise does not hold on window");

    // l(Ker d*_{l+1}) = l(Ker d*_{l-1}) = l(Im d*_l) = ae whenever h^{l-1} = h^{l+1} = 0
    const std::size_t ae = W.ranks.front() * inv.e;
    std::vector<int> bad;
    std::size_t used = 0;
    for (const auto& imp : v.implications) {
        if (!imp.premise) continue;
        ++used;
        const int l = imp.l;
        if (v.dual.ker_dual.at(l + 1) != ae || v.dual.ker_dual.at(l - 1) != ae || v.dual.im_dual.at(l) != ae)
            bad.push_back(l);
    }
    if (used == 0) v.skip("length argument", "no l with l-1, l+1 in H");
    else
        v.add("length argument", bad.empty(),
              "ae = " + std::to_string(ae) + (bad.empty() ? "" : ", lengths differ at l = " + detail::positions(bad)));
    return v;
}

// ------------------------------------------------------- exceptionality

struct ExceptionalityReport : Verdict {
    std::vector<std::size_t> betti;   // beta_0 .. beta_h
    std::vector<bool> k_summand;      // index i-1 for the syzygy M_i, 1 <= i <= h
    std::vector<bool> identity;       // index j-1 for the identity for beta_j
    std::size_t exceptional_up_to = 0;
};

inline ExceptionalityReport exceptionality(const Ring& R, const RModuleMap& P, std::size_t h) {
    if (h < 1) throw InputError("exceptionality: h must be >= 1");
    if (!is_minimal(P)) throw InputError("exceptionality: presentation is not minimal");
    ExceptionalityReport v;
    v.subject = "exceptionality up to h = " + std::to_string(h);
    const auto inv = invariants(R);
    if (!inv.soc_eq_msq) v.unmet.emplace_back("Soc R != m^2");
    const auto M = coker_realize(R, P);
    if (M.dim == 0) v.unmet.emplace_back("M = 0");
    else if (!M.msq_annihilates()) v.unmet.emplace_back("m^2 M != 0");
    if (!v.unmet.empty()) return v;

    const auto res = resolve(R, P, static_cast<int>(h) + 1);
    v.betti.assign(res.table.betti.begin(), res.table.betti.begin() + static_cast<std::ptrdiff_t>(h) + 1);
    const auto e = detail::i64(inv.e), r = detail::i64(inv.r);
    std::vector<std::int64_t> b(v.betti.begin(), v.betti.end());
    for (std::size_t i = 1; i <= h; ++i) v.k_summand.push_back(has_k_summand(coker_realize(R, res.differentials[i])));
    for (std::size_t j = 1; j <= h; ++j) {
        const std::int64_t rhs =
            j == 1 ? e * b[0] - detail::i64(M.msub_dim) : e * b[j - 1] - r * b[j - 2];
        v.identity.push_back(b[j] == rhs);
    }

    bool exc = true, ids = true;
    for (std::size_t j = 1; j <= h; ++j) {
        exc = exc && !v.k_summand[j - 1];
        ids = ids && v.identity[j - 1];
        if (exc) v.exceptional_up_to = j;
        v.add(std::to_string(j) + "-exceptional <=> Betti identities", exc == ids,
              std::string(exc ? "no k-summand in M_1..M_" : "k-summand among M_1..M_") + std::to_string(j) +
                  (ids ? "; identities hold" : "; identities fail"));
    }
    if (!v.k_summand[0]) {
        const auto M1 = coker_realize(R, res.differentials[1]);
        v.add("rank m M_1 = r beta_0", detail::i64(M1.msub_dim) == r * b[0],
              std::to_string(M1.msub_dim) + " vs " + std::to_string(r * b[0]));
    } else {
        v.skip("rank m M_1 = r beta_0", "M is not 1-exceptional");
    }
    if (M.dim == 1) {
        const auto want = expand_rational_series({1}, {1, -e, r}, h);
        const auto got = detail::as_series(v.betti);
        v.add("P_k agrees with 1/(1-et+rt^2) iff k exceptional", (got == want) == exc, detail::compare(got, want));
    }
    return v;
}

// ------------------------------------------------------- lemma checks

struct LemmaReport : Verdict {
    std::vector<std::size_t> ext;  // dim Ext^i(M, R), i = 0 .. n+1
    SeriesTruncation bass, expected_bass;
};

inline LemmaReport lemma_checks(const Ring& R, const RModuleMap& P, std::size_t n) {
    if (!is_minimal(P)) throw InputError("lemma checks: presentation is not minimal");
    LemmaReport v;
    v.subject = "lemma identities, n = " + std::to_string(n);
    const auto inv = invariants(R);
    const auto M = coker_realize(R, P);
    const auto e = detail::i64(inv.e), r = detail::i64(inv.r);
    const auto b0 = detail::i64(P.target_rank);
    const bool msq = M.msq_annihilates();

    if (!msq) v.skip("length (a)", "m^2 M != 0");
    else
        v.add("length (a)", M.dim == M.msub_dim + P.target_rank,
              "l(M) = " + std::to_string(M.dim) + ", rank m M + beta_0 = " + std::to_string(M.msub_dim) + " + " +
                  std::to_string(P.target_rank));

    const bool free = trim_relations(R, P).source_rank == 0;
    v.ext = ext_dims(R, P, static_cast<int>(n) + 2);

    const auto kres = resolve(R, residue_field_presentation(R), static_cast<int>(std::max<std::size_t>(n, 1)) + 1);
    const auto mu = ext_dims_from(R, kres, static_cast<int>(std::max<std::size_t>(n, 1)) + 1);
    if (!msq) v.skip("length (b)", "m^2 M != 0");
    else if (v.ext[1] != 0) v.skip("length (b)", "Ext^1(M,R) != 0 (dim " + std::to_string(v.ext[1]) + ")");
    else {
        const auto lstar = detail::i64(star(R, P).module.dim);
        const auto want = r * detail::i64(M.dim) - b0 * detail::i64(mu[1]);
        v.add("length (b)", lstar == want,
              "l(M*) = " + std::to_string(lstar) + ", r l(M) - beta_0 mu^1 = " + std::to_string(want));
    }

    std::string reason;
    if (inv.gorenstein) reason = "R Gorenstein";
    else if (free) reason = "M free";
    else if (n < 2) reason = "n < 2";
    else if (v.ext[n + 1] != 0) reason = "Ext^" + std::to_string(n + 1) + "(M,R) != 0";
    const char* names[] = {"bass: beta_0(E_1) = e(r-1)", "bass: l(E_1) = (r-1)(1+e+r)", "bass: rank m E_1 = r^2-1",
                           "bass: I_R truncation", "bass: mu^i = beta_i(E)"};
    if (!reason.empty()) {
        for (const auto* nm : names) v.skip(nm, reason);
        return v;
    }
    const auto E = matlis_dual(R, free_module(R, 1));
    const auto E1 = first_syzygy(R, E);
    v.add(names[0], detail::i64(E1.gens()) == e * (r - 1),
          std::to_string(E1.gens()) + " vs " + std::to_string(e * (r - 1)));
    v.add(names[1], detail::i64(E1.dim) == (r - 1) * (1 + e + r),
          std::to_string(E1.dim) + " vs " + std::to_string((r - 1) * (1 + e + r)));
    v.add(names[2], detail::i64(E1.msub_dim) == r * r - 1,
          std::to_string(E1.msub_dim) + " vs " + std::to_string(r * r - 1));
    v.bass = detail::as_series(mu);
    v.bass.resize(n + 1);
    v.expected_bass = expand_rational_series({r, -e, 1}, {1, -e, r}, n);
    v.add(names[3], v.bass == v.expected_bass, detail::compare(v.bass, v.expected_bass));
    auto betaE = detail::as_series(resolve(R, presentation_of(R, E), static_cast<int>(n)).table.betti);
    v.add(names[4], betaE == v.bass, detail::compare(v.bass, betaE));
    return v;
}

// ------------------------------------------------------- observation

struct ObservationReport : Verdict {
    std::vector<std::size_t> betti;
    std::vector<std::size_t> ext;
};

inline ObservationReport check_observation(const Ring& R, const RModuleMap& P, std::size_t n) {
    if (!is_minimal(P)) throw InputError("observation: presentation is not minimal");
    ObservationReport v;
    v.subject = "Ext-vanishing observation, n = " + std::to_string(n);
    const auto inv = invariants(R);
    if (n < 3) v.unmet.emplace_back("n < 3");
    if (inv.gorenstein) v.unmet.emplace_back("R Gorenstein (r = 1)");
    const auto M = coker_realize(R, P);
    if (M.dim == 0) v.unmet.emplace_back("M = 0");
    else if (!M.msq_annihilates()) v.unmet.emplace_back("m^2 M != 0");
    if (!v.unmet.empty()) return v;

    const auto res = resolve(R, P, static_cast<int>(n) + 2);
    v.ext = ext_dims_from(R, res, static_cast<int>(n) + 2);
    for (std::size_t i = n - 1; i <= n + 1; ++i)
        if (v.ext[i] != 0) v.unmet.push_back("Ext^" + std::to_string(i) + "(M,R) != 0");
    if (!v.unmet.empty()) return v;

    v.betti.assign(res.table.betti.begin(), res.table.betti.begin() + static_cast<std::ptrdiff_t>(n) + 1);
    const bool flat = std::all_of(v.betti.begin(), v.betti.end(), [&](std::size_t b) { return b == v.betti[0]; });
    v.add("beta_n = ... = beta_0", flat, format_sequence(v.betti));
    detail::ring_structure_checks(R, inv, v);
    const auto r = detail::i64(inv.r);
    const auto kres = resolve(R, residue_field_presentation(R), static_cast<int>(n) + 1);
    auto pk = detail::as_series(kres.table.betti);
    pk.resize(n + 1);
    const auto want_pk = expand_rational_series({1}, poly_mul({1, -1}, {1, -r}), n);
    v.add("(c) [P_k]_{<=n}", pk == want_pk, detail::compare(pk, want_pk));
    const auto mu = detail::as_series(ext_dims_from(R, kres, static_cast<int>(n) + 1));
    const auto want_mu = expand_rational_series({r, -1}, {1, -r}, n);
    v.add("(d) [I_R]_{<=n}", mu == want_mu, detail::compare(mu, want_mu));
    return v;
}

}  // namespace radcube
