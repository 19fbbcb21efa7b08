#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "radcube/kmatrix.hpp"

namespace radcube {

/// A graded local k-algebra k + V1 + V2 with m^3 = 0, given by structure
/// constants: x_i * x_j = sum_t c(i, j, t) y_t.
struct RingPresentation {
    PrimeField field;
    std::size_t e = 0;
    std::size_t s = 0;
    std::vector<std::string> names1;  // x_1..x_e
    std::vector<std::string> names2;  // y_1..y_s
    std::vector<Residue> mult;        // e * e * s, index (i * e + j) * s + t

    [[nodiscard]] Residue c(std::size_t i, std::size_t j, std::size_t t) const { return mult[(i * e + j) * s + t]; }
    Residue& c(std::size_t i, std::size_t j, std::size_t t) { return mult[(i * e + j) * s + t]; }

    /// Zero-initialised table with default names x1.., y1...
    static RingPresentation blank(PrimeField field, std::size_t e, std::size_t s) {
        RingPresentation p;
        p.field = field;
        p.e = e;
        p.s = s;
        for (std::size_t i = 0; i < e; ++i) p.names1.push_back("x" + std::to_string(i + 1));
        for (std::size_t t = 0; t < s; ++t) p.names2.push_back("y" + std::to_string(t + 1));
        p.mult.assign(e * e * s, 0);
        return p;
    }
};

/// Every violated presentation invariant, one message each.  Empty means valid.
inline std::vector<std::string> validate(const RingPresentation& pres) {
    std::vector<std::string> out;
    const auto e = pres.e, s = pres.s;
    if (s == 0) out.emplace_back("m^2 = 0 excluded (s must be at least 1)");
    if (pres.mult.size() != e * e * s) {
        out.emplace_back("structure-constant table has " + std::to_string(pres.mult.size()) + " entries, expected " +
                         std::to_string(e * e * s));
        return out;
    }
    if (pres.names1.size() != e || pres.names2.size() != s) out.emplace_back("basis name count mismatch");
    for (auto v : pres.mult) {
        if (v >= pres.field.modulus()) {
            out.emplace_back("structure constant not reduced mod p");
            break;
        }
    }
    for (std::size_t i = 0; i < e; ++i)
        for (std::size_t j = i + 1; j < e; ++j)
            for (std::size_t t = 0; t < s; ++t)
                if (pres.c(i, j, t) != pres.c(j, i, t)) {
                    out.push_back("not commutative: c[" + std::to_string(i) + "][" + std::to_string(j) + "][" +
                                  std::to_string(t) + "] != c[" + std::to_string(j) + "][" + std::to_string(i) +
                                  "][" + std::to_string(t) + "]");
                }
    if (s > 0) {
        KMatrix span(pres.field, e * (e + 1) / 2, s);
        std::size_t row = 0;
        for (std::size_t i = 0; i < e; ++i)
            for (std::size_t j = i; j < e; ++j, ++row)
                for (std::size_t t = 0; t < s; ++t) span(row, t) = pres.c(i, j, t) % pres.field.modulus();
        if (rank(span) < s) out.emplace_back("structure constants do not span V2");
    }
    std::set<std::string> seen;
    for (const auto& n : pres.names1)
        if (!seen.insert(n).second) out.push_back("duplicate basis name '" + n + "'");
    for (const auto& n : pres.names2)
        if (!seen.insert(n).second) out.push_back("duplicate basis name '" + n + "'");
    return out;
}

/// Coefficients over the basis (1, x_1..x_e, y_1..y_s).
struct RingElement {
    std::vector<Residue> coeffs;

    friend bool operator==(const RingElement&, const RingElement&) = default;
};

struct RingInvariants {
    std::size_t e = 0;
    std::size_t s = 0;
    std::size_t r = 0;
    std::size_t length = 0;
    std::vector<RingElement> socle_basis;
    bool soc_eq_msq = false;
    bool gorenstein = false;
    std::vector<std::size_t> hilbert;  // (1, e, s)
};

/// A validated ring.  Immutable; all element arithmetic goes through here.
class Ring {
public:
    explicit Ring(RingPresentation pres) : pres_(std::move(pres)) {
        auto problems = validate(pres_);
        if (!problems.empty()) {
            std::string msg = "invalid ring presentation:";
            for (const auto& p : problems) msg += "\n  " + p;
            throw InputError(msg);
        }
        derive_square_expressions();
    }

    [[nodiscard]] const RingPresentation& presentation() const noexcept { return pres_; }
    [[nodiscard]] const PrimeField& field() const noexcept { return pres_.field; }
    [[nodiscard]] std::size_t e() const noexcept { return pres_.e; }
    [[nodiscard]] std::size_t s() const noexcept { return pres_.s; }
    /// k-dimension 1 + e + s.
    [[nodiscard]] std::size_t length() const noexcept { return 1 + pres_.e + pres_.s; }

    [[nodiscard]] RingElement zero() const { return RingElement{std::vector<Residue>(length(), 0)}; }
    [[nodiscard]] RingElement one() const { return basis(0); }
    [[nodiscard]] RingElement basis(std::size_t u) const {
        auto z = zero();
        z.coeffs.at(u) = 1;
        return z;
    }
    [[nodiscard]] RingElement var(std::size_t i) const { return basis(1 + i); }
    [[nodiscard]] RingElement square_basis(std::size_t t) const { return basis(1 + pres_.e + t); }
    [[nodiscard]] RingElement constant(std::int64_t c) const {
        auto z = zero();
        z.coeffs[0] = field().reduce(c);
        return z;
    }

    [[nodiscard]] RingElement mul(const RingElement& a, const RingElement& b) const {
        check(a);
        check(b);
        const auto& F = field();
        const auto e = pres_.e, s = pres_.s;
        auto out = zero();
        const Residue a0 = a.coeffs[0], b0 = b.coeffs[0];
        for (std::size_t u = 0; u < length(); ++u)
            out.coeffs[u] = F.add(F.mul(a0, b.coeffs[u]), u == 0 ? 0 : F.mul(b0, a.coeffs[u]));
        for (std::size_t i = 0; i < e; ++i) {
            const Residue ai = a.coeffs[1 + i];
            if (ai == 0) continue;
            for (std::size_t j = 0; j < e; ++j) {
                const Residue f = F.mul(ai, b.coeffs[1 + j]);
                if (f == 0) continue;
                for (std::size_t t = 0; t < s; ++t)
                    out.coeffs[1 + e + t] = F.add(out.coeffs[1 + e + t], F.mul(f, pres_.c(i, j, t)));
            }
        }
        return out;
    }

    [[nodiscard]] RingElement add(const RingElement& a, const RingElement& b) const {
        check(a);
        check(b);
        auto out = a;
        for (std::size_t u = 0; u < length(); ++u) out.coeffs[u] = field().add(a.coeffs[u], b.coeffs[u]);
        return out;
    }
    [[nodiscard]] RingElement sub(const RingElement& a, const RingElement& b) const {
        check(a);
        check(b);
        auto out = a;
        for (std::size_t u = 0; u < length(); ++u) out.coeffs[u] = field().sub(a.coeffs[u], b.coeffs[u]);
        return out;
    }
    [[nodiscard]] RingElement scale(const RingElement& a, Residue f) const {
        check(a);
        auto out = a;
        for (auto& v : out.coeffs) v = field().mul(v, f);
        return out;
    }

    [[nodiscard]] bool is_zero(const RingElement& a) const {
        check(a);
        for (auto v : a.coeffs)
            if (v) return false;
        return true;
    }
    [[nodiscard]] static bool in_max_ideal(const RingElement& a) { return a.coeffs.at(0) == 0; }
    [[nodiscard]] static bool is_unit(const RingElement& a) { return a.coeffs.at(0) != 0; }

    /// Matrix of b -> a*b on the k-basis (1, x.., y..).
    [[nodiscard]] KMatrix mult_matrix(const RingElement& a) const {
        KMatrix m(field(), length(), length());
        for (std::size_t u = 0; u < length(); ++u) {
            auto col = mul(a, basis(u));
            for (std::size_t v = 0; v < length(); ++v) m(v, u) = col.coeffs[v];
        }
        return m;
    }

    /// For each degree-2 basis element y_t, a combination sum coef * x_i x_j
    /// equal to it.  Exists because the constants span V2.
    struct SquareTerm {
        std::size_t i, j;
        Residue coef;
    };
    [[nodiscard]] const std::vector<std::vector<SquareTerm>>& square_expressions() const noexcept {
        return square_expr_;
    }

    /// Human-readable, re-parseable rendering, e.g. "x + 4*z + x*z".
    [[nodiscard]] std::string format(const RingElement& a) const {
        check(a);
        std::string out;
        for (std::size_t u = 0; u < length(); ++u) {
            const Residue c = a.coeffs[u];
            if (c == 0) continue;
            const std::string name = basis_name(u);
            if (!out.empty()) out += " + ";
            if (u == 0) {
                out += std::to_string(c);
            } else if (c == 1) {
                out += name;
            } else {
                out += std::to_string(c) + "*" + name;
            }
        }
        return out.empty() ? "0" : out;
    }

    [[nodiscard]] std::string basis_name(std::size_t u) const {
        if (u == 0) return "1";
        if (u <= pres_.e) return pres_.names1[u - 1];
        return pres_.names2[u - 1 - pres_.e];
    }

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.pres_.field == b.pres_.field && a.pres_.e == b.pres_.e && a.pres_.s == b.pres_.s &&
               a.pres_.mult == b.pres_.mult;
    }

private:
    void check(const RingElement& a) const {
        if (a.coeffs.size() != length()) throw InputError("ring element does not belong to this ring");
    }

    void derive_square_expressions() {
        const auto e = pres_.e, s = pres_.s;
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        std::vector<KVector> cols;
        for (std::size_t i = 0; i < e; ++i)
            for (std::size_t j = i; j < e; ++j) {
                pairs.emplace_back(i, j);
                KVector v(s);
                for (std::size_t t = 0; t < s; ++t) v[t] = pres_.c(i, j, t);
                cols.push_back(std::move(v));
            }
        const auto A = KMatrix::from_columns(field(), s, cols);
        square_expr_.resize(s);
        for (std::size_t t = 0; t < s; ++t) {
            KVector target(s, 0);
            target[t] = 1;
            auto sol = solve(A, target);
            for (std::size_t k = 0; k < pairs.size(); ++k)
                if ((*sol)[k]) square_expr_[t].push_back({pairs[k].first, pairs[k].second, (*sol)[k]});
        }
    }

    RingPresentation pres_;
    std::vector<std::vector<SquareTerm>> square_expr_;
};

/// Homogeneous quadratic form: coefficient of x_i x_j keyed by (i, j), i <= j.
using QuadraticForm = std::map<std::pair<std::size_t, std::size_t>, std::int64_t>;

/// V2 := Sym^2(V1) / span(quadrics).  The degree-2 basis is the set of
/// non-pivot monomials of the RREF of the relation matrix, monomials in
/// graded-lex order x_1^2 > x_1 x_2 > ... > x_e^2.
inline RingPresentation build_from_quadrics(PrimeField field, const std::vector<std::string>& var_names,
                                            const std::vector<QuadraticForm>& quadrics) {
    const std::size_t e = var_names.size();
    std::set<std::string> seen;
    for (const auto& n : var_names) {
        if (n.empty()) throw InputError("empty variable name");
        if (!seen.insert(n).second) throw InputError("duplicate variable name '" + n + "'");
    }
    std::vector<std::pair<std::size_t, std::size_t>> monomials;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> mono_index;
    for (std::size_t i = 0; i < e; ++i)
        for (std::size_t j = i; j < e; ++j) {
            mono_index[{i, j}] = monomials.size();
            monomials.emplace_back(i, j);
        }
    KMatrix rel(field, quadrics.size(), monomials.size());
    for (std::size_t q = 0; q < quadrics.size(); ++q) {
        for (const auto& [ij, coef] : quadrics[q]) {
            auto [i, j] = ij;
            if (i > j) std::swap(i, j);
            if (j >= e) throw InputError("quadric refers to variable index out of range");
            auto& slot = rel(q, mono_index.at({i, j}));
            slot = field.add(slot, field.reduce(coef));
        }
    }
    const auto rr = rref(rel);
    std::vector<bool> is_pivot(monomials.size(), false);
    std::map<std::size_t, std::size_t> pivot_row;
    for (std::size_t k = 0; k < rr.rank; ++k) {
        is_pivot[rr.pivots[k]] = true;
        pivot_row[rr.pivots[k]] = k;
    }
    std::vector<std::size_t> free_monos;
    std::map<std::size_t, std::size_t> free_pos;
    for (std::size_t m = 0; m < monomials.size(); ++m)
        if (!is_pivot[m]) {
            free_pos[m] = free_monos.size();
            free_monos.push_back(m);
        }
    const std::size_t s = free_monos.size();
    if (s == 0) throw InputError("m^2 = 0 excluded: the relations kill every quadratic monomial");

    RingPresentation pres;
    pres.field = field;
    pres.e = e;
    pres.s = s;
    pres.names1 = var_names;
    for (auto m : free_monos) {
        auto [i, j] = monomials[m];
        pres.names2.push_back(i == j ? var_names[i] + "^2" : var_names[i] + "*" + var_names[j]);
    }
    pres.mult.assign(e * e * s, 0);
    for (std::size_t m = 0; m < monomials.size(); ++m) {
        auto [i, j] = monomials[m];
        std::vector<Residue> nf(s, 0);
        if (!is_pivot[m]) {
            nf[free_pos[m]] = 1;
        } else {
            const auto row = pivot_row[m];
            for (std::size_t f = 0; f < s; ++f) nf[f] = field.neg(rr.reduced(row, free_monos[f]));
        }
        for (std::size_t t = 0; t < s; ++t) {
            pres.c(i, j, t) = nf[t];
            pres.c(j, i, t) = nf[t];
        }
    }
    return pres;
}

/// e, s, socle dimension r and friends.  The socle is computed inside m as
/// (kernel of V1 -> Hom(V1, V2)) + V2.
inline RingInvariants invariants(const Ring& R) {
    const auto& pres = R.presentation();
    const auto e = R.e(), s = R.s();
    KMatrix pairing(R.field(), e * s, e);
    for (std::size_t j = 0; j < e; ++j)
        for (std::size_t i = 0; i < e; ++i)
            for (std::size_t t = 0; t < s; ++t) pairing(i * s + t, j) = pres.c(i, j, t);
    const auto ker = nullspace_basis(pairing);

    RingInvariants inv;
    inv.e = e;
    inv.s = s;
    inv.length = R.length();
    for (std::size_t k = 0; k < ker.cols(); ++k) {
        auto el = R.zero();
        for (std::size_t i = 0; i < e; ++i) el.coeffs[1 + i] = ker(i, k);
        inv.socle_basis.push_back(std::move(el));
    }
    for (std::size_t t = 0; t < s; ++t) inv.socle_basis.push_back(R.square_basis(t));
    inv.r = inv.socle_basis.size();
    inv.soc_eq_msq = ker.cols() == 0;
    inv.gorenstein = inv.r == 1;
    inv.hilbert = {1, e, s};
    return inv;
}

}  // namespace radcube
