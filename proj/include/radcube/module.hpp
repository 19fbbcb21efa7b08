#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "radcube/ring.hpp"

namespace radcube {

/// A b0 x b1 matrix of ring elements, i.e. the map R^b1 -> R^b0 on column
/// vectors.  Entries are row-major.
struct RModuleMap {
    std::size_t target_rank = 0;
    std::size_t source_rank = 0;
    std::vector<RingElement> entries;

    static RModuleMap zero(const Ring& R, std::size_t target, std::size_t source) {
        return {target, source, std::vector<RingElement>(target * source, R.zero())};
    }

    [[nodiscard]] const RingElement& at(std::size_t r, std::size_t c) const { return entries[r * source_rank + c]; }
    RingElement& at(std::size_t r, std::size_t c) { return entries[r * source_rank + c]; }

    friend bool operator==(const RModuleMap&, const RModuleMap&) = default;
};

/// Every entry lies in m.
inline bool is_minimal(const RModuleMap& f) {
    for (const auto& a : f.entries)
        if (Ring::is_unit(a)) return false;
    return true;
}

/// Hom(f, R): the transpose.
inline RModuleMap dual_map(const RModuleMap& f) {
    RModuleMap t{f.source_rank, f.target_rank, {}};
    t.entries.reserve(f.entries.size());
    for (std::size_t r = 0; r < t.target_rank; ++r)
        for (std::size_t c = 0; c < t.source_rank; ++c) t.entries.push_back(f.at(c, r));
    return t;
}

/// f o g
inline RModuleMap compose(const Ring& R, const RModuleMap& f, const RModuleMap& g) {
    if (f.source_rank != g.target_rank) throw InputError("compose: shape mismatch");
    auto out = RModuleMap::zero(R, f.target_rank, g.source_rank);
    std::vector<std::vector<std::size_t>> g_row(g.target_rank);  // nonzero columns of each row of g
    for (std::size_t k = 0; k < g.target_rank; ++k)
        for (std::size_t j = 0; j < g.source_rank; ++j)
            if (!R.is_zero(g.at(k, j))) g_row[k].push_back(j);
    for (std::size_t i = 0; i < f.target_rank; ++i)
        for (std::size_t k = 0; k < f.source_rank; ++k) {
            if (R.is_zero(f.at(i, k))) continue;
            for (auto j : g_row[k]) out.at(i, j) = R.add(out.at(i, j), R.mul(f.at(i, k), g.at(k, j)));
        }
    return out;
}

/// Block matrix: block (r, c) is the multiplication matrix of entry (r, c).
/// Free-module coordinates are (block index) * length(R) + (basis index).
inline KMatrix to_kmatrix(const Ring& R, const RModuleMap& f) {
    const std::size_t L = R.length();
    KMatrix m(R.field(), f.target_rank * L, f.source_rank * L);
    for (std::size_t r = 0; r < f.target_rank; ++r)
        for (std::size_t c = 0; c < f.source_rank; ++c) {
            const auto& a = f.at(r, c);
            if (R.is_zero(a)) continue;
            const auto block = R.mult_matrix(a);
            for (std::size_t u = 0; u < L; ++u)
                for (std::size_t v = 0; v < L; ++v) m(r * L + u, c * L + v) = block(u, v);
        }
    return m;
}

/// The presentation [x_1 ... x_e] of the residue field.
inline RModuleMap residue_field_presentation(const Ring& R) {
    RModuleMap f{1, R.e(), {}};
    for (std::size_t i = 0; i < R.e(); ++i) f.entries.push_back(R.var(i));
    return f;
}

namespace detail {

/// Multiplication matrices of the maximal-ideal basis x_1..x_e, y_1..y_s.
inline std::vector<KMatrix> max_ideal_operators(const Ring& R) {
    std::vector<KMatrix> ops;
    for (std::size_t u = 1; u < R.length(); ++u) ops.push_back(R.mult_matrix(R.basis(u)));
    return ops;
}

/// Applies a length(R) x length(R) operator blockwise to a free-module vector.
inline KVector act_blockwise(const KMatrix& op, const KVector& v) {
    const std::size_t L = op.rows();
    const std::uint64_t p = op.field().modulus();
    const bool small = p < (std::uint64_t{1} << 28);  // L products of size p^2 then fit in 64 bits
    KVector out(v.size(), 0);
    for (std::size_t b = 0; b * L < v.size(); ++b) {
        const Residue* vb = v.data() + b * L;
        if (std::all_of(vb, vb + L, [](Residue x) { return x == 0; })) continue;
        for (std::size_t u = 0; u < L; ++u) {
            std::uint64_t acc = 0;
            for (std::size_t w = 0; w < L; ++w) {
                if (vb[w] == 0) continue;
                acc += std::uint64_t{op(u, w)} * vb[w];
                if (!small) acc %= p;
            }
            out[b * L + u] = static_cast<Residue>(acc % p);
        }
    }
    return out;
}

inline std::vector<RingElement> split_blocks(const Ring& R, const KVector& v) {
    const std::size_t L = R.length();
    std::vector<RingElement> out;
    for (std::size_t b = 0; b * L < v.size(); ++b)
        out.push_back(RingElement{std::vector<Residue>(v.begin() + static_cast<std::ptrdiff_t>(b * L),
                                                       v.begin() + static_cast<std::ptrdiff_t>((b + 1) * L))});
    return out;
}

inline std::vector<KVector> columns_of(const KMatrix& m) {
    std::vector<KVector> out;
    out.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.column(c));
    return out;
}

}  // namespace detail

/// Explicit k-realization of an R-module: the action operators of x_1..x_e
/// (and the derived y_1..y_s) on a k-space of dimension `dim`.
struct KModule {
    PrimeField field;
    std::size_t dim = 0;
    std::vector<KMatrix> deg1;
    std::vector<KMatrix> deg2;
    std::size_t msub_dim = 0;   // rank_k mM
    std::size_t socle_dim = 0;  // rank_k Soc M

    /// Minimal number of generators, dim - rank_k mM.
    [[nodiscard]] std::size_t gens() const noexcept { return dim - msub_dim; }
    [[nodiscard]] std::size_t length() const noexcept { return dim; }

    /// Builds the module from the degree-1 operators; degree-2 operators are
    /// the structure-constant combinations of products of those.
    static KModule from_actions(const Ring& R, std::vector<KMatrix> xs, std::size_t dim) {
        if (xs.size() != R.e()) throw InputError("KModule needs one operator per degree-1 variable");
        for (const auto& x : xs)
            if (x.rows() != dim || x.cols() != dim) throw InputError("KModule operator has wrong shape");
        KModule M;
        M.field = R.field();
        M.dim = dim;
        M.deg1 = std::move(xs);
        for (const auto& terms : R.square_expressions()) {
            KMatrix y(R.field(), dim, dim);
            for (const auto& t : terms) y = y + (M.deg1[t.i] * M.deg1[t.j]).scaled(t.coef);
            M.deg2.push_back(std::move(y));
        }
        if (dim == 0) return M;
        if (!M.deg1.empty()) {
            M.msub_dim = rank(KMatrix::hstack(M.deg1, M.field, dim));
            M.socle_dim = nullity(KMatrix::vstack(M.deg1, M.field, dim));
        } else {
            M.socle_dim = dim;
        }
        return M;
    }

    /// Socle basis: joint kernel of the degree-1 operators.
    [[nodiscard]] KMatrix socle_basis() const {
        if (deg1.empty()) return KMatrix::identity(field, dim);
        return nullspace_basis(KMatrix::vstack(deg1, field, dim));
    }

    /// m^2 M = 0, i.e. every degree-2 operator vanishes.
    [[nodiscard]] bool msq_annihilates() const {
        for (const auto& y : deg2)
            if (!y.is_zero()) return false;
        return true;
    }
};

/// Consistency of a KModule's operators with the ring; empty means consistent.
inline std::vector<std::string> validate_actions(const Ring& R, const KModule& M) {
    std::vector<std::string> out;
    const auto& pres = R.presentation();
    const auto e = R.e(), s = R.s();
    for (std::size_t i = 0; i < e; ++i)
        for (std::size_t j = 0; j < e; ++j) {
            const auto xij = M.deg1[i] * M.deg1[j];
            if (i < j && !(xij == M.deg1[j] * M.deg1[i]))
                out.push_back("x" + std::to_string(i + 1) + " and x" + std::to_string(j + 1) + " do not commute");
            KMatrix comb(M.field, M.dim, M.dim);
            for (std::size_t t = 0; t < s; ++t) comb = comb + M.deg2[t].scaled(pres.c(i, j, t));
            if (!(xij == comb)) out.push_back("x_i x_j disagrees with structure constants");
            for (std::size_t k = 0; k < e; ++k)
                if (!(xij * M.deg1[k]).is_zero()) {
                    out.emplace_back("triple product of degree-1 actions is nonzero");
                    return out;
                }
        }
    return out;
}

/// R^b as a KModule.
inline KModule free_module(const Ring& R, std::size_t b) {
    const std::size_t L = R.length();
    std::vector<KMatrix> xs;
    for (std::size_t i = 0; i < R.e(); ++i) {
        const auto op = R.mult_matrix(R.var(i));
        KMatrix big(R.field(), b * L, b * L);
        for (std::size_t k = 0; k < b; ++k)
            for (std::size_t u = 0; u < L; ++u)
                for (std::size_t v = 0; v < L; ++v) big(k * L + u, k * L + v) = op(u, v);
        xs.push_back(std::move(big));
    }
    return KModule::from_actions(R, std::move(xs), b * L);
}

/// Repeatedly pivots on a unit entry, deleting its row and column.  The
/// cokernel is unchanged up to isomorphism.
inline RModuleMap minimalize(const Ring& R, RModuleMap P) {
    for (;;) {
        std::size_t pi = P.target_rank, pj = P.source_rank;
        for (std::size_t r = 0; r < P.target_rank && pi == P.target_rank; ++r)
            for (std::size_t c = 0; c < P.source_rank; ++c)
                if (Ring::is_unit(P.at(r, c))) {
                    pi = r;
                    pj = c;
                    break;
                }
        if (pi == P.target_rank) return P;
        // u^{-1} for a unit u = u0 + n: u0^{-1}(1 - n/u0 + (n/u0)^2)
        const auto& u = P.at(pi, pj);
        const Residue inv0 = R.field().inv(u.coeffs[0]);
        auto nrm = R.scale(u, inv0);
        nrm.coeffs[0] = 0;
        auto uinv = R.sub(R.one(), nrm);
        uinv = R.add(uinv, R.mul(nrm, nrm));
        uinv = R.scale(uinv, inv0);

        RModuleMap Q{P.target_rank - 1, P.source_rank - 1, {}};
        for (std::size_t r = 0; r < P.target_rank; ++r) {
            if (r == pi) continue;
            const auto factor = R.mul(P.at(r, pj), uinv);
            for (std::size_t c = 0; c < P.source_rank; ++c) {
                if (c == pj) continue;
                Q.entries.push_back(R.sub(P.at(r, c), R.mul(factor, P.at(pi, c))));
            }
        }
        P = std::move(Q);
    }
}

/// Minimal generators of the submodule U of R^b spanned (over k) by `span`.
/// Generators are chosen greedily in the given order among vectors not in
/// mU + (earlier choices).
inline RModuleMap minimal_generators(const Ring& R, std::size_t b, const std::vector<KVector>& span) {
    const std::size_t N = b * R.length();
    const auto ops = detail::max_ideal_operators(R);
    SubspaceBasis acc(R.field(), N);
    for (std::size_t i = 0; i < R.e(); ++i)
        for (const auto& v : span) acc.add(detail::act_blockwise(ops[i], v));
    std::vector<KVector> chosen;
    for (const auto& v : span)
        if (acc.add(v)) chosen.push_back(v);
    RModuleMap G{b, chosen.size(), std::vector<RingElement>(b * chosen.size(), R.zero())};
    for (std::size_t c = 0; c < chosen.size(); ++c) {
        auto blocks = detail::split_blocks(R, chosen[c]);
        for (std::size_t r = 0; r < b; ++r) G.at(r, c) = std::move(blocks[r]);
    }
    return G;
}

/// Minimal generating matrix of Ker f, lifted greedily from the canonical
/// nullspace basis.
inline RModuleMap syzygy_step(const Ring& R, const RModuleMap& f) {
    const auto K = nullspace_basis(to_kmatrix(R, f));
    return minimal_generators(R, f.source_rank, detail::columns_of(K));
}

/// Drops columns of P that are redundant generators of Im P (keeps a
/// minimal generating subset, earliest columns first).
inline RModuleMap trim_relations(const Ring& R, const RModuleMap& P) {
    const std::size_t L = R.length();
    const auto K = to_kmatrix(R, P);
    SubspaceBasis acc(R.field(), P.target_rank * L);
    for (std::size_t c = 0; c < P.source_rank; ++c)
        for (std::size_t u = 1; u < L; ++u) acc.add(K.column(c * L + u));
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < P.source_rank; ++c)
        if (acc.add(K.column(c * L))) keep.push_back(c);
    if (keep.size() == P.source_rank) return P;
    RModuleMap out{P.target_rank, keep.size(), {}};
    for (std::size_t r = 0; r < P.target_rank; ++r)
        for (auto c : keep) out.entries.push_back(P.at(r, c));
    return out;
}

/// R^b0 / Im P as an explicit k-space with induced actions.  The basis is the
/// set of free-module coordinates that are not pivots of Im P.
inline KModule coker_realize(const Ring& R, const RModuleMap& P) {
    const std::size_t L = R.length();
    const std::size_t N = P.target_rank * L;
    SubspaceBasis img(R.field(), N);
    if (P.source_rank > 0) {
        const auto K = to_kmatrix(R, P);
        for (std::size_t c = 0; c < K.cols(); ++c) img.add(K.column(c));
    }
    std::vector<bool> is_pivot(N, false);
    for (auto pv : img.pivots()) is_pivot[pv] = true;
    std::vector<std::size_t> basis;
    std::vector<std::size_t> pos(N, 0);
    for (std::size_t j = 0; j < N; ++j)
        if (!is_pivot[j]) {
            pos[j] = basis.size();
            basis.push_back(j);
        }
    const std::size_t d = basis.size();
    std::vector<KMatrix> xs;
    for (std::size_t i = 0; i < R.e(); ++i) {
        const auto op = R.mult_matrix(R.var(i));
        KMatrix X(R.field(), d, d);
        for (std::size_t k = 0; k < d; ++k) {
            KVector v(N, 0);
            v[basis[k]] = 1;
            v = detail::act_blockwise(op, v);
            img.reduce(v);
            for (std::size_t j = 0; j < N; ++j)
                if (v[j]) X(pos[j], k) = v[j];
        }
        xs.push_back(std::move(X));
    }
    return KModule::from_actions(R, std::move(xs), d);
}

/// The submodule of R^b with k-basis `span` (independent or not), realized on
/// an echelon basis of it.
inline KModule submodule_realize(const Ring& R, std::size_t b, const std::vector<KVector>& span) {
    const std::size_t N = b * R.length();
    SubspaceBasis U(R.field(), N);
    for (const auto& v : span) U.add(v);
    const std::size_t d = U.dim();
    std::vector<KMatrix> xs;
    for (std::size_t i = 0; i < R.e(); ++i) {
        const auto op = R.mult_matrix(R.var(i));
        KMatrix X(R.field(), d, d);
        for (std::size_t k = 0; k < d; ++k) {
            auto v = detail::act_blockwise(op, U.rows()[k]);
            const auto coords = U.coordinates(v);
            for (std::size_t j = 0; j < d; ++j) X(j, k) = coords[j];
        }
        xs.push_back(std::move(X));
    }
    return KModule::from_actions(R, std::move(xs), d);
}

/// k-linear dual with transposed actions (Hom_k(M, k)).
inline KModule matlis_dual(const Ring& R, const KModule& M) {
    std::vector<KMatrix> xs;
    for (const auto& x : M.deg1) xs.push_back(x.transpose());
    return KModule::from_actions(R, std::move(xs), M.dim);
}

/// k is a direct summand of M  <=>  Soc M is not contained in mM.
inline bool has_k_summand(const KModule& M) {
    if (M.socle_dim == 0) return false;
    const auto soc = M.socle_basis();
    std::vector<KMatrix> blocks{soc};
    for (const auto& x : M.deg1) blocks.push_back(x);
    const std::size_t sum_dim = rank(KMatrix::hstack(blocks, M.field, M.dim));
    const std::size_t meet = M.socle_dim + M.msub_dim - sum_dim;
    return meet < M.socle_dim;
}

namespace detail {

/// Surjection R^b -> M onto greedily chosen minimal generators; returns the
/// k-basis of its kernel (the first syzygy) and b.
inline std::pair<std::size_t, std::vector<KVector>> generator_kernel(const Ring& R, const KModule& M) {
    const std::size_t L = R.length();
    SubspaceBasis acc(M.field, M.dim);
    for (const auto& x : M.deg1)
        for (std::size_t j = 0; j < M.dim; ++j) acc.add(x.column(j));
    std::vector<std::size_t> gens;
    for (std::size_t j = 0; j < M.dim; ++j) {
        KVector v(M.dim, 0);
        v[j] = 1;
        if (acc.add(v)) gens.push_back(j);
    }
    const std::size_t b = gens.size();
    KMatrix phi(M.field, M.dim, b * L);
    for (std::size_t c = 0; c < b; ++c) {
        for (std::size_t u = 0; u < L; ++u) {
            KVector g(M.dim, 0);
            g[gens[c]] = 1;
            if (u >= 1 && u <= R.e()) g = M.deg1[u - 1].apply(g);
            if (u > R.e()) g = M.deg2[u - 1 - R.e()].apply(g);
            for (std::size_t r = 0; r < M.dim; ++r) phi(r, c * L + u) = g[r];
        }
    }
    return {b, columns_of(nullspace_basis(phi))};
}

}  // namespace detail

/// A minimal presentation matrix of M (coker of it is isomorphic to M).
inline RModuleMap presentation_of(const Ring& R, const KModule& M) {
    auto [b, K] = detail::generator_kernel(R, M);
    return minimal_generators(R, b, K);
}

/// The first syzygy of M as a KModule.
inline KModule first_syzygy(const Ring& R, const KModule& M) {
    auto [b, K] = detail::generator_kernel(R, M);
    return submodule_realize(R, b, K);
}

struct BettiTable {
    std::vector<std::size_t> betti;
    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

struct Resolution {
    BettiTable table;
    std::vector<RModuleMap> differentials;  // d_1 .. d_n
    std::size_t trimmed_relations = 0;       // redundant columns dropped from P
};

/// Minimal free resolution to homological degree n.  d_1 is P with
/// redundant relations removed; d_{i+1} = syzygy_step(d_i).
inline Resolution resolve(const Ring& R, const RModuleMap& P, int n) {
    if (n < 0) throw InputError("resolve: negative length");
    if (!is_minimal(P)) throw InputError("resolve: presentation is not minimal (unit entry); minimalize it first");
    Resolution out;
    out.table.betti.push_back(P.target_rank);
    if (n == 0) return out;
    auto d = trim_relations(R, P);
    out.trimmed_relations = P.source_rank - d.source_rank;
    for (int i = 1; i <= n; ++i) {
        out.table.betti.push_back(d.source_rank);
        out.differentials.push_back(d);
        if (i < n) d = syzygy_step(R, d);
    }
    return out;
}

/// dim_k Ext^i(M, R) for i = 0..n-1, from the dualized resolution.
inline std::vector<std::size_t> ext_dims_from(const Ring& R, const Resolution& res, int n) {
    if (n < 1) throw InputError("ext_dims: need n >= 1");
    if (static_cast<int>(res.differentials.size()) < n) throw InputError("ext_dims: resolution too short");
    std::vector<std::size_t> out;
    std::size_t prev_rank = 0;  // rank of d_i^T
    for (int i = 0; i < n; ++i) {
        const auto dt = to_kmatrix(R, dual_map(res.differentials[static_cast<std::size_t>(i)]));
        const std::size_t rk = rank(dt);
        out.push_back(dt.cols() - rk - prev_rank);
        prev_rank = rk;
    }
    return out;
}

inline std::vector<std::size_t> ext_dims(const Ring& R, const RModuleMap& P, int n) {
    if (n < 1) throw InputError("ext_dims: need n >= 1");
    return ext_dims_from(R, resolve(R, P, n), n);
}

struct StarResult {
    KModule module;             // M* = Ker(P^T) inside R^b0
    RModuleMap generator_map;   // R^c -> R^b0, minimal generators of M*
};

inline StarResult star(const Ring& R, const RModuleMap& P) {
    const auto Pt = dual_map(P);
    const auto K = detail::columns_of(nullspace_basis(to_kmatrix(R, Pt)));
    return {submodule_realize(R, P.target_rank, K), minimal_generators(R, P.target_rank, K)};
}

}  // namespace radcube
