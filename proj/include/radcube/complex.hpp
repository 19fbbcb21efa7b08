#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "radcube/module.hpp"

namespace radcube {

/// A slice A_lo .. A_hi of a complex of free modules.  diffs[i - lo - 1] is
/// the differential d_i : A_i -> A_{i-1}, for lo < i <= hi.
struct ChainWindow {
    int lo = 0;
    int hi = 0;
    std::vector<std::size_t> ranks;
    std::vector<RModuleMap> diffs;

    [[nodiscard]] std::size_t rank_at(int i) const { return ranks.at(static_cast<std::size_t>(i - lo)); }
    [[nodiscard]] const RModuleMap& d(int i) const { return diffs.at(static_cast<std::size_t>(i - lo - 1)); }

    friend bool operator==(const ChainWindow&, const ChainWindow&) = default;
};

/// Throws InputError unless ranks and differential shapes line up.
inline void check_shape(const ChainWindow& W) {
    if (W.lo >= W.hi) throw InputError("window needs lo < hi");
    const auto n = static_cast<std::size_t>(W.hi - W.lo);
    if (W.ranks.size() != n + 1)
        throw InputError("window [" + std::to_string(W.lo) + ", " + std::to_string(W.hi) + "] needs " +
                         std::to_string(n + 1) + " ranks, got " + std::to_string(W.ranks.size()));
    if (W.diffs.size() != n) throw InputError("window needs " + std::to_string(n) + " differentials");
    for (int i = W.lo + 1; i <= W.hi; ++i) {
        const auto& f = W.d(i);
        if (f.source_rank != W.rank_at(i) || f.target_rank != W.rank_at(i - 1))
            throw InputError("differential " + std::to_string(i) + " is " + std::to_string(f.target_rank) + "x" +
                             std::to_string(f.source_rank) + ", expected " + std::to_string(W.rank_at(i - 1)) + "x" +
                             std::to_string(W.rank_at(i)));
        if (f.entries.size() != f.target_rank * f.source_rank)
            throw InputError("differential " + std::to_string(i) + " has wrong entry count");
    }
}

/// Window of the map sequence ..., f_lo+1, ..., f_hi with ranks read off the maps.
inline ChainWindow window_from_maps(int lo, std::vector<RModuleMap> diffs) {
    if (diffs.empty()) throw InputError("window needs at least one differential");
    ChainWindow W{lo, lo + static_cast<int>(diffs.size()), {}, std::move(diffs)};
    W.ranks.push_back(W.diffs.front().target_rank);
    for (const auto& f : W.diffs) W.ranks.push_back(f.source_rank);
    check_shape(W);
    return W;
}

/// Block-diagonal sum of two windows over the same range.
inline ChainWindow direct_sum(const Ring& R, const ChainWindow& A, const ChainWindow& B) {
    if (A.lo != B.lo || A.hi != B.hi) throw InputError("direct_sum: windows cover different ranges");
    std::vector<RModuleMap> ds;
    for (int i = A.lo + 1; i <= A.hi; ++i) {
        const auto &f = A.d(i), &g = B.d(i);
        auto h = RModuleMap::zero(R, f.target_rank + g.target_rank, f.source_rank + g.source_rank);
        for (std::size_t r = 0; r < f.target_rank; ++r)
            for (std::size_t c = 0; c < f.source_rank; ++c) h.at(r, c) = f.at(r, c);
        for (std::size_t r = 0; r < g.target_rank; ++r)
            for (std::size_t c = 0; c < g.source_rank; ++c)
                h.at(f.target_rank + r, f.source_rank + c) = g.at(r, c);
        ds.push_back(std::move(h));
    }
    ChainWindow W{A.lo, A.hi, {}, std::move(ds)};
    for (std::size_t k = 0; k < A.ranks.size(); ++k) W.ranks.push_back(A.ranks[k] + B.ranks[k]);
    return W;
}

namespace detail {

/// dim Ker g - dim(Ker g cap Im f) for k-matrices with g f defined; this is
/// the homology dimension when g f = 0 and stays meaningful otherwise.
inline std::size_t homology_dim(const KMatrix& g, const KMatrix& f) {
    return nullity(g) - rank(f) + rank(g * f);
}

}  // namespace detail

struct WindowReport {
    int lo = 0;
    int hi = 0;
    std::vector<int> composition_failures;   // i with d_i o d_{i+1} != 0
    std::vector<int> nonminimal;             // i with a unit entry in d_i
    std::map<int, std::size_t> homology;     // interior positions lo+1 .. hi-1
    bool acyclic = false;                    // on window, and d d = 0

    [[nodiscard]] bool composes() const { return composition_failures.empty(); }
    [[nodiscard]] bool minimal() const { return nonminimal.empty(); }
};

inline WindowReport verify_window(const Ring& R, const ChainWindow& W) {
    check_shape(W);
    WindowReport out{W.lo, W.hi, {}, {}, {}, false};
    std::vector<KMatrix> K;
    for (int i = W.lo + 1; i <= W.hi; ++i) {
        if (!is_minimal(W.d(i))) out.nonminimal.push_back(i);
        K.push_back(to_kmatrix(R, W.d(i)));
    }
    for (int i = W.lo + 1; i < W.hi; ++i) {
        const auto& di = K[static_cast<std::size_t>(i - W.lo - 1)];
        const auto& dn = K[static_cast<std::size_t>(i - W.lo)];
        if (!(di * dn).is_zero()) out.composition_failures.push_back(i);
        out.homology[i] = detail::homology_dim(di, dn);
    }
    out.acyclic = out.composes();
    for (const auto& [i, h] : out.homology)
        if (h != 0) out.acyclic = false;
    return out;
}

/// Cohomology of the dual, with H_i(A*) = Ker d*_{i+1} / Im d*_i, plus the
/// k-lengths of kernel and image of each d*_i : A*_{i-1} -> A*_i.
struct HomologyReport {
    std::map<int, std::size_t> dual_homology;  // h^i, lo+1 <= i <= hi-1
    std::map<int, std::size_t> ker_dual;       // l(Ker d*_i), lo+1 <= i <= hi
    std::map<int, std::size_t> im_dual;        // l(Im d*_i)
    std::vector<int> vanishing;                // the positions with h^i = 0

    [[nodiscard]] bool all_vanish() const { return vanishing.size() == dual_homology.size(); }
};

inline HomologyReport homology_of_dual(const Ring& R, const ChainWindow& W) {
    check_shape(W);
    HomologyReport out;
    std::vector<KMatrix> D;
    for (int i = W.lo + 1; i <= W.hi; ++i) {
        D.push_back(to_kmatrix(R, dual_map(W.d(i))));
        const std::size_t rk = rank(D.back());
        out.im_dual[i] = rk;
        out.ker_dual[i] = D.back().cols() - rk;
    }
    for (int i = W.lo + 1; i < W.hi; ++i) {
        const auto h = detail::homology_dim(D[static_cast<std::size_t>(i - W.lo)], D[static_cast<std::size_t>(i - W.lo - 1)]);
        out.dual_homology[i] = h;
        if (h == 0) out.vanishing.push_back(i);
    }
    return out;
}

struct CokernelSummary {
    int position = 0;
    KModule module;  // C_i = Coker d_{i+1}
    std::size_t s = 0;
    std::size_t length = 0;
    bool k_summand = false;
};

struct CokernelReport {
    std::vector<CokernelSummary> entries;  // positions lo .. hi-1
    std::optional<int> kappa;              // (least i with k | C_i) - 1

    [[nodiscard]] const CokernelSummary& at(int i) const {
        for (const auto& c : entries)
            if (c.position == i) return c;
        throw InputError("no cokernel at position " + std::to_string(i));
    }
};

inline CokernelReport cokernels(const Ring& R, const ChainWindow& W) {
    check_shape(W);
    CokernelReport out;
    for (int i = W.lo; i < W.hi; ++i) {
        CokernelSummary c;
        c.position = i;
        c.module = coker_realize(R, W.d(i + 1));
        c.s = c.module.msub_dim;
        c.length = c.module.dim;
        c.k_summand = has_k_summand(c.module);
        if (c.k_summand && !out.kappa) out.kappa = i - 1;
        out.entries.push_back(std::move(c));
    }
    return out;
}

struct Construction {
    ChainWindow window;
    WindowReport verify;
    HomologyReport dual;
    std::vector<std::size_t> ext;  // dim Ext^i(M, R), i = 0 .. n+1
    std::vector<std::size_t> betti;
};

/// Splices the dualized resolution of M = Coker P with a resolution of M*:
///
///   A_{-i} = P_i^*   (d_{-i+1} = transpose of the i-th resolution map)
///   A_1 -> A_0       minimal generators of M* = Ker(P^T)
///   A_{j+1} -> A_j   syzygies of the previous map
///
/// over the window [-n, n].  Ext^i(M, R) must vanish for 1 <= i <= n+1.
inline Construction construct_from_module(const Ring& R, const RModuleMap& P, int n) {
    if (n < 1) throw InputError("construct: half-window must be >= 1");
    if (!is_minimal(P)) throw InputError("construct: presentation is not minimal");
    if (P.target_rank == 0) throw HypothesisError("construct: module is zero");
    const auto d1 = trim_relations(R, P);
    if (d1.source_rank == 0) throw HypothesisError("construct: module is free, construction degenerates");

    const auto res = resolve(R, d1, n + 2);
    Construction out;
    out.betti = res.table.betti;
    out.ext = ext_dims_from(R, res, n + 2);
    for (std::size_t i = 1; i < out.ext.size(); ++i)
        if (out.ext[i] != 0)
            throw HypothesisError("construct: Ext^" + std::to_string(i) + "(M,R) != 0 (dim " +
                                  std::to_string(out.ext[i]) + ")");

    std::vector<RModuleMap> ds;
    for (int j = -n + 1; j <= 0; ++j) ds.push_back(dual_map(res.differentials[static_cast<std::size_t>(-j)]));
    auto g = star(R, d1).generator_map;
    for (int j = 1; j <= n; ++j) {
        if (j > 1) g = syzygy_step(R, g);
        ds.push_back(g);
    }
    out.window = window_from_maps(-n, std::move(ds));
    out.verify = verify_window(R, out.window);
    out.dual = homology_of_dual(R, out.window);
    return out;
}

}  // namespace radcube
