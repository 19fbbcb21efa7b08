#pragma once

// Hand-assembled windows used as fixtures.

#include "radcube/complex.hpp"
#include "support/rings.hpp"

namespace radcube::testing {

inline RingElement r4_x_plus_z(const Ring& R) { return elem(R, {{1, 1}, {3, 1}}); }
inline RingElement r4_x_minus_z(const Ring& R) { return elem(R, {{1, 1}, {3, -1}}); }

/// ... x+z, x-z, x+z ... over R4; d_i = x+z for even i.
inline ChainWindow alternating_window(const Ring& R, int lo, int hi) {
    std::vector<RModuleMap> ds;
    for (int i = lo + 1; i <= hi; ++i) ds.push_back(matrix1x1(i % 2 == 0 ? r4_x_plus_z(R) : r4_x_minus_z(R)));
    return window_from_maps(lo, std::move(ds));
}

/// Every differential is [a].
inline ChainWindow constant_window(const RingElement& a, int lo, int hi) {
    return window_from_maps(lo, std::vector<RModuleMap>(static_cast<std::size_t>(hi - lo), matrix1x1(a)));
}

/// The minimal resolution of k placed with F_0 at `start`; zero modules
/// below it.  Not acyclic at `start`.
inline ChainWindow k_resolution_window(const Ring& R, int lo, int hi, int start) {
    const auto res = resolve(R, residue_field_presentation(R), hi - start);
    std::vector<RModuleMap> ds;
    for (int i = lo + 1; i <= hi; ++i) {
        if (i < start) ds.push_back(RModuleMap{0, 0, {}});
        else if (i == start) ds.push_back(RModuleMap{0, 1, {}});
        else ds.push_back(res.differentials[static_cast<std::size_t>(i - start - 1)]);
    }
    return window_from_maps(lo, std::move(ds));
}

/// (x+z, x-z) alternation on the left of 0 spliced with (y+z, y-z) on the
/// right.  The dual is exact at -1 and 1 but not at 0; the primal side fails
/// d o d = 0 at the junction.
inline ChainWindow spliced_window(const Ring& R, int lo, int hi) {
    std::vector<RModuleMap> ds;
    for (int i = lo + 1; i <= hi; ++i) {
        if (i <= 0) ds.push_back(matrix1x1(i % 2 == 0 ? r4_x_plus_z(R) : r4_x_minus_z(R)));
        else ds.push_back(matrix1x1(i % 2 != 0 ? elem(R, {{2, 1}, {3, 1}}) : elem(R, {{2, 1}, {3, -1}})));
    }
    return window_from_maps(lo, std::move(ds));
}

}  // namespace radcube::testing
