#pragma once

// Example rings shipped with the tool.  The same texts live under catalog/
// in the source tree; the test suite keeps the two in sync.

#include <string>
#include <vector>

#include "radcube/parse.hpp"

namespace radcube {

struct CatalogModule {
    std::string name;
    std::string text;
};

struct CatalogEntry {
    std::string name;
    std::string ring_text;
    std::vector<CatalogModule> modules;
    // expected invariants
    std::size_t e = 0, s = 0, r = 0, length = 0;
    bool soc_eq_msq = false;
    std::string note;

    [[nodiscard]] Ring ring() const { return io::parse_ring(ring_text, "catalog:" + name); }
    [[nodiscard]] RModuleMap module(const Ring& R, const std::string& m) const {
        for (const auto& cm : modules)
            if (cm.name == m) return io::parse_module(R, cm.text, "catalog:" + name + "/" + m);
        throw InputError("catalog entry " + name + " has no module '" + m + "'");
    }
};

inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries{
        {"E1",
         "# k[x]/(x^3)\np = 5\nvars = x\nrelations =\n",
         {{"k", "rows = 1\ncols = 1\nrow = x\n"}, {"x2", "rows = 1\ncols = 1\nrow = x^2\n"}},
         1, 1, 1, 3, true,
         "Gorenstein, e = 1"},
        {"R1",
         "# k[x,y]/(x^2, y^2)\np = 5\nvars = x, y\nrelations = x^2, y^2\n",
         {{"k", "rows = 1\ncols = 2\nrow = x, y\n"}, {"x", "rows = 1\ncols = 1\nrow = x\n"}},
         2, 1, 1, 4, true,
         "Gorenstein, e = 2"},
        {"R4",
         "# k[x,y,z]/(x^2, xy, y^2, z^2)\np = 5\nvars = x, y, z\nrelations = x^2, x*y, y^2, z^2\n",
         {{"k", "rows = 1\ncols = 3\nrow = x, y, z\n"},
          {"x+z", "rows = 1\ncols = 1\nrow = x + z\n"},
          {"x-z", "rows = 1\ncols = 1\nrow = x - z\n"}},
         3, 2, 2, 6, true,
         "Soc R = m^2, e = r + 1; x+z and x-z are exact zero divisors"},
        {"RS",
         "# k[x,y]/(xy, y^2), cut off at m^3\np = 5\nvars = x, y\nrelations = x*y, y^2\n",
         {{"k", "rows = 1\ncols = 2\nrow = x, y\n"}},
         2, 1, 2, 4, false,
         "Soc R != m^2: y is a socle element of degree 1"},
        {"G3",
         "# k[x,y,z]/(x^2 - y^2, y^2 - z^2, xy, yz)\np = 5\nvars = x, y, z\nrelations = x^2 - y^2, y^2 - z^2, x*y, y*z\n",
         {{"k", "rows = 1\ncols = 3\nrow = x, y, z\n"}},
         3, 2, 2, 6, true,
         "flagged: not Gorenstein (r = 2); adding xz gives G3xz"},
        {"G3xz",
         "# k[x,y,z]/(x^2 - y^2, y^2 - z^2, xy, yz, xz)\np = 5\nvars = x, y, z\n"
         "relations = x^2 - y^2, y^2 - z^2, x*y, y*z, x*z\n",
         {{"k", "rows = 1\ncols = 3\nrow = x, y, z\n"}, {"x", "rows = 1\ncols = 1\nrow = x\n"}},
         3, 1, 1, 5, true,
         "flagged: G3 with xz added, Hilbert function (1, 3, 1), Gorenstein"},
    };
    return entries;
}

inline const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& c : catalog())
        if (c.name == name) return c;
    throw InputError("no catalog entry named '" + name + "'");
}

}  // namespace radcube
