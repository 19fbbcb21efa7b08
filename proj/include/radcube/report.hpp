#pragma once

// Machine-readable (JSON) and plain-text renderings of engine results.
// Key order is fixed and nothing time-dependent is emitted, so equal
// inputs give byte-identical documents.

#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "radcube/recursion.hpp"
#include "radcube/theorems.hpp"

namespace radcube::report {

using Json = nlohmann::ordered_json;

namespace detail {

template <class K, class V>
Json positions(const std::map<K, V>& m, const char* value_key) {
    Json out = Json::array();
    for (const auto& [i, v] : m) out.push_back({{"position", i}, {value_key, v}});
    return out;
}

inline Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace detail

inline Json to_json(const Ring& R, const RingInvariants& inv) {
    Json socle = Json::array();
    for (const auto& a : inv.socle_basis) socle.push_back(R.format(a));
    return {{"p", R.field().modulus()},
            {"e", inv.e},
            {"s", inv.s},
            {"r", inv.r},
            {"length", inv.length},
            {"hilbert", inv.hilbert},
            {"socle_basis", socle},
            {"soc_eq_msq", inv.soc_eq_msq},
            {"gorenstein", inv.gorenstein}};
}

inline Json to_json(const WindowReport& w) {
    return {{"lo", w.lo},
            {"hi", w.hi},
            {"composition_failures", w.composition_failures},
            {"nonminimal", w.nonminimal},
            {"homology", detail::positions(w.homology, "dim")},
            {"acyclic", w.acyclic}};
}

inline Json to_json(const HomologyReport& h) {
    return {{"dual_homology", detail::positions(h.dual_homology, "dim")},
            {"ker_dual", detail::positions(h.ker_dual, "length")},
            {"im_dual", detail::positions(h.im_dual, "length")},
            {"vanishing", h.vanishing},
            {"all_vanish", h.all_vanish()}};
}

/// The window-level summary shared by `construct` and `verify`.
inline Json window_summary(const ChainWindow& W, const WindowReport& w, const HomologyReport& h) {
    return {{"ranks", W.ranks}, {"verify", to_json(w)}, {"dual", to_json(h)}};
}

inline Json checks_json(const Verdict& v) {
    Json checks = Json::array();
    for (const auto& c : v.checks) checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    return checks;
}

inline const char* outcome(const Verdict& v) {
    return !v.hypotheses_met() ? "hypothesis not met" : v.violated() ? "violated" : "holds";
}

inline Json base_json(const Verdict& v) {
    return {{"subject", v.subject},
            {"outcome", outcome(v)},
            {"exit_code", v.exit_code()},
            {"unmet", v.unmet},
            {"notes", v.notes},
            {"checks", checks_json(v)}};
}

inline Json to_json(const TheoremAVerdict& v) {
    auto j = base_json(v);
    j["e"] = v.e;
    j["r"] = v.r;
    j["length"] = v.length;
    j["betti_k"] = v.betti_k;
    j["expected_betti"] = v.expected_betti;
    j["koszul_product"] = v.koszul_product;
    j["vanishing_position"] = detail::optional_int(v.vanishing_position);
    j["bass"] = v.bass;
    j["expected_bass"] = v.expected_bass;
    return j;
}

inline Json to_json(const TheoremBVerdict& v) {
    auto j = base_json(v);
    j["type"] = v.type == TheoremBVerdict::Type::I ? "I" : "II";
    j["kappa"] = detail::optional_int(v.kappa);
    j["a"] = v.a ? Json(*v.a) : Json(nullptr);
    j["ranks"] = v.ranks;
    j["lengths"] = v.lengths;
    j["k_summands"] = v.k_summands;
    return j;
}

inline Json to_json(const TheoremCVerdict& v) {
    auto j = base_json(v);
    Json imps = Json::array();
    for (const auto& i : v.implications) imps.push_back({{"l", i.l}, {"premise", i.premise}, {"holds", i.holds}});
    j["computable"] = v.computable;
    j["H"] = v.H;
    j["equal_ranks"] = v.equal_ranks;
    j["implications"] = imps;
    j["closure"] = v.closure;
    j["closure_full"] = v.closure_full;
    j["dual"] = to_json(v.dual);
    return j;
}

inline Json to_json(const BettiTable& t) { return {{"betti", t.betti}}; }

inline Json to_json(const recursion::Classification& c) {
    Json dv = Json::array();
    for (const auto& [q, val] : c.divisor_values) dv.push_back({{"q", q}, {"value", val}});
    return {{"kind", recursion::to_string(c.kind)}, {"divisor_values", dv}, {"reason", c.reason}};
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ------------------------------------------------------------ plain text

inline std::string render(const Verdict& v) {
    std::ostringstream out;
    out << v.subject << ": " << outcome(v) << "\n";
    for (const auto& u : v.unmet) out << "  hypothesis not met: " << u << "\n";
    for (const auto& n : v.notes) out << "  note: " << n << "\n";
    std::size_t width = 0;
    for (const auto& c : v.checks) width = std::max(width, c.name.size());
    for (const auto& c : v.checks)
        out << "  " << std::left << std::setw(static_cast<int>(width)) << c.name << "  " << std::setw(7)
            << to_string(c.status) << "  " << c.detail << "\n";
    return out.str();
}

inline std::string render(const WindowReport& w, const HomologyReport& h) {
    std::ostringstream out;
    out << "window [" << w.lo << ", " << w.hi << "]\n";
    if (!w.composes()) out << "  d o d != 0 at " << radcube::detail::positions(w.composition_failures) << "\n";
    if (!w.minimal()) out << "  not minimal at " << radcube::detail::positions(w.nonminimal) << "\n";
    out << "  position   ";
    for (const auto& [i, d] : w.homology) out << std::setw(4) << i;
    out << "\n  H(A)       ";
    for (const auto& [i, d] : w.homology) out << std::setw(4) << d;
    out << "\n  H(A*)      ";
    for (const auto& [i, d] : h.dual_homology) out << std::setw(4) << d;
    out << "\n";
    out << "  " << (w.acyclic ? "acyclic on window" : "not acyclic on window") << "; "
        << (h.all_vanish() ? "dual homology zero on window" : "dual homology nonzero on window") << "\n";
    return out.str();
}

inline std::string render_betti(const std::vector<std::size_t>& betti, const std::vector<std::size_t>* ext) {
    std::ostringstream out;
    out << "  i     ";
    for (std::size_t i = 0; i < betti.size(); ++i) out << std::setw(6) << i;
    out << "\n  beta  ";
    for (auto b : betti) out << std::setw(6) << b;
    out << "\n";
    if (ext) {
        out << "  Ext   ";
        for (std::size_t i = 0; i < betti.size() && i < ext->size(); ++i) out << std::setw(6) << (*ext)[i];
        out << "\n";
    }
    return out.str();
}

}  // namespace radcube::report
