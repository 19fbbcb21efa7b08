// radcube command-line front end.
//
// Exit codes: 0 all checked properties hold, 1 a property is violated,
// 2 invalid input or an unmet hypothesis.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "radcube/radcube.hpp"

namespace {

using namespace radcube;
using report::Json;

constexpr int kOk = 0, kViolated = 1, kInvalid = 2;

Ring load_ring(const std::string& arg) {
    if (arg.rfind("catalog:", 0) == 0) return catalog_entry(arg.substr(8)).ring();
    return io::parse_ring(io::read_file(arg), arg);
}

RModuleMap load_module(const Ring& R, const std::string& arg) {
    if (arg.rfind("catalog:", 0) == 0) {
        const auto rest = arg.substr(8);
        const auto slash = rest.find('/');
        if (slash == std::string::npos) throw InputError("module reference must look like catalog:RING/MODULE");
        const auto& entry = catalog_entry(rest.substr(0, slash));
        if (!(entry.ring() == R)) throw InputError(arg + " belongs to a different ring");
        return entry.module(R, rest.substr(slash + 1));
    }
    return io::parse_module(R, io::read_file(arg), arg);
}

/// The CLI accepts non-minimal presentations and minimalizes them first.
RModuleMap minimal_input(const Ring& R, const RModuleMap& P) {
    if (is_minimal(P)) return P;
    auto Q = minimalize(R, P);
    std::cout << "notice: presentation was not minimal; minimalized " << P.target_rank << "x" << P.source_rank
              << " -> " << Q.target_rank << "x" << Q.source_rank << "\n";
    return Q;
}

void maybe_write_report(const std::string& path, const Json& j) {
    if (!path.empty()) io::write_file(path, report::dump(j));
}

int depth_from(std::optional<int> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("RADCUBE_DEPTH")) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(env, &used);
            if (used == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw InputError(std::string("RADCUBE_DEPTH is not an integer: ") + env);
    }
    return 8;
}

// ------------------------------------------------------------ commands

int cmd_ring_info(const std::string& ring, const std::string& report_path) {
    const auto R = load_ring(ring);
    const auto inv = invariants(R);
    std::cout << "p        " << R.field().modulus() << "\n"
              << "e        " << inv.e << "\n"
              << "s        " << inv.s << "\n"
              << "r        " << inv.r << "\n"
              << "length   " << inv.length << "\n"
              << "hilbert  " << format_sequence(inv.hilbert) << "\n"
              << "socle    ";
    for (std::size_t i = 0; i < inv.socle_basis.size(); ++i) std::cout << (i ? ", " : "") << R.format(inv.socle_basis[i]);
    std::cout << "\n"
              << (inv.gorenstein ? "Gorenstein" : "not Gorenstein") << ", "
              << (inv.soc_eq_msq ? "Soc = m^2" : "Soc != m^2") << "\n";
    maybe_write_report(report_path, report::to_json(R, inv));
    return kOk;
}

int cmd_resolve(const std::string& ring, const std::string& module, int steps, bool ext, const std::string& report_path) {
    if (steps < 0) throw InputError("--steps must be non-negative");
    const auto R = load_ring(ring);
    const auto P = minimal_input(R, load_module(R, module));
    const auto res = resolve(R, P, ext ? steps + 1 : steps);
    std::vector<std::size_t> betti(res.table.betti.begin(), res.table.betti.begin() + steps + 1);
    std::vector<std::size_t> ext_row;
    if (ext) ext_row = ext_dims_from(R, res, steps + 1);
    std::cout << "Betti numbers" << (ext ? " and dim Ext^i(M, R)" : "") << ", i = 0.." << steps << "\n"
              << report::render_betti(betti, ext ? &ext_row : nullptr);
    Json j{{"betti", betti}};
    if (ext) j["ext"] = ext_row;
    maybe_write_report(report_path, j);
    return kOk;
}

int cmd_construct(const std::string& ring, const std::string& module, int n, const std::string& out,
                  const std::string& report_path) {
    const auto R = load_ring(ring);
    const auto P = minimal_input(R, load_module(R, module));
    const auto con = construct_from_module(R, P, n);
    if (!out.empty()) {
        io::write_file(out, io::write_window(R, con.window));
        std::cout << "window written to " << out << "\n";
    }
    std::cout << "ranks " << format_sequence(con.window.ranks) << "\n" << report::render(con.verify, con.dual);
    maybe_write_report(report_path, report::window_summary(con.window, con.verify, con.dual));
    return kOk;
}

int cmd_verify(const std::string& ring, const std::string& window, const std::string& report_path) {
    const auto R = load_ring(ring);
    const auto W = io::parse_window(R, io::read_file(window), window);
    const auto w = verify_window(R, W);
    const auto h = homology_of_dual(R, W);
    std::cout << "ranks " << format_sequence(W.ranks) << "\n" << report::render(w, h);
    maybe_write_report(report_path, report::window_summary(W, w, h));
    return kOk;
}

int cmd_check(const std::string& ring, const std::string& window, const std::string& theorems, std::optional<int> depth_flag,
              const std::string& report_path) {
    const auto R = load_ring(ring);
    const auto W = io::parse_window(R, io::read_file(window), window);
    const int depth = depth_from(depth_flag);
    if (depth < 1) throw InputError("depth must be >= 1");
    std::vector<char> which;
    std::stringstream ss(theorems);
    for (std::string t; std::getline(ss, t, ',');) {
        if (t != "A" && t != "B" && t != "C") throw InputError("unknown theorem '" + t + "' (use A, B, C)");
        which.push_back(t[0]);
    }
    if (which.empty()) throw InputError("--theorems is empty");

    const auto wr = verify_window(R, W);
    const auto hd = homology_of_dual(R, W);
    std::cout << report::render(wr, hd) << "\n";
    Json verdicts = Json::object();
    bool violated = false, unmet = false;
    auto take = [&](const Verdict& v, Json j, const char* key) {
        std::cout << report::render(v) << "\n";
        violated = violated || (v.hypotheses_met() && v.violated());
        unmet = unmet || !v.hypotheses_met();
        verdicts[key] = std::move(j);
    };
    for (char t : which) {
        if (t == 'A') {
            const auto v = check_theorem_A(R, W, static_cast<std::size_t>(depth));
            take(v, report::to_json(v), "A");
        } else if (t == 'B') {
            const auto v = classify_theorem_B(R, W);
            if (v.hypotheses_met())
                std::cout << "type " << (v.type == TheoremBVerdict::Type::I ? "I" : "II")
                          << (v.a ? ", a = " + std::to_string(*v.a) : "")
                          << (v.kappa ? ", kappa = " + std::to_string(*v.kappa) : "") << "\n";
            take(v, report::to_json(v), "B");
        } else {
            const auto v = check_theorem_C(R, W);
            take(v, report::to_json(v), "C");
        }
    }
    const int code = violated ? kViolated : unmet ? kInvalid : kOk;
    maybe_write_report(report_path, Json{{"ring", report::to_json(R, invariants(R))},
                                         {"window", report::window_summary(W, wr, hd)},
                                         {"depth", depth},
                                         {"verdicts", verdicts},
                                         {"exit_code", code}});
    return code;
}

int cmd_recursion(std::int64_t e, std::int64_t r, const std::vector<std::int64_t>& search, const std::string& report_path) {
    const auto cls = recursion::classify(e, r);
    const bool constant_only = cls.kind == recursion::Classification::Kind::ConstantOnly;
    std::cout << recursion::to_string(cls.kind) << (constant_only ? " (e = r+1)" : "") << "\n  " << cls.reason << "\n";
    for (const auto& [q, v] : cls.divisor_values) std::cout << "  q = " << q << ": q^2 - eq + r = " << v << "\n";
    Json j{{"e", e}, {"r", r}, {"classification", report::to_json(cls)}};
    int code = kOk;
    if (!search.empty()) {
        if (search.size() != 2) throw InputError("--search takes L and B");
        if (search[0] < 3) throw InputError("search length must be >= 3");
        const auto found = recursion::search_sequences(e, r, static_cast<std::size_t>(search[0]), search[1]);
        const bool all_constant = std::all_of(found.begin(), found.end(), [](const auto& a) { return recursion::is_constant(a); });
        const bool agree = found.empty() != constant_only && all_constant;
        constexpr std::size_t kShown = 5;
        for (std::size_t i = 0; i < found.size() && i < kShown; ++i) std::cout << "  " << format_sequence(found[i]) << "\n";
        if (found.size() > kShown) std::cout << "  ... " << found.size() - kShown << " more\n";
        std::cout << recursion::to_string(cls.kind) << "; "
                  << (found.empty() ? "search empty" : "search found " + std::to_string(found.size())) << "; "
                  << (agree ? "AGREE" : "DISAGREE") << "\n";
        j["search"] = {{"length", search[0]}, {"bound", search[1]}, {"found", found}, {"agree", agree}};
        if (!agree) code = kViolated;
    }
    maybe_write_report(report_path, j);
    return code;
}

int cmd_selftest() {
    bool all = true;
    for (const auto& c : acceptance::run_all()) {
        std::cout << acceptance::summary_line(c) << "\n";
        for (const auto& item : c.items)
            if (!item.ok) std::cout << "    failed: " << item.what << ": " << item.detail << "\n";
        all = all && c.passed();
    }
    return all ? kOk : kViolated;
}

int cmd_catalog(const std::string& dir) {
    for (const auto& c : catalog()) {
        std::cout << c.name << "  e=" << c.e << " s=" << c.s << " r=" << c.r << " len=" << c.length << "  modules:";
        for (const auto& m : c.modules) std::cout << " " << m.name;
        std::cout << "\n    " << c.note << "\n";
        if (!dir.empty()) {
            std::filesystem::create_directories(dir);
            io::write_file(dir + "/" + c.name + ".ring", c.ring_text);
            for (const auto& m : c.modules) io::write_file(dir + "/" + c.name + "." + m.name + ".mod", m.text);
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations over artinian local rings with m^3 = 0"};
    app.require_subcommand(1);
    std::string ring, module, window, out, report_path, theorems = "A,B,C", dir;
    int steps = 6, half = 5;
    std::optional<int> depth;
    bool ext = false;
    std::int64_t e = 0, r = 0;
    std::vector<std::int64_t> search;

    auto* info = app.add_subcommand("ring-info", "ring invariants");
    info->add_option("ring", ring, "ring file or catalog:NAME")->required();
    info->add_option("--report", report_path, "write a JSON report");

    auto* res = app.add_subcommand("resolve", "Betti numbers (and Ext) of a module");
    res->add_option("ring", ring)->required();
    res->add_option("module", module, "module file or catalog:RING/MODULE")->required();
    res->add_option("--steps", steps, "homological degree")->capture_default_str();
    res->add_flag("--ext", ext, "also print dim Ext^i(M, R)");
    res->add_option("--report", report_path);

    auto* con = app.add_subcommand("construct", "splice a window from an Ext-vanishing module");
    con->add_option("ring", ring)->required();
    con->add_option("module", module)->required();
    con->add_option("--half-window", half, "window is [-N, N]")->capture_default_str();
    con->add_option("--out", out, "window file to write");
    con->add_option("--report", report_path);

    auto* ver = app.add_subcommand("verify", "d o d, minimality and homology of a window and its dual");
    ver->add_option("ring", ring)->required();
    ver->add_option("window", window)->required();
    ver->add_option("--report", report_path);

    auto* chk = app.add_subcommand("check", "check Theorems A, B, C on a window");
    chk->add_option("ring", ring)->required();
    chk->add_option("window", window)->required();
    chk->add_option("--theorems", theorems, "comma-separated subset of A,B,C")->capture_default_str();
    chk->add_option("--depth", depth, "series depth (default $RADCUBE_DEPTH or 8)");
    chk->add_option("--report", report_path);

    auto* rec = app.add_subcommand("recursion", "classify a_i = e a_{i+1} - r a_{i+2}");
    rec->add_option("--e", e)->required();
    rec->add_option("--r", r)->required();
    rec->add_option("--search", search, "L B: search prefixes of length L with a_0, a_1 <= B")->expected(2);
    rec->add_option("--report", report_path);

    auto* self = app.add_subcommand("selftest", "run the acceptance criteria");

    auto* cat = app.add_subcommand("catalog", "list the example rings");
    cat->add_option("--write", dir, "also write ring and module files to this directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& s) {
        return app.exit(s);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return kInvalid;
    }

    try {
        if (*info) return cmd_ring_info(ring, report_path);
        if (*res) return cmd_resolve(ring, module, steps, ext, report_path);
        if (*con) return cmd_construct(ring, module, half, out, report_path);
        if (*ver) return cmd_verify(ring, window, report_path);
        if (*chk) return cmd_check(ring, window, theorems, depth, report_path);
        if (*rec) return cmd_recursion(e, r, search, report_path);
        if (*self) return cmd_selftest();
        if (*cat) return cmd_catalog(dir);
    } catch (const HypothesisError& err) {
        std::cerr << "hypothesis not met: " << err.what() << "\n";
        return kInvalid;
    } catch (const InputError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kInvalid;
    } catch (const std::overflow_error& err) {
        std::cerr << "error: " << err.what() << " (try a smaller depth)\n";
        return kInvalid;
    }
    return kInvalid;
}
