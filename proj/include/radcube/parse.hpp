#pragma once

// Text formats for rings, presentations and complex windows.
//
// All three are line oriented: `key = value` pairs, `#` starts a comment,
// blank lines are ignored.
//
// Ring file, quadric form:
//     p = 5
//     vars = x, y, z
//     relations = x^2, x*y, y^2, z^2
// Ring file, structure-constant form (indices 1-based, x_i x_j = sum c y_t;
// each triple also sets x_j x_i):
//     p = 5
//     e = 2
//     s = 1
//     vars = a, b          # optional, default x1 .. xe
//     squares = u          # optional, default y1 .. ys
//     mult = 1 2 1 1
//
// Module file (presentation matrix, R^cols -> R^rows):
//     rows = 1
//     cols = 2
//     row = x, y
//
// Window file (d i : A_i -> A_{i-1} for lo < i <= hi):
//     lo = -1
//     hi = 1
//     ranks = 1, 1, 1
//     [d 0]
//     row = x + z
//     [d 1]
//     row = x - z
//
// Ring elements are polynomial expressions in the variables and the
// degree-2 basis names: integers, names, + - * ^ and parentheses.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "radcube/complex.hpp"

namespace radcube::io {

class ParseError : public InputError {
public:
    ParseError(const std::string& source, std::size_t line, std::size_t col, const std::string& what)
        : InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what),
          line_(line),
          col_(col) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return col_; }

private:
    std::size_t line_, col_;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

namespace detail {

/// A piece of source text and where it starts (1-based line and column).
struct Span {
    std::string_view text;
    std::size_t line = 0;
    std::size_t col = 0;
};

struct Entry {
    std::string key;
    Span value;
    std::size_t line = 0;
    std::size_t key_col = 0;
};

inline Span trim(Span s) {
    std::size_t b = 0, e = s.text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s.text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s.text[e - 1]))) --e;
    return {s.text.substr(b, e - b), s.line, s.col + b};
}

/// Comma-separated pieces, each trimmed.  An empty span gives no pieces.
inline std::vector<Span> split_commas(Span s) {
    std::vector<Span> out;
    if (trim(s).text.empty()) return out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.text.size(); ++i) {
        if (i == s.text.size() || s.text[i] == ',') {
            out.push_back(trim({s.text.substr(start, i - start), s.line, s.col + start}));
            start = i + 1;
        }
    }
    return out;
}

inline bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

/// Splits a document into `key = value` entries and `[section]` headers.
/// Headers come back with an empty key and the bracket contents as value.
class Lines {
public:
    Lines(std::string_view text, std::string source) : source_(std::move(source)) {
        std::size_t line = 1, start = 0;
        for (std::size_t i = 0; i <= text.size(); ++i) {
            if (i == text.size() || text[i] == '\n') {
                auto raw = text.substr(start, i - start);
                if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
                if (auto h = raw.find('#'); h != std::string_view::npos) raw = raw.substr(0, h);
                take(Span{raw, line, 1});
                ++line;
                start = i + 1;
            }
        }
    }

    [[nodiscard]] const std::vector<Entry>& entries() const noexcept { return entries_; }
    [[nodiscard]] const std::string& source() const noexcept { return source_; }

    [[noreturn]] void fail(std::size_t line, std::size_t col, const std::string& what) const {
        throw ParseError(source_, line, col, what);
    }
    [[noreturn]] void fail(const Span& s, const std::string& what) const { fail(s.line, s.col, what); }

private:
    void take(Span raw) {
        const auto t = trim(raw);
        if (t.text.empty()) return;
        if (t.text.front() == '[') {
            if (t.text.back() != ']') fail(t.line, t.col + t.text.size(), "expected ']'");
            entries_.push_back({"", trim({t.text.substr(1, t.text.size() - 2), t.line, t.col + 1}), t.line, t.col});
            return;
        }
        const auto eq = t.text.find('=');
        if (eq == std::string_view::npos) fail(t, "expected 'key = value'");
        const auto key = trim({t.text.substr(0, eq), t.line, t.col});
        if (!is_identifier(key.text)) fail(key, "bad key '" + std::string(key.text) + "'");
        entries_.push_back(
            {std::string(key.text), trim({t.text.substr(eq + 1), t.line, t.col + eq + 1}), t.line, key.col});
    }

    std::string source_;
    std::vector<Entry> entries_;
};

inline std::int64_t parse_int(const Lines& L, Span s, const char* what) {
    const auto t = trim(s);
    std::size_t i = 0;
    bool neg = false;
    if (i < t.text.size() && (t.text[i] == '-' || t.text[i] == '+')) neg = t.text[i++] == '-';
    if (i == t.text.size()) L.fail(t, std::string("expected ") + what);
    std::int64_t v = 0;
    for (; i < t.text.size(); ++i) {
        const char c = t.text[i];
        if (!std::isdigit(static_cast<unsigned char>(c))) L.fail(t.line, t.col + i, std::string("expected ") + what);
        if (v > (INT64_MAX - 9) / 10) L.fail(t, "integer too large");
        v = v * 10 + (c - '0');
    }
    return neg ? -v : v;
}

inline std::size_t parse_count(const Lines& L, Span s, const char* what) {
    const auto v = parse_int(L, s, what);
    if (v < 0) L.fail(s, std::string(what) + " must be non-negative");
    return static_cast<std::size_t>(v);
}

/// Recursive-descent evaluator for the element grammar.  Alg supplies the
/// value type and constant / atom / add / neg / mul.
template <class Alg>
class ExprParser {
public:
    using Value = typename Alg::Value;

    ExprParser(const Lines& L, Span s, const Alg& alg) : L_(L), s_(s), alg_(alg) {}

    Value parse() {
        skip();
        if (pos_ == s_.text.size()) fail("empty expression");
        auto v = expr();
        skip();
        if (pos_ != s_.text.size()) fail(std::string("unexpected '") + s_.text[pos_] + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { L_.fail(s_.line, s_.col + pos_, what); }

    void skip() {
        while (pos_ < s_.text.size() && std::isspace(static_cast<unsigned char>(s_.text[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.text.size() && s_.text[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Value expr() {
        bool neg = false;
        if (accept('-')) {
            neg = true;
        } else {
            accept('+');
        }
        auto v = term();
        if (neg) v = alg_.neg(v);
        for (;;) {
            if (accept('+')) {
                v = alg_.add(v, term());
            } else if (accept('-')) {
                v = alg_.add(v, alg_.neg(term()));
            } else {
                return v;
            }
        }
    }

    Value term() {
        auto v = power();
        while (accept('*')) v = alg_.mul(v, power());
        return v;
    }

    Value power() {
        auto v = primary();
        if (accept('^')) {
            skip();
            const std::size_t at = pos_;
            std::int64_t n = 0;
            while (pos_ < s_.text.size() && std::isdigit(static_cast<unsigned char>(s_.text[pos_]))) {
                n = n * 10 + (s_.text[pos_++] - '0');
                if (n > 64) fail("exponent too large");
            }
            if (pos_ == at) fail("expected exponent");
            auto out = alg_.constant(1);
            for (std::int64_t k = 0; k < n; ++k) out = alg_.mul(out, v);
            return out;
        }
        return v;
    }

    Value primary() {
        skip();
        if (pos_ == s_.text.size()) fail("unexpected end of expression");
        const char c = s_.text[pos_];
        if (c == '(') {
            ++pos_;
            auto v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t n = 0;
            while (pos_ < s_.text.size() && std::isdigit(static_cast<unsigned char>(s_.text[pos_]))) {
                if (n > (INT64_MAX - 9) / 10) fail("integer too large");
                n = n * 10 + (s_.text[pos_++] - '0');
            }
            return alg_.constant(n);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t at = pos_;
            while (pos_ < s_.text.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_.text[pos_])) || s_.text[pos_] == '_'))
                ++pos_;
            const auto name = s_.text.substr(at, pos_ - at);
            auto v = alg_.atom(name);
            if (!v) L_.fail(s_.line, s_.col + at, "unknown name '" + std::string(name) + "'");
            return *v;
        }
        fail(std::string("unexpected '") + c + "'");
    }

    const Lines& L_;
    Span s_;
    const Alg& alg_;
    std::size_t pos_ = 0;
};

/// Elements of a fixed ring.
struct RingAlg {
    using Value = RingElement;
    const Ring& R;

    [[nodiscard]] Value constant(std::int64_t n) const { return R.constant(n); }
    [[nodiscard]] std::optional<Value> atom(std::string_view name) const {
        for (std::size_t u = 1; u < R.length(); ++u)
            if (R.basis_name(u) == name) return R.basis(u);
        return std::nullopt;
    }
    [[nodiscard]] Value add(const Value& a, const Value& b) const { return R.add(a, b); }
    [[nodiscard]] Value neg(const Value& a) const { return R.sub(R.zero(), a); }
    [[nodiscard]] Value mul(const Value& a, const Value& b) const { return R.mul(a, b); }
};

/// Polynomials over F_p in named variables, for relation strings.  A
/// monomial is its sorted list of variable indices.
struct PolyAlg {
    using Value = std::map<std::vector<std::size_t>, Residue>;
    PrimeField field;
    const std::vector<std::string>& vars;

    static void clean(Value& v) {
        for (auto it = v.begin(); it != v.end();) it = it->second == 0 ? v.erase(it) : std::next(it);
    }
    [[nodiscard]] Value constant(std::int64_t n) const {
        Value v{{{}, field.reduce(n)}};
        clean(v);
        return v;
    }
    [[nodiscard]] std::optional<Value> atom(std::string_view name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return Value{{{i}, 1}};
        return std::nullopt;
    }
    [[nodiscard]] Value add(Value a, const Value& b) const {
        for (const auto& [m, c] : b) a[m] = field.add(a[m], c);
        clean(a);
        return a;
    }
    [[nodiscard]] Value neg(Value a) const {
        for (auto& [m, c] : a) c = field.neg(c);
        return a;
    }
    [[nodiscard]] Value mul(const Value& a, const Value& b) const {
        Value out;
        for (const auto& [ma, ca] : a)
            for (const auto& [mb, cb] : b) {
                auto m = ma;
                m.insert(m.end(), mb.begin(), mb.end());
                std::sort(m.begin(), m.end());
                out[m] = field.add(out[m], field.mul(ca, cb));
            }
        clean(out);
        return out;
    }
};

inline RingElement parse_element(const Lines& L, const Ring& R, Span s) {
    const RingAlg alg{R};
    return ExprParser<RingAlg>(L, s, alg).parse();
}

inline std::vector<std::string> parse_names(const Lines& L, Span s, const char* what) {
    std::vector<std::string> out;
    for (const auto& piece : split_commas(s)) {
        if (!is_identifier(piece.text)) L.fail(piece, std::string("bad ") + what + " name '" + std::string(piece.text) + "'");
        out.emplace_back(piece.text);
    }
    return out;
}

/// Rows of a matrix block: `row = a, b, ...` entries starting at index k.
inline RModuleMap parse_rows(const Lines& L, const Ring& R, std::size_t rows, std::size_t cols, std::size_t& k,
                             std::size_t header_line) {
    auto f = RModuleMap::zero(R, rows, cols);
    std::size_t r = 0;
    const auto& es = L.entries();
    for (; k < es.size() && es[k].key == "row"; ++k, ++r) {
        if (r == rows) L.fail(es[k].line, es[k].key_col, "more than " + std::to_string(rows) + " rows");
        const auto cells = split_commas(es[k].value);
        if (cells.size() != cols)
            L.fail(es[k].value, "row has " + std::to_string(cells.size()) + " entries, expected " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c) f.at(r, c) = parse_element(L, R, cells[c]);
    }
    if (r != rows && cols != 0)
        L.fail(header_line, 1, "expected " + std::to_string(rows) + " rows, got " + std::to_string(r));
    return f;
}

}  // namespace detail

/// A single ring element, e.g. "x + 2*z".
inline RingElement parse_element(const Ring& R, std::string_view text, const std::string& source = "<element>") {
    detail::Lines L("", source);
    return detail::parse_element(L, R, detail::Span{text, 1, 1});
}

inline Ring parse_ring(std::string_view text, const std::string& source = "<ring>") {
    detail::Lines L(text, source);
    std::optional<std::int64_t> p;
    std::optional<std::size_t> e, s;
    std::vector<std::string> vars, squares;
    bool have_vars = false, have_squares = false;
    std::vector<detail::Span> relations, mult;
    std::optional<detail::Span> first_form;  // first key of the explicit form, for error messages
    for (const auto& en : L.entries()) {
        auto once = [&](bool seen) {
            if (seen) L.fail(en.line, en.key_col, "duplicate key '" + en.key + "'");
        };
        if (en.key == "p") {
            once(p.has_value());
            p = detail::parse_int(L, en.value, "prime");
        } else if (en.key == "vars") {
            once(have_vars);
            vars = detail::parse_names(L, en.value, "variable");
            have_vars = true;
        } else if (en.key == "relations") {
            for (const auto& r : detail::split_commas(en.value)) relations.push_back(r);
        } else if (en.key == "e" || en.key == "s" || en.key == "squares" || en.key == "mult") {
            if (!first_form) first_form = detail::Span{en.key, en.line, en.key_col};
            if (en.key == "e") {
                once(e.has_value());
                e = detail::parse_count(L, en.value, "e");
            } else if (en.key == "s") {
                once(s.has_value());
                s = detail::parse_count(L, en.value, "s");
            } else if (en.key == "squares") {
                once(have_squares);
                squares = detail::parse_names(L, en.value, "degree-2");
                have_squares = true;
            } else {
                mult.push_back(en.value);
            }
        } else {
            L.fail(en.line, en.key_col, "unknown key '" + en.key + "'");
        }
    }
    if (!p) L.fail(1, 1, "missing 'p'");
    if (*p < 2 || !PrimeField::is_prime(static_cast<std::uint64_t>(*p)))
        L.fail(1, 1, "p = " + std::to_string(*p) + " is not prime");
    const PrimeField field(static_cast<std::uint64_t>(*p));

    if (!relations.empty() || (have_vars && !first_form)) {
        if (first_form) L.fail(*first_form, "'" + std::string(first_form->text) + "' cannot be mixed with 'relations'");
        if (!have_vars || vars.empty()) L.fail(1, 1, "missing 'vars'");
        std::vector<QuadraticForm> quadrics;
        const detail::PolyAlg alg{field, vars};
        for (const auto& rel : relations) {
            const auto poly = detail::ExprParser<detail::PolyAlg>(L, rel, alg).parse();
            QuadraticForm q;
            for (const auto& [m, c] : poly) {
                if (m.size() != 2) L.fail(rel, "relation is not a homogeneous quadric");
                q[{m[0], m[1]}] = static_cast<std::int64_t>(c);
            }
            quadrics.push_back(std::move(q));
        }
        try {
            return Ring(build_from_quadrics(field, vars, quadrics));
        } catch (const ParseError&) {
            throw;
        } catch (const InputError& err) {
            L.fail(relations.empty() ? 1 : relations.front().line, 1, err.what());
        }
    }

    if (!e) L.fail(1, 1, "missing 'e' (or 'vars' and 'relations')");
    if (!s) L.fail(1, 1, "missing 's'");
    auto pres = RingPresentation::blank(field, *e, *s);
    if (have_vars) {
        if (vars.size() != *e) L.fail(1, 1, "'vars' lists " + std::to_string(vars.size()) + " names, e = " + std::to_string(*e));
        pres.names1 = vars;
    }
    if (have_squares) {
        if (squares.size() != *s)
            L.fail(1, 1, "'squares' lists " + std::to_string(squares.size()) + " names, s = " + std::to_string(*s));
        pres.names2 = squares;
    }
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Residue> given;
    for (const auto& m : mult) {
        std::vector<detail::Span> fields;
        std::size_t i = 0;
        while (i < m.text.size()) {
            while (i < m.text.size() && std::isspace(static_cast<unsigned char>(m.text[i]))) ++i;
            const std::size_t at = i;
            while (i < m.text.size() && !std::isspace(static_cast<unsigned char>(m.text[i]))) ++i;
            if (i > at) fields.push_back({m.text.substr(at, i - at), m.line, m.col + at});
        }
        if (fields.size() != 4) L.fail(m, "expected 'mult = i j t c'");
        const auto ii = detail::parse_count(L, fields[0], "index i");
        const auto jj = detail::parse_count(L, fields[1], "index j");
        const auto tt = detail::parse_count(L, fields[2], "index t");
        if (ii < 1 || ii > *e) L.fail(fields[0], "i must lie in 1.." + std::to_string(*e));
        if (jj < 1 || jj > *e) L.fail(fields[1], "j must lie in 1.." + std::to_string(*e));
        if (tt < 1 || tt > *s) L.fail(fields[2], "t must lie in 1.." + std::to_string(*s));
        const Residue c = field.reduce(detail::parse_int(L, fields[3], "coefficient"));
        for (auto key : {std::tuple{ii - 1, jj - 1, tt - 1}, std::tuple{jj - 1, ii - 1, tt - 1}}) {
            if (auto it = given.find(key); it != given.end() && it->second != c)
                L.fail(m, "conflicting structure constant");
            given[key] = c;
            pres.c(std::get<0>(key), std::get<1>(key), std::get<2>(key)) = c;
        }
    }
    try {
        return Ring(std::move(pres));
    } catch (const InputError& err) {
        L.fail(mult.empty() ? 1 : mult.front().line, 1, err.what());
    }
}

inline RModuleMap parse_module(const Ring& R, std::string_view text, const std::string& source = "<module>") {
    detail::Lines L(text, source);
    std::optional<std::size_t> rows, cols;
    std::size_t k = 0, header_line = 1;
    const auto& es = L.entries();
    for (; k < es.size() && es[k].key != "row"; ++k) {
        const auto& en = es[k];
        if (en.key == "rows" && !rows) {
            rows = detail::parse_count(L, en.value, "row count");
        } else if (en.key == "cols" && !cols) {
            cols = detail::parse_count(L, en.value, "column count");
        } else {
            L.fail(en.line, en.key_col, en.key.empty() ? "unexpected section" : "unexpected key '" + en.key + "'");
        }
        header_line = en.line;
    }
    if (!rows) L.fail(1, 1, "missing 'rows'");
    if (!cols) L.fail(1, 1, "missing 'cols'");
    auto f = detail::parse_rows(L, R, *rows, *cols, k, header_line);
    if (k < es.size()) L.fail(es[k].line, es[k].key_col, "unexpected '" + es[k].key + "'");
    return f;
}

inline ChainWindow parse_window(const Ring& R, std::string_view text, const std::string& source = "<window>") {
    detail::Lines L(text, source);
    std::optional<std::int64_t> lo, hi;
    std::vector<std::size_t> ranks;
    bool have_ranks = false;
    std::size_t k = 0;
    const auto& es = L.entries();
    for (; k < es.size() && !es[k].key.empty(); ++k) {
        const auto& en = es[k];
        if (en.key == "lo" && !lo) {
            lo = detail::parse_int(L, en.value, "integer");
        } else if (en.key == "hi" && !hi) {
            hi = detail::parse_int(L, en.value, "integer");
        } else if (en.key == "ranks" && !have_ranks) {
            for (const auto& piece : detail::split_commas(en.value)) ranks.push_back(detail::parse_count(L, piece, "rank"));
            have_ranks = true;
        } else {
            L.fail(en.line, en.key_col, "unexpected key '" + en.key + "'");
        }
    }
    if (!lo || !hi) L.fail(1, 1, "missing 'lo' or 'hi'");
    if (*lo >= *hi) L.fail(1, 1, "need lo < hi");
    if (*hi - *lo > 10000) L.fail(1, 1, "window too long");
    if (!have_ranks) L.fail(1, 1, "missing 'ranks'");
    const auto n = static_cast<std::size_t>(*hi - *lo);
    if (ranks.size() != n + 1)
        L.fail(1, 1, "'ranks' has " + std::to_string(ranks.size()) + " entries, expected " + std::to_string(n + 1));

    ChainWindow W{static_cast<int>(*lo), static_cast<int>(*hi), ranks, {}};
    for (int i = W.lo + 1; i <= W.hi; ++i) {
        if (k == es.size()) L.fail(es.empty() ? 1 : es.back().line, 1, "missing block [d " + std::to_string(i) + "]");
        const auto& head = es[k];
        const auto words = detail::trim(head.value);
        std::string want = "d " + std::to_string(i);
        std::string got(words.text);
        got.erase(std::unique(got.begin(), got.end(), [](char a, char b) { return a == ' ' && b == ' '; }), got.end());
        if (!head.key.empty() || got != want) L.fail(head.line, head.key_col, "expected block [" + want + "]");
        ++k;
        W.diffs.push_back(detail::parse_rows(L, R, W.rank_at(i - 1), W.rank_at(i), k, head.line));
    }
    if (k < es.size()) L.fail(es[k].line, es[k].key_col, "unexpected content after last block");
    return W;
}

/// Structure-constant form; degree-2 names are kept only when they are
/// plain identifiers, since products like "x*z" already evaluate correctly.
inline std::string write_ring(const Ring& R) {
    const auto& pres = R.presentation();
    std::ostringstream out;
    out << "p = " << R.field().modulus() << "\n";
    out << "e = " << R.e() << "\n";
    out << "s = " << R.s() << "\n";
    out << "vars = ";
    for (std::size_t i = 0; i < R.e(); ++i) out << (i ? ", " : "") << pres.names1[i];
    out << "\n";
    if (std::all_of(pres.names2.begin(), pres.names2.end(), [](const std::string& n) { return detail::is_identifier(n); })) {
        out << "squares = ";
        for (std::size_t t = 0; t < R.s(); ++t) out << (t ? ", " : "") << pres.names2[t];
        out << "\n";
    }
    for (std::size_t i = 0; i < R.e(); ++i)
        for (std::size_t j = i; j < R.e(); ++j)
            for (std::size_t t = 0; t < R.s(); ++t)
                if (pres.c(i, j, t)) out << "mult = " << i + 1 << " " << j + 1 << " " << t + 1 << " " << pres.c(i, j, t) << "\n";
    return out.str();
}

inline std::string write_rows(const Ring& R, const RModuleMap& f) {
    std::string out;
    for (std::size_t r = 0; r < f.target_rank; ++r) {
        if (f.source_rank == 0) break;
        out += "row = ";
        for (std::size_t c = 0; c < f.source_rank; ++c) out += (c ? ", " : "") + R.format(f.at(r, c));
        out += "\n";
    }
    return out;
}

inline std::string write_module(const Ring& R, const RModuleMap& f) {
    return "rows = " + std::to_string(f.target_rank) + "\ncols = " + std::to_string(f.source_rank) + "\n" +
           write_rows(R, f);
}

inline std::string write_window(const Ring& R, const ChainWindow& W) {
    check_shape(W);
    std::string out = "lo = " + std::to_string(W.lo) + "\nhi = " + std::to_string(W.hi) + "\nranks = ";
    for (std::size_t k = 0; k < W.ranks.size(); ++k) out += (k ? ", " : "") + std::to_string(W.ranks[k]);
    out += "\n";
    for (int i = W.lo + 1; i <= W.hi; ++i) out += "[d " + std::to_string(i) + "]\n" + write_rows(R, W.d(i));
    return out;
}

}  // namespace radcube::io
