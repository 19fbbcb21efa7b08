#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "radcube/field.hpp"

namespace radcube::recursion {

/// Exact rational, reduced, denominator positive.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t n, std::int64_t d) {
        if (d == 0) throw InputError("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const auto g = std::gcd(n, d);
        return g ? Rational{n / g, d / g} : Rational{0, 1};
    }
    friend bool operator==(const Rational&, const Rational&) = default;

    [[nodiscard]] std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

inline void require_params(std::int64_t e, std::int64_t r) {
    if (r <= 1) throw InputError("recursion needs r > 1, got r = " + std::to_string(r));
    if (e < 1) throw InputError("recursion needs e >= 1, got e = " + std::to_string(e));
}

struct PrefixReport {
    std::vector<std::int64_t> residuals;  // a_i - e a_{i+1} + r a_{i+2}
    std::vector<Rational> ratios;         // q_i = a_i / a_{i+1}
    bool valid = false;
};

inline PrefixReport verify_prefix(std::int64_t e, std::int64_t r, const std::vector<std::int64_t>& a) {
    if (a.size() < 3) throw InputError("prefix needs at least 3 terms");
    for (auto x : a)
        if (x < 1) throw InputError("prefix entries must be positive, got " + std::to_string(x));
    PrefixReport out;
    for (std::size_t i = 0; i + 2 < a.size(); ++i) out.residuals.push_back(a[i] - e * a[i + 1] + r * a[i + 2]);
    for (std::size_t i = 0; i + 1 < a.size(); ++i) out.ratios.push_back(Rational::make(a[i], a[i + 1]));
    out.valid = std::all_of(out.residuals.begin(), out.residuals.end(), [](std::int64_t x) { return x == 0; });
    return out;
}

struct Classification {
    enum class Kind { ConstantOnly, NoSequence };
    Kind kind = Kind::NoSequence;
    /// q^2 - e q + r evaluated at every positive divisor q of r; a positive
    /// rational root of this monic equation must be one of them.
    std::vector<std::pair<std::int64_t, std::int64_t>> divisor_values;
    std::string reason;
};

inline Classification classify(std::int64_t e, std::int64_t r) {
    require_params(e, r);
    Classification out;
    std::vector<std::int64_t> roots;
    for (std::int64_t q = 1; q <= r; ++q) {
        if (r % q) continue;
        const auto v = q * q - e * q + r;
        out.divisor_values.emplace_back(q, v);
        if (v == 0) roots.push_back(q);
    }
    if (e == r + 1) {
        out.kind = Classification::Kind::ConstantOnly;
        out.reason = "q = 1 is a root (e = r+1); any such sequence is constant";
    } else if (roots.empty()) {
        out.reason = "no divisor of r is a root, so q_0 would be irrational";
    } else {
        out.reason = "only roots q > 1, forcing a_0 > a_1 > a_2 > ... > 0";
    }
    return out;
}

inline std::string to_string(Classification::Kind k) {
    return k == Classification::Kind::ConstantOnly ? "ConstantOnly" : "NoSequence";
}

/// Every positive integer prefix a_0 .. a_{L-1} with a_0, a_1 in [1, B] that
/// satisfies the recursion, solved forward as a_{i+2} = (e a_{i+1} - a_i)/r.
/// Ordered lexicographically by (a_0, a_1).
inline std::vector<std::vector<std::int64_t>> search_sequences(std::int64_t e, std::int64_t r, std::size_t L,
                                                               std::int64_t B) {
    require_params(e, r);
    if (L < 3) throw InputError("search length must be >= 3");
    if (B < 1) throw InputError("search bound must be >= 1");
    std::vector<std::vector<std::int64_t>> found;
    for (std::int64_t a0 = 1; a0 <= B; ++a0)
        for (std::int64_t a1 = 1; a1 <= B; ++a1) {
            std::vector<std::int64_t> a{a0, a1};
            while (a.size() < L) {
                std::int64_t num = 0;
                if (__builtin_mul_overflow(e, a.back(), &num)) break;
                num -= a[a.size() - 2];
                if (num <= 0 || num % r != 0) break;
                a.push_back(num / r);
            }
            if (a.size() == L) found.push_back(std::move(a));
        }
    return found;
}

/// a_i a_{i+2} = a_{i+1}^2 for every index.
inline bool telescoping_holds(const std::vector<std::int64_t>& a) {
    for (std::size_t i = 0; i + 2 < a.size(); ++i)
        if (a[i] * a[i + 2] != a[i + 1] * a[i + 1]) return false;
    return true;
}

inline bool is_constant(const std::vector<std::int64_t>& a) {
    return std::all_of(a.begin(), a.end(), [&](std::int64_t x) { return x == a.front(); });
}

}  // namespace radcube::recursion
