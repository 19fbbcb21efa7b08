#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "radcube/field.hpp"

namespace radcube {

/// Integer coefficients c_0 .. c_N of a truncated power series.
using SeriesTruncation = std::vector<std::int64_t>;

/// Polynomial with integer coefficients, lowest degree first.
using IntPoly = std::vector<std::int64_t>;

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("series coefficient overflow");
    return out;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("series coefficient overflow");
    return out;
}

}  // namespace detail

/// numerator / denominator expanded to degree N over Z.  The denominator's
/// constant term must be +1 or -1.
inline SeriesTruncation expand_rational_series(const IntPoly& numerator, const IntPoly& denominator, std::size_t N) {
    if (denominator.empty() || denominator[0] == 0) throw InputError("series denominator has zero constant term");
    const std::int64_t d0 = denominator[0];
    if (d0 != 1 && d0 != -1)
        throw InputError("series denominator constant term " + std::to_string(d0) + " is not a unit in Z");
    SeriesTruncation c(N + 1, 0);
    for (std::size_t n = 0; n <= N; ++n) {
        std::int64_t acc = n < numerator.size() ? numerator[n] : 0;
        for (std::size_t k = 1; k <= n && k < denominator.size(); ++k)
            acc = detail::checked_add(acc, -detail::checked_mul(denominator[k], c[n - k]));
        c[n] = d0 * acc;
    }
    return c;
}

/// Product of two truncated series, kept to the shorter length.
inline SeriesTruncation multiply_truncated(const SeriesTruncation& a, const SeriesTruncation& b) {
    const std::size_t n = std::min(a.size(), b.size());
    SeriesTruncation out(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j)
            out[i + j] = detail::checked_add(out[i + j], detail::checked_mul(a[i], b[j]));
    return out;
}

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = detail::checked_add(out[i + j], detail::checked_mul(a[i], b[j]));
    return out;
}

template <class T>
std::string format_sequence(const std::vector<T>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

}  // namespace radcube
