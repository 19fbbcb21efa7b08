#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace radcube {

/// Raised for malformed or inconsistent caller input (shape mismatch,
/// mixed moduli, unparsable files, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operation's mathematical precondition fails on valid
/// input (Gorenstein ring where non-Gorenstein is required, Ext not
/// vanishing, ...).
class HypothesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Residue = std::uint32_t;

/// The prime field F_p.  Elements are plain residues in [0, p); the field
/// object is the shared context that every matrix of one computation carries.
class PrimeField {
public:
    PrimeField() = default;

    explicit PrimeField(std::uint64_t p) : p_(static_cast<Residue>(p)) {
        if (p < 2 || p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
            throw InputError("modulus " + std::to_string(p) + " is not a prime in [2, 2^31)");
        }
    }

    [[nodiscard]] Residue modulus() const noexcept { return p_; }

    [[nodiscard]] Residue reduce(std::int64_t v) const noexcept {
        auto m = static_cast<std::int64_t>(p_);
        auto r = v % m;
        return static_cast<Residue>(r < 0 ? r + m : r);
    }

    [[nodiscard]] Residue add(Residue a, Residue b) const noexcept {
        auto s = std::uint64_t{a} + b;
        return static_cast<Residue>(s >= p_ ? s - p_ : s);
    }
    [[nodiscard]] Residue sub(Residue a, Residue b) const noexcept {
        return a >= b ? a - b : static_cast<Residue>(std::uint64_t{a} + p_ - b);
    }
    [[nodiscard]] Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
    [[nodiscard]] Residue mul(Residue a, Residue b) const noexcept {
        return static_cast<Residue>(std::uint64_t{a} * b % p_);
    }

    [[nodiscard]] Residue pow(Residue a, std::uint64_t n) const noexcept {
        std::uint64_t base = a % p_, acc = 1;
        while (n) {
            if (n & 1U) acc = acc * base % p_;
            base = base * base % p_;
            n >>= 1U;
        }
        return static_cast<Residue>(acc);
    }

    [[nodiscard]] Residue inv(Residue a) const {
        if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
        return pow(a, p_ - 2);
    }

    /// Representative in (-p/2, p/2], used for printing.
    [[nodiscard]] std::int64_t balanced(Residue a) const noexcept {
        return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
    }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

    static bool is_prime(std::uint64_t n) noexcept {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) return false;
        }
        return true;
    }

private:
    Residue p_ = 2;
};

inline void require_same_field(const PrimeField& a, const PrimeField& b) {
    if (a != b) {
        throw InputError("mixed moduli: " + std::to_string(a.modulus()) + " vs " +
                         std::to_string(b.modulus()));
    }
}

}  // namespace radcube
