#pragma once

// Exact arithmetic in Z/p^k for primes p >= 5 and k in {1,2,3}, plus the
// rational p-adic integers that feed it.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "supercong/error.hpp"

namespace supercong {

/// Moduli at or above this bound are rejected unless the caller raises it.
/// Products of two residues must fit in 64 bits, so the bound may not exceed 2^32.
inline constexpr std::uint64_t kDefaultModulusBound = std::uint64_t{1} << 31;
inline constexpr std::uint64_t kMaxModulusBound = std::uint64_t{1} << 32;

bool is_prime(std::uint64_t n) noexcept;

class ModulusContext {
public:
    /// Throws InvalidArgument unless p is a prime >= 5, k is 1..3 and p^k < bound.
    ModulusContext(std::uint32_t p, int k, std::uint64_t bound = kDefaultModulusBound);

    std::uint32_t p() const noexcept { return p_; }
    int k() const noexcept { return k_; }
    std::uint64_t modulus() const noexcept { return modulus_; }

    /// Same prime, different exponent.
    ModulusContext with_power(int k) const { return ModulusContext(p_, k, bound_); }

    friend bool operator==(const ModulusContext& a, const ModulusContext& b) noexcept {
        return a.p_ == b.p_ && a.k_ == b.k_;
    }

private:
    std::uint32_t p_;
    int k_;
    std::uint64_t modulus_;
    std::uint64_t bound_;
};

/// Canonical representative in [0, p^k). Mixing residues of different
/// contexts throws InvalidArgument.
class Residue {
public:
    Residue(const ModulusContext& ctx, std::int64_t value);

    static Residue from_canonical(const ModulusContext& ctx, std::uint64_t value);

    std::uint64_t value() const noexcept { return value_; }
    const ModulusContext& context() const noexcept { return ctx_; }
    std::uint64_t modulus() const noexcept { return ctx_.modulus(); }

    bool is_zero() const noexcept { return value_ == 0; }
    bool is_unit() const noexcept { return value_ % ctx_.p() != 0; }

    Residue operator-() const;
    Residue& operator+=(const Residue& rhs);
    Residue& operator-=(const Residue& rhs);
    Residue& operator*=(const Residue& rhs);

    friend Residue operator+(Residue a, const Residue& b) { return a += b; }
    friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
    friend Residue operator*(Residue a, const Residue& b) { return a *= b; }

    Residue pow(std::uint64_t e) const;

    friend bool operator==(const Residue& a, const Residue& b) noexcept {
        return a.ctx_ == b.ctx_ && a.value_ == b.value_;
    }

private:
    Residue(const ModulusContext& ctx, std::uint64_t canonical, int /*tag*/)
        : ctx_(ctx), value_(canonical) {}
    void require_same(const Residue& rhs) const;

    ModulusContext ctx_;
    std::uint64_t value_;
};

/// Reduced fraction num/den with den >= 1. Arithmetic throws InvalidArgument
/// on 64-bit overflow.
class PRational {
public:
    PRational(std::int64_t num = 0, std::int64_t den = 1);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }
    bool is_p_integral(std::uint32_t p) const noexcept { return den_ % p != 0; }

    PRational operator-() const;
    friend PRational operator+(const PRational& a, const PRational& b);
    friend PRational operator-(const PRational& a, const PRational& b);
    friend PRational operator*(const PRational& a, const PRational& b);
    friend PRational operator/(const PRational& a, const PRational& b);

    friend bool operator==(const PRational& a, const PRational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const PRational& a, const PRational& b) noexcept;

    /// "n" for integers, "n/d" otherwise.
    std::string to_string() const;

private:
    std::int64_t num_;
    std::int64_t den_;
};

/// Primes p with p >= 5 and lo <= p <= hi, ascending. Empty when lo > hi.
std::vector<std::uint32_t> sieve_primes(std::int64_t lo, std::int64_t hi);

/// Extended Euclid; throws NotInvertible when p divides x.
Residue mod_inverse(const Residue& x);

/// Image of a in Z/p^k; throws NotPAdicInteger when p divides a.den().
Residue reduce_rational(const PRational& a, const ModulusContext& ctx);

/// <a>_p: the r in [0, p) with a = r (mod p).
std::uint32_t least_residue(const PRational& a, std::uint32_t p);

inline bool least_residue_is_even(const PRational& a, std::uint32_t p) {
    return least_residue(a, p) % 2 == 0;
}

/// s_p(x) in {1, ..., p} with s_p(x) = x (mod p).
std::uint32_t s_p(const PRational& x, std::uint32_t p);

/// Prefix sums H_0..H_{p-1} mod p.
class HarmonicTable {
public:
    explicit HarmonicTable(std::uint32_t p);

    std::uint32_t p() const noexcept { return ctx_.p(); }
    /// Throws IndexOutOfRange when n >= p.
    Residue at(std::int64_t n) const;

private:
    ModulusContext ctx_;
    std::vector<std::uint32_t> prefix_;
};

/// Process-wide table for p, built once on first request.
const HarmonicTable& harmonic_table(std::uint32_t p);

/// H_n mod p for 0 <= n < p.
Residue harmonic_mod(std::int64_t n, std::uint32_t p);

/// (a - <a>_p)/p reduced mod p^(k-1). Requires ctx.k() >= 2.
Residue delta(const PRational& a, const ModulusContext& ctx);

}  // namespace supercong
