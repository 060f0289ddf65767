#include "supercong/padic_core.hpp"

#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <tuple>
#include <utility>

namespace supercong {

namespace {

using i128 = __int128;

std::int64_t checked_narrow(i128 v, const char* op) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw Error(ErrorCode::InvalidArgument, std::string("PRational overflow in ") + op);
    }
    return static_cast<std::int64_t>(v);
}

std::uint64_t reduce_signed(std::int64_t v, std::uint64_t m) {
    const auto sm = static_cast<i128>(m);
    i128 r = static_cast<i128>(v) % sm;
    if (r < 0) r += sm;
    return static_cast<std::uint64_t>(r);
}

std::pair<std::int64_t, std::int64_t> normalize(i128 num, i128 den, const char* op) {
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "PRational division by zero");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 a = num < 0 ? -num : num;
    i128 b = den;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    return {checked_narrow(num, op), checked_narrow(den, op)};
}

PRational make_checked(i128 num, i128 den, const char* op) {
    const auto [n, d] = normalize(num, den, op);
    return PRational(n, d);
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// ModulusContext

ModulusContext::ModulusContext(std::uint32_t p, int k, std::uint64_t bound)
    : p_(p), k_(k), modulus_(1), bound_(bound) {
    if (p < 5 || !is_prime(p)) {
        throw Error(ErrorCode::InvalidArgument, "modulus context needs a prime p >= 5, got " +
                                                    std::to_string(p));
    }
    if (k < 1 || k > 3) {
        throw Error(ErrorCode::InvalidArgument, "exponent k must be 1, 2 or 3");
    }
    if (bound > kMaxModulusBound) {
        throw Error(ErrorCode::InvalidArgument, "modulus bound may not exceed 2^32");
    }
    for (int i = 0; i < k; ++i) modulus_ *= p;
    if (modulus_ >= bound) {
        throw Error(ErrorCode::InvalidArgument, std::to_string(p) + "^" + std::to_string(k) +
                                                    " exceeds the configured modulus bound");
    }
}

// ---------------------------------------------------------------------------
// Residue

Residue::Residue(const ModulusContext& ctx, std::int64_t value)
    : ctx_(ctx), value_(reduce_signed(value, ctx.modulus())) {}

Residue Residue::from_canonical(const ModulusContext& ctx, std::uint64_t value) {
    return Residue(ctx, value % ctx.modulus(), 0);
}

void Residue::require_same(const Residue& rhs) const {
    if (!(ctx_ == rhs.ctx_)) {
        throw Error(ErrorCode::InvalidArgument, "residues belong to different moduli");
    }
}

Residue Residue::operator-() const {
    return Residue(ctx_, value_ == 0 ? 0 : ctx_.modulus() - value_, 0);
}

Residue& Residue::operator+=(const Residue& rhs) {
    require_same(rhs);
    value_ += rhs.value_;
    if (value_ >= ctx_.modulus()) value_ -= ctx_.modulus();
    return *this;
}

Residue& Residue::operator-=(const Residue& rhs) {
    require_same(rhs);
    value_ = value_ >= rhs.value_ ? value_ - rhs.value_ : value_ + ctx_.modulus() - rhs.value_;
    return *this;
}

Residue& Residue::operator*=(const Residue& rhs) {
    require_same(rhs);
    value_ = (value_ * rhs.value_) % ctx_.modulus();
    return *this;
}

Residue Residue::pow(std::uint64_t e) const {
    Residue base = *this;
    Residue acc(ctx_, 1);
    while (e != 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// PRational

PRational::PRational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "PRational with zero denominator");
    std::tie(num_, den_) = normalize(num, den, "construction");
}

PRational PRational::operator-() const { return make_checked(-static_cast<i128>(num_), den_, "negation"); }

PRational operator+(const PRational& a, const PRational& b) {
    return make_checked(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                        static_cast<i128>(a.den_) * b.den_, "addition");
}

PRational operator-(const PRational& a, const PRational& b) { return a + (-b); }

PRational operator*(const PRational& a, const PRational& b) {
    return make_checked(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_,
                        "multiplication");
}

PRational operator/(const PRational& a, const PRational& b) {
    if (b.num_ == 0) throw Error(ErrorCode::InvalidArgument, "PRational division by zero");
    return make_checked(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_,
                        "division");
}

std::strong_ordering operator<=>(const PRational& a, const PRational& b) noexcept {
    return static_cast<i128>(a.num_) * b.den_ <=> static_cast<i128>(b.num_) * a.den_;
}

std::string PRational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

// ---------------------------------------------------------------------------
// free functions

std::vector<std::uint32_t> sieve_primes(std::int64_t lo, std::int64_t hi) {
    std::vector<std::uint32_t> out;
    if (hi < 5 || lo > hi) return out;
    if (hi > std::numeric_limits<std::uint32_t>::max()) {
        throw Error(ErrorCode::InvalidArgument, "prime range upper bound too large");
    }
    const auto n = static_cast<std::size_t>(hi);
    std::vector<bool> composite(n + 1, false);
    for (std::size_t i = 2; i * i <= n; ++i) {
        if (composite[i]) continue;
        for (std::size_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    const std::size_t start = static_cast<std::size_t>(std::max<std::int64_t>(lo, 5));
    for (std::size_t i = start; i <= n; ++i) {
        if (!composite[i]) out.push_back(static_cast<std::uint32_t>(i));
    }
    return out;
}

Residue mod_inverse(const Residue& x) {
    const auto m = static_cast<std::int64_t>(x.modulus());
    std::int64_t old_r = static_cast<std::int64_t>(x.value()), r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) {
        throw Error(ErrorCode::NotInvertible, std::to_string(x.value()) + " is not invertible mod " +
                                                  std::to_string(x.modulus()));
    }
    return Residue(x.context(), old_s);
}

Residue reduce_rational(const PRational& a, const ModulusContext& ctx) {
    if (!a.is_p_integral(ctx.p())) {
        throw Error(ErrorCode::NotPAdicInteger,
                    a.to_string() + " is not a " + std::to_string(ctx.p()) + "-adic integer");
    }
    return Residue(ctx, a.num()) * mod_inverse(Residue(ctx, a.den()));
}

std::uint32_t least_residue(const PRational& a, std::uint32_t p) {
    return static_cast<std::uint32_t>(reduce_rational(a, ModulusContext(p, 1)).value());
}

std::uint32_t s_p(const PRational& x, std::uint32_t p) {
    const std::uint32_t r = least_residue(x, p);
    return r == 0 ? p : r;
}

// ---------------------------------------------------------------------------
// harmonic numbers

HarmonicTable::HarmonicTable(std::uint32_t p) : ctx_(p, 1), prefix_(p, 0) {
    Residue acc(ctx_, 0);
    for (std::uint32_t j = 1; j < p; ++j) {
        acc += mod_inverse(Residue(ctx_, j));
        prefix_[j] = static_cast<std::uint32_t>(acc.value());
    }
}

Residue HarmonicTable::at(std::int64_t n) const {
    if (n < 0 || n >= static_cast<std::int64_t>(prefix_.size())) {
        throw Error(ErrorCode::IndexOutOfRange, "harmonic index " + std::to_string(n) +
                                                    " outside [0, " + std::to_string(p()) + ")");
    }
    return Residue::from_canonical(ctx_, prefix_[static_cast<std::size_t>(n)]);
}

const HarmonicTable& harmonic_table(std::uint32_t p) {
    static std::mutex mutex;
    static std::map<std::uint32_t, std::unique_ptr<HarmonicTable>> tables;
    std::lock_guard lock(mutex);
    auto& slot = tables[p];
    if (!slot) slot = std::make_unique<HarmonicTable>(p);
    return *slot;
}

Residue harmonic_mod(std::int64_t n, std::uint32_t p) { return harmonic_table(p).at(n); }

Residue delta(const PRational& a, const ModulusContext& ctx) {
    if (ctx.k() < 2) throw Error(ErrorCode::InvalidArgument, "delta needs k >= 2");
    const std::uint32_t p = ctx.p();
    const PRational shifted = (a - PRational(least_residue(a, p))) / PRational(p);
    return reduce_rational(shifted, ctx.with_power(ctx.k() - 1));
}

}  // namespace supercong
