#include "supercong/identities.hpp"

#include <map>
#include <mutex>

namespace supercong {

namespace {

Rational signed_power_of_two_inverse(std::int64_t k, long sign_base, unsigned long two_exp) {
    // (sign_base / 2^two_exp)^k
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, two_exp * static_cast<unsigned long>(k));
    Rational out(Integer(sign_base == -1 && k % 2 != 0 ? -1 : 1), den);
    out.canonicalize();
    return out;
}

Integer central(std::int64_t k) { return binomial(2 * k, k); }

void require_even(std::int64_t n, const char* name) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, std::string(name) + ": n must be >= 0");
    if (n % 2 != 0) throw Error(ErrorCode::OddInput, std::string(name) + ": n must be even");
}

// C(n, n/2) / (-4)^(n/2)
Rational b8_value(std::int64_t n) {
    const std::int64_t h = n / 2;
    return Rational(binomial(n, h)) * signed_power_of_two_inverse(h, -1, 2);
}

// C(n, n/2)^2 / 4^n
Rational b9_value(std::int64_t n) {
    const Integer c = binomial(n, n / 2);
    return Rational(c * c) * signed_power_of_two_inverse(n, 1, 2);
}

// Summand shapes shared by B8/B17 (`squared` false) and B9/B18 (`squared` true).
Rational summand(std::int64_t m, std::int64_t k, bool squared) {
    Integer c = central(k);
    if (squared) c *= central(k);
    const Rational sign_pow = squared ? signed_power_of_two_inverse(k, -1, 2)
                                      : signed_power_of_two_inverse(k, -1, 1);
    return Rational(c * binomial(m + k, 2 * k)) * sign_pow;
}

IdentityCheck compare(Rational lhs, Rational rhs) {
    lhs.canonicalize();
    rhs.canonicalize();
    const bool pass = lhs == rhs;
    return IdentityCheck{pass, std::move(lhs), std::move(rhs)};
}

template <class Fn>
Rational memoized(std::map<std::int64_t, Rational>& memo, std::mutex& mutex, std::int64_t n, Fn compute) {
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(n); it != memo.end()) return it->second;
    }
    Rational value = compute(n);
    std::lock_guard lock(mutex);
    memo.emplace(n, value);
    return value;
}

}  // namespace

std::string to_string(IdentityId id) {
    switch (id) {
        case IdentityId::B8: return "IDENT_B8";
        case IdentityId::B9: return "IDENT_B9";
        case IdentityId::B17: return "IDENT_B17";
        case IdentityId::B18: return "IDENT_B18";
        case IdentityId::B12: return "IDENT_B12";
        case IdentityId::A7: return "IDENT_A7";
        case IdentityId::AnZero: return "IDENT_AN";
        case IdentityId::BnZero: return "IDENT_BN";
        case IdentityId::ARecurrence: return "IDENT_AREC";
        case IdentityId::BRecurrence: return "IDENT_BREC";
    }
    return "IDENT_?";
}

std::optional<IdentityId> identity_from_string(const std::string& name) {
    for (IdentityId id : kAllIdentities) {
        if (to_string(id) == name) return id;
    }
    return std::nullopt;
}

bool requires_even(IdentityId id) {
    switch (id) {
        case IdentityId::B8:
        case IdentityId::B9:
        case IdentityId::B17:
        case IdentityId::B18:
        case IdentityId::B12:
            return true;
        default:
            return false;
    }
}

Rational harmonic_exact(std::int64_t m) {
    if (m < 0) throw Error(ErrorCode::InvalidArgument, "negative harmonic index");
    static std::mutex mutex;
    static std::vector<Rational> cache{Rational(0)};
    std::lock_guard lock(mutex);
    while (static_cast<std::int64_t>(cache.size()) <= m) {
        const auto j = static_cast<long>(cache.size());
        Rational next = cache.back() + Rational(1, j);
        next.canonicalize();
        cache.push_back(std::move(next));
    }
    return cache[static_cast<std::size_t>(m)];
}

IdentityCheck check_b8(std::int64_t n) {
    require_even(n, "IDENT_B8");
    Rational lhs(0);
    for (std::int64_t k = 0; k <= n; ++k) lhs += summand(n, k, false);
    return compare(lhs, b8_value(n));
}

IdentityCheck check_b9(std::int64_t n) {
    require_even(n, "IDENT_B9");
    Rational lhs(0);
    for (std::int64_t k = 0; k <= n; ++k) lhs += summand(n, k, true);
    return compare(lhs, b9_value(n));
}

IdentityCheck check_b17(std::int64_t n) {
    require_even(n, "IDENT_B17");
    const Rational hn = harmonic_exact(n);
    Rational lhs(0);
    for (std::int64_t k = 1; k <= n; ++k) lhs += summand(n, k, false) * (harmonic_exact(n + k) - hn);
    const Rational rhs = b8_value(n) * (hn / 2 - harmonic_exact(n / 2) / 2);
    return compare(lhs, rhs);
}

IdentityCheck check_b18(std::int64_t n) {
    require_even(n, "IDENT_B18");
    const Rational hn = harmonic_exact(n);
    Rational lhs(0);
    for (std::int64_t k = 1; k <= n; ++k) lhs += summand(n, k, true) * (harmonic_exact(n + k) - hn);
    const Rational rhs = b9_value(n) * (Rational(3, 2) * hn - harmonic_exact(n / 2));
    return compare(lhs, rhs);
}

IdentityCheck check_gauss_half(std::int64_t n) {
    require_even(n, "gauss_half");
    return compare(truncated_pFq_exact(spec_2f1_half(PRational(n), n)), b8_value(n));
}

IdentityCheck check_clausen_truncated(std::int64_t n) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "clausen: n must be >= 0");
    // Both series terminate at k = n; run past it to exercise the vanishing.
    const std::int64_t truncation = 2 * n + 1;
    const Rational f21 = truncated_pFq_exact(spec_2f1_half(PRational(n), truncation));
    return compare(truncated_pFq_exact(spec_3f2_one(PRational(n), truncation)), f21 * f21);
}

Rational a_n(std::int64_t n) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "A_n: n must be >= 0");
    static std::map<std::int64_t, Rational> memo;
    static std::mutex mutex;
    return memoized(memo, mutex, n, [](std::int64_t n) {
        const std::int64_t m = 2 * n;
        const Rational tail = -3 * harmonic_exact(m) + harmonic_exact(n);
        Rational sum(0);
        for (std::int64_t k = 0; k <= m; ++k) {
            sum += summand(m, k, false) * (2 * harmonic_exact(m + k) + tail);
        }
        sum.canonicalize();
        return sum;
    });
}

Rational b_n(std::int64_t n) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "B_n: n must be >= 0");
    static std::map<std::int64_t, Rational> memo;
    static std::mutex mutex;
    return memoized(memo, mutex, n, [](std::int64_t n) {
        const std::int64_t m = 2 * n;
        const Rational tail = -5 * harmonic_exact(m) + 2 * harmonic_exact(n);
        Rational sum(0);
        for (std::int64_t k = 0; k <= m; ++k) {
            sum += summand(m, k, true) * (2 * harmonic_exact(m + k) + tail);
        }
        sum.canonicalize();
        return sum;
    });
}

IdentityCheck check_a_recurrence(std::int64_t n) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "recurrence: n must be >= 0");
    const Integer big_n(static_cast<long>(n));
    const Rational lhs = Rational(2 * big_n + 1) * a_n(n) + Rational(2 * (big_n + 1)) * a_n(n + 1);
    return compare(lhs, Rational(0));
}

IdentityCheck check_b_recurrence(std::int64_t n) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "recurrence: n must be >= 0");
    const Integer x(static_cast<long>(n));
    const Integer c0 = 4 * (x + 1) * (x + 1) * (2 * x + 1) * (2 * x + 1) * (4 * x + 7);
    const Integer c1 =
        (4 * x + 5) * (32 * x * x * x * x + 160 * x * x * x + 296 * x * x + 240 * x + 71);
    const Integer c2 = 4 * (x + 2) * (x + 2) * (2 * x + 3) * (2 * x + 3) * (4 * x + 3);
    const Rational lhs =
        Rational(c0) * b_n(n) - Rational(c1) * b_n(n + 1) + Rational(c2) * b_n(n + 2);
    return compare(lhs, Rational(0));
}

IdentityCheck check_identity(IdentityId id, std::int64_t n) {
    switch (id) {
        case IdentityId::B8: return check_b8(n);
        case IdentityId::B9: return check_b9(n);
        case IdentityId::B17: return check_b17(n);
        case IdentityId::B18: return check_b18(n);
        case IdentityId::B12: return check_gauss_half(n);
        case IdentityId::A7: return check_clausen_truncated(n);
        case IdentityId::AnZero: return compare(a_n(n), Rational(0));
        case IdentityId::BnZero: return compare(b_n(n), Rational(0));
        case IdentityId::ARecurrence: return check_a_recurrence(n);
        case IdentityId::BRecurrence: return check_b_recurrence(n);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown identity");
}

std::vector<IdentityRecord> sweep_identity(IdentityId id, std::int64_t n_max) {
    std::int64_t hi = n_max;
    if (id == IdentityId::ARecurrence) hi = n_max - 1;
    if (id == IdentityId::BRecurrence) hi = n_max - 2;
    const std::int64_t step = requires_even(id) ? 2 : 1;
    std::vector<IdentityRecord> out;
    for (std::int64_t n = 0; n <= hi; n += step) out.push_back({id, n, check_identity(id, n)});
    return out;
}

IdentityReport summarize(IdentityId id, const std::vector<IdentityRecord>& records) {
    IdentityReport report;
    report.id = to_string(id);
    for (const auto& r : records) {
        if (r.id != id) continue;
        if (report.checked == 0) report.n_lo = r.n;
        report.n_hi = r.n;
        ++report.checked;
        if (!r.check.pass && !report.failure) report.failure = IdentityFailure{r.n, r.check.lhs, r.check.rhs};
    }
    return report;
}

IdentityReport check_recurrences(std::int64_t n_max) {
    IdentityReport merged;
    merged.id = "RECURRENCES";
    merged.n_lo = 0;
    merged.n_hi = n_max;
    for (IdentityId id : {IdentityId::AnZero, IdentityId::BnZero, IdentityId::ARecurrence,
                          IdentityId::BRecurrence}) {
        const IdentityReport part = summarize(id, sweep_identity(id, n_max));
        merged.checked += part.checked;
        if (!merged.failure && part.failure) merged.failure = part.failure;
    }
    return merged;
}

}  // namespace supercong
