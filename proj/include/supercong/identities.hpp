#pragma once

// Exact certification of the binomial-harmonic identities behind the
// supercongruences, together with the recurrences that prove them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "supercong/hyperseries.hpp"

namespace supercong {

enum class IdentityId {
    B8,           // sum C(2k,k) C(n+k,2k) (-1/2)^k = C(n,n/2) / (-4)^(n/2)
    B9,           // sum C(2k,k)^2 C(n+k,2k) (-1/4)^k = C(n,n/2)^2 / 4^n
    B17,          // B8 weighted by H_{n+k} - H_n
    B18,          // B9 weighted by H_{n+k} - H_n
    B12,          // 2F1(-n, n+1; 1; 1/2) = C(n,n/2) / (-4)^(n/2)
    A7,           // 3F2(1/2, -n, n+1; 1, 1; 1) = 2F1(-n, n+1; 1; 1/2)^2
    AnZero,       // A_n = 0
    BnZero,       // B_n = 0
    ARecurrence,  // (2n+1) A_n + 2(n+1) A_{n+1} = 0
    BRecurrence,  // three-term recurrence for B_n
};

inline constexpr IdentityId kAllIdentities[] = {
    IdentityId::B8,     IdentityId::B9,     IdentityId::B17,         IdentityId::B18,
    IdentityId::B12,    IdentityId::A7,     IdentityId::AnZero,      IdentityId::BnZero,
    IdentityId::ARecurrence, IdentityId::BRecurrence,
};

/// "IDENT_B8", "IDENT_AREC", ...
std::string to_string(IdentityId id);
std::optional<IdentityId> identity_from_string(const std::string& name);

/// True for identities stated only for even n.
bool requires_even(IdentityId id);

struct IdentityCheck {
    bool pass = false;
    Rational lhs;
    Rational rhs;
};

/// H_m as an exact rational, cached process-wide.
Rational harmonic_exact(std::int64_t m);

/// The even-n identities throw OddInput for odd n.
IdentityCheck check_b8(std::int64_t n);
IdentityCheck check_b9(std::int64_t n);
IdentityCheck check_b17(std::int64_t n);
IdentityCheck check_b18(std::int64_t n);
IdentityCheck check_gauss_half(std::int64_t n);
IdentityCheck check_clausen_truncated(std::int64_t n);

Rational a_n(std::int64_t n);
Rational b_n(std::int64_t n);

/// lhs is the recurrence combination evaluated at n, rhs is 0.
IdentityCheck check_a_recurrence(std::int64_t n);
IdentityCheck check_b_recurrence(std::int64_t n);

IdentityCheck check_identity(IdentityId id, std::int64_t n);

struct IdentityRecord {
    IdentityId id;
    std::int64_t n;
    IdentityCheck check;
};

/// Every admissible n for `id` up to n_max, ascending. Even-only identities
/// skip odd n; ARecurrence stops at n_max-1 and BRecurrence at n_max-2 so
/// that no A_n or B_n beyond n_max is touched.
std::vector<IdentityRecord> sweep_identity(IdentityId id, std::int64_t n_max);

struct IdentityFailure {
    std::int64_t n;
    Rational lhs;
    Rational rhs;
};

struct IdentityReport {
    std::string id;
    std::int64_t n_lo = 0;
    std::int64_t n_hi = 0;
    std::int64_t checked = 0;
    std::optional<IdentityFailure> failure;

    bool passed() const noexcept { return !failure.has_value(); }
};

IdentityReport summarize(IdentityId id, const std::vector<IdentityRecord>& records);

/// A_n = B_n = 0 for n <= n_max and both recurrences on their ranges.
IdentityReport check_recurrences(std::int64_t n_max);

}  // namespace supercong
