#include "doctest.h"
#include "oracles.hpp"
#include "supercong/identities.hpp"

using namespace supercong;

namespace {

Rational q(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

Rational pow_q(const Rational& b, int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

// Direct sums with Pascal binomials and sum_{i=1}^k 1/(n+i) written out.
Rational b8_sum(int n) {
    Rational s = 0;
    for (int k = 0; k <= n; ++k) s += Rational(oracle::binom(2 * k, k) * oracle::binom(n + k, 2 * k)) * pow_q(q(-1, 2), k);
    return s;
}

Rational b9_sum(int n) {
    Rational s = 0;
    for (int k = 0; k <= n; ++k) {
        const mpz_class c = oracle::binom(2 * k, k);
        s += Rational(c * c * oracle::binom(n + k, 2 * k)) * pow_q(q(-1, 4), k);
    }
    return s;
}

Rational partial(int n, int k) {
    Rational s = 0;
    for (int i = 1; i <= k; ++i) s += q(1, n + i);
    return s;
}

Rational b17_sum(int n) {
    Rational s = 0;
    for (int k = 0; k <= n; ++k) {
        s += Rational(oracle::binom(2 * k, k) * oracle::binom(n + k, 2 * k)) * pow_q(q(-1, 2), k) * partial(n, k);
    }
    return s;
}

Rational b18_sum(int n) {
    Rational s = 0;
    for (int k = 0; k <= n; ++k) {
        const mpz_class c = oracle::binom(2 * k, k);
        s += Rational(c * c * oracle::binom(n + k, 2 * k)) * pow_q(q(-1, 4), k) * partial(n, k);
    }
    return s;
}

Rational an_sum(int n) {
    const int m = 2 * n;
    Rational s = 0;
    for (int k = 0; k <= m; ++k) {
        const Rational w = 2 * oracle::harmonic_exact(m + k) - 3 * oracle::harmonic_exact(m) + oracle::harmonic_exact(n);
        s += Rational(oracle::binom(2 * k, k) * oracle::binom(m + k, 2 * k)) * pow_q(q(-1, 2), k) * w;
    }
    return s;
}

Rational bn_sum(int n) {
    const int m = 2 * n;
    Rational s = 0;
    for (int k = 0; k <= m; ++k) {
        const mpz_class c = oracle::binom(2 * k, k);
        const Rational w = 2 * oracle::harmonic_exact(m + k) - 5 * oracle::harmonic_exact(m) + 2 * oracle::harmonic_exact(n);
        s += Rational(c * c * oracle::binom(m + k, 2 * k)) * pow_q(q(-1, 4), k) * w;
    }
    return s;
}

}  // namespace

TEST_CASE("harmonic_exact") {
    CHECK(harmonic_exact(0) == 0);
    CHECK(harmonic_exact(4) == q(25, 12));
    for (int n = 0; n < 60; n += 7) CHECK(harmonic_exact(n) == oracle::harmonic_exact(n));
}

TEST_CASE("check_b8") {
    auto r0 = check_b8(0);
    CHECK(r0.pass);
    CHECK(r0.lhs == 1);
    auto r2 = check_b8(2);
    CHECK(r2.pass);
    CHECK(r2.lhs == q(-1, 2));
    CHECK(r2.rhs == q(-1, 2));
    auto r4 = check_b8(4);
    CHECK(r4.pass);
    CHECK(r4.lhs == q(3, 8));
    for (int n = 0; n <= 30; n += 2) CHECK(check_b8(n).lhs == b8_sum(n));
    CHECK_THROWS_AS(check_b8(3), Error);
    try {
        check_b8(5);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OddInput);
    }
}

TEST_CASE("check_b9") {
    CHECK(check_b9(0).pass);
    auto r2 = check_b9(2);
    CHECK(r2.pass);
    CHECK(r2.lhs == q(1, 4));
    auto r6 = check_b9(6);
    CHECK(r6.pass);
    CHECK(r6.lhs == b9_sum(6));
    CHECK_THROWS_AS(check_b9(1), Error);
}

TEST_CASE("check_b17 and the partial-sum rewriting") {
    auto r0 = check_b17(0);
    CHECK(r0.pass);
    CHECK(r0.lhs == 0);
    auto r2 = check_b17(2);
    CHECK(r2.pass);
    CHECK(r2.lhs == q(-1, 8));
    CHECK(r2.rhs == q(-1, 8));
    for (int n : {8, 14, 20}) {
        const auto r = check_b17(n);
        CHECK(r.pass);
        CHECK(r.lhs == b17_sum(n));
    }
}

TEST_CASE("check_b18") {
    CHECK(check_b18(0).pass);
    CHECK(check_b18(0).lhs == 0);
    for (int n : {2, 10}) {
        const auto r = check_b18(n);
        CHECK(r.pass);
        CHECK(r.lhs == b18_sum(n));
    }
}

TEST_CASE("A_n and B_n") {
    CHECK(a_n(0) == 0);
    CHECK(b_n(0) == 0);
    CHECK(b_n(1) == 0);
    CHECK(a_n(1) == 0);
    CHECK(b_n(2) == 0);
    for (int n = 0; n <= 8; ++n) {
        CHECK(an_sum(n) == 0);
        CHECK(bn_sum(n) == 0);
        CHECK(a_n(n) == an_sum(n));
        CHECK(b_n(n) == bn_sum(n));
    }
}

TEST_CASE("recurrences") {
    const auto slot0 = check_a_recurrence(0);
    CHECK(slot0.pass);
    CHECK(slot0.lhs == 0);
    CHECK(check_b_recurrence(0).pass);

    const IdentityReport report = check_recurrences(50);
    CHECK(report.passed());
    // 51 A_n + 51 B_n + 50 A-slots + 49 B-slots
    CHECK(report.checked == 51 + 51 + 50 + 49);
}

TEST_CASE("check_clausen_truncated") {
    CHECK(check_clausen_truncated(0).pass);
    CHECK(check_clausen_truncated(0).lhs == 1);
    const auto r2 = check_clausen_truncated(2);
    CHECK(r2.pass);
    CHECK(r2.lhs == q(1, 4));
    const auto r7 = check_clausen_truncated(7);
    CHECK(r7.pass);
    const Rational f21 = oracle::series({q(-7), q(8)}, {q(1)}, q(1, 2), 7);
    CHECK(r7.lhs == oracle::series({q(1, 2), q(-7), q(8)}, {q(1), q(1)}, q(1), 7));
    CHECK(r7.rhs == f21 * f21);
}

TEST_CASE("check_gauss_half") {
    CHECK(check_gauss_half(0).lhs == 1);
    CHECK(check_gauss_half(2).lhs == q(-1, 2));
    const auto r12 = check_gauss_half(12);
    CHECK(r12.pass);
    CHECK(r12.lhs == oracle::series({q(-12), q(13)}, {q(1)}, q(1, 2), 12));
}

TEST_CASE("sweeps and reports") {
    const auto b8 = sweep_identity(IdentityId::B8, 10);
    CHECK(b8.size() == 6);
    CHECK(b8.back().n == 10);
    CHECK(sweep_identity(IdentityId::A7, 10).size() == 11);
    CHECK(sweep_identity(IdentityId::ARecurrence, 10).back().n == 9);
    CHECK(sweep_identity(IdentityId::BRecurrence, 10).back().n == 8);

    IdentityReport ok = summarize(IdentityId::B8, b8);
    CHECK(ok.passed());
    CHECK(ok.n_lo == 0);
    CHECK(ok.n_hi == 10);
    CHECK(ok.checked == 6);

    auto tampered = b8;
    tampered[3].check.pass = false;
    const IdentityReport bad = summarize(IdentityId::B8, tampered);
    CHECK_FALSE(bad.passed());
    CHECK(bad.failure->n == 6);

    for (IdentityId id : kAllIdentities) CHECK(identity_from_string(to_string(id)) == id);
    CHECK_FALSE(identity_from_string("IDENT_NOPE"));
}
