#include <random>
#include <thread>

#include "doctest.h"
#include "oracles.hpp"
#include "supercong/hyperseries.hpp"
#include "supercong/padic_gamma.hpp"

using namespace supercong;

namespace {

PRational random_padic(std::mt19937_64& rng, std::uint32_t p) {
    for (;;) {
        const auto num = static_cast<std::int64_t>(rng() % 4001) - 2000;
        const auto den = static_cast<std::int64_t>(rng() % 40) + 1;
        if (den % p != 0) return PRational(num, den);
    }
}

std::uint64_t g1_of_one_by_search(std::uint32_t p) {
    const std::uint64_t m2 = std::uint64_t{p} * p;
    const std::uint64_t t = oracle::gamma_integer(p + 1, p, m2);
    for (std::uint64_t r = 0; r < p; ++r) {
        if ((m2 - t) % m2 == (1 + p * r) % m2) return r;
    }
    throw std::logic_error("no G_1(1) found");
}

}  // namespace

TEST_CASE("gamma_p spot values") {
    for (std::uint32_t p : {5u, 7u, 11u}) {
        for (int k = 1; k <= 3; ++k) {
            const ModulusContext ctx(p, k);
            CHECK(gamma_p(PRational(1), ctx).value() == ctx.modulus() - 1);
            CHECK(gamma_p(PRational(0), ctx).value() == 1);
        }
    }
    CHECK(gamma_p(PRational(3), ModulusContext(5, 1)).value() == 3);
    CHECK(gamma_p(PRational(1, 2), ModulusContext(5, 1)).value() == 3);
    CHECK(gamma_p(PRational(1, 2), ModulusContext(5, 1)).value() == oracle::gamma_rational(1, 2, 5, 1));
}

TEST_CASE("GammaEvaluator agrees with the definition in table and direct modes") {
    std::mt19937_64 rng(99);
    for (std::uint32_t p : {5u, 7u, 13u, 17u}) {
        for (int k = 1; k <= 3; ++k) {
            const ModulusContext ctx(p, k);
            const GammaEvaluator table(ctx);
            const GammaEvaluator direct(ctx, GammaOptions{0, 0});
            CHECK(table.uses_table());
            CHECK_FALSE(direct.uses_table());
            for (int trial = 0; trial < 60; ++trial) {
                const PRational x = random_padic(rng, p);
                const std::uint64_t expected = oracle::gamma_rational(x.num(), x.den(), p, k);
                CHECK(table(x).value() == expected);
                CHECK(direct(x).value() == expected);
                CHECK(gamma_p(x, ctx).value() == expected);
            }
        }
    }
}

TEST_CASE("complexity cap") {
    const ModulusContext ctx(7, 2);
    const GammaEvaluator capped(ctx, GammaOptions{10, std::uint64_t{1} << 24});
    CHECK_FALSE(capped.uses_table());
    CHECK(capped.complexity_cap() == 10);
    CHECK(capped(PRational(9)).value() == oracle::gamma_integer(9, 7, 49));
    try {
        (void)capped(PRational(20));
        FAIL("expected CapExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CapExceeded);
    }
    CHECK(GammaEvaluator(ctx).complexity_cap() == 49);
}

TEST_CASE("gamma_p rejects non p-adic integers") {
    try {
        (void)gamma_p(PRational(1, 7), ModulusContext(7, 2));
        FAIL("expected NotPAdicInteger");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotPAdicInteger);
    }
}

TEST_CASE("G_1(1) extraction") {
    for (std::uint32_t p : sieve_primes(5, 199)) {
        const Residue r = g1_of_one(p);
        CHECK(r.modulus() == p);
        CHECK(r.value() == g1_of_one_by_search(p));
        // Plugging back: Gamma_p(1+p) = -(1 + G_1(1) p) mod p^2.
        const ModulusContext ctx2(p, 2);
        CHECK(gamma_p(PRational(1 + p), ctx2) == -Residue(ctx2, 1 + std::int64_t{p} * r.value()));
    }
}

TEST_CASE("g1 via harmonic numbers") {
    for (std::uint32_t p : {5u, 7u, 11u, 101u}) {
        CHECK(g1(PRational(1), p) == g1_of_one(p));
        CHECK(g1(PRational(0), p) == g1_of_one(p));
    }
    CHECK(g1(PRational(2), 7) == g1_of_one(7) + Residue(ModulusContext(7, 1), 1));
}

TEST_CASE("functional equations of Gamma_p") {
    std::mt19937_64 rng(1234);
    for (std::uint32_t p : sieve_primes(5, 47)) {
        for (int k = 1; k <= 3; ++k) {
            const ModulusContext ctx(p, k);
            const GammaEvaluator g(ctx);
            const Residue one(ctx, 1);
            CHECK(g(PRational(1)) == -one);

            const Residue half_sq = g(PRational(1, 2)) * g(PRational(1, 2));
            CHECK(half_sq == Residue(ctx, ((p + 1) / 2) % 2 == 0 ? 1 : -1));

            for (int trial = 0; trial < 40; ++trial) {
                const PRational x = random_padic(rng, p);
                // Reflection
                const Residue refl = g(x) * g(PRational(1) - x);
                CHECK(refl == Residue(ctx, s_p(x, p) % 2 == 0 ? 1 : -1));
                // Ratio
                const Residue rx = reduce_rational(x, ctx);
                const Residue expected_ratio = rx.is_unit() ? -rx : -one;
                CHECK(g(x + PRational(1)) == expected_ratio * g(x));
                // Congruent arguments
                const PRational shifted = x + PRational(static_cast<std::int64_t>(ctx.modulus()));
                CHECK(g(shifted) == g(x));
            }
        }
    }
}

TEST_CASE("Pochhammer link") {
    std::mt19937_64 rng(55);
    for (std::uint32_t p : {5u, 7u, 19u, 31u}) {
        const ModulusContext ctx(p, 2);
        const GammaEvaluator g(ctx);
        for (int trial = 0; trial < 100; ++trial) {
            const PRational x = random_padic(rng, p);
            const std::uint32_t r = least_residue(x, p);
            if (r == 0) continue;
            // x, ..., x+n-1 avoid pZ_p exactly when n <= p - r.
            const std::int64_t n = static_cast<std::int64_t>(rng() % (p - r + 1));
            const Residue lhs = pochhammer_mod(x, n, ctx);
            const Residue sign(ctx, n % 2 == 0 ? 1 : -1);
            CHECK(lhs == sign * g(x + PRational(n)) * mod_inverse(g(x)));
        }
    }
}

TEST_CASE("first-order perturbation") {
    std::mt19937_64 rng(77);
    for (std::uint32_t p : sieve_primes(5, 61)) {
        const ModulusContext ctx(p, 2);
        const ModulusContext ctx1(p, 1);
        const GammaEvaluator g(ctx);
        for (int trial = 0; trial < 30; ++trial) {
            const PRational a = random_padic(rng, p);
            const PRational b = random_padic(rng, p);
            const Residue t = g1(a, p) * reduce_rational(b, ctx1);
            const Residue rhs = g(a) * Residue(ctx, 1 + std::int64_t{p} * t.value());
            CHECK(g(a + b * PRational(p)) == rhs);
        }
    }
}

TEST_CASE("concurrent evaluation is value-identical") {
    const ModulusContext ctx(31, 3);
    const GammaEvaluator table(ctx);
    const GammaEvaluator direct(ctx, GammaOptions{0, 0});
    std::vector<std::uint64_t> expected;
    for (int i = 0; i < 64; ++i) expected.push_back(oracle::gamma_rational(i * 977 + 5, 1, 31, 3));

    std::vector<std::vector<std::uint64_t>> seen(4);
    {
        std::vector<std::jthread> threads;
        for (std::size_t t = 0; t < seen.size(); ++t) {
            threads.emplace_back([&, t] {
                for (int i = 0; i < 64; ++i) {
                    const GammaEvaluator& g = (i + t) % 2 ? table : direct;
                    seen[t].push_back(g(PRational(i * 977 + 5)).value());
                }
            });
        }
    }
    for (const auto& s : seen) CHECK(s == expected);
}
