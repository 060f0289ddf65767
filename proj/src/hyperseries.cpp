#include "supercong/hyperseries.hpp"

namespace supercong {

Rational to_rational(const PRational& a) {
    Rational r(Integer(static_cast<long>(a.num())), Integer(static_cast<long>(a.den())));
    r.canonicalize();
    return r;
}

Rational pochhammer_exact(const Rational& a, std::int64_t k) {
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative Pochhammer index");
    Rational acc(1);
    for (std::int64_t i = 0; i < k; ++i) {
        acc *= a + static_cast<long>(i);
        if (acc == 0) break;
    }
    return acc;
}

Residue pochhammer_mod(const PRational& a, std::int64_t k, const ModulusContext& ctx) {
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative Pochhammer index");
    const Residue base = reduce_rational(a, ctx);
    Residue acc(ctx, 1);
    for (std::int64_t i = 0; i < k && !acc.is_zero(); ++i) acc *= base + Residue(ctx, i);
    return acc;
}

Integer binomial(std::int64_t m, std::int64_t j) {
    if (j < 0 || m < 0 || j > m) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(j));
    return out;
}

Rational generalized_binomial(const Rational& x, std::int64_t j) {
    if (j < 0) return 0;
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(j));
    Rational out = pochhammer_exact(x - static_cast<long>(j) + 1, j) / Rational(fact);
    out.canonicalize();
    return out;
}

Rational truncated_pFq_exact(const SeriesSpec& spec) {
    std::vector<Rational> upper, lower;
    for (const auto& a : spec.upper) upper.push_back(to_rational(a));
    for (const auto& b : spec.lower) lower.push_back(to_rational(b));
    const Rational z = to_rational(spec.z);

    Rational term(1), sum(1);
    for (std::int64_t k = 0; k < spec.truncation; ++k) {
        Rational den(static_cast<long>(k + 1));
        for (const auto& b : lower) {
            const Rational f = b + static_cast<long>(k);
            if (f == 0) {
                throw Error(ErrorCode::LowerParameterPole,
                            "lower parameter " + b.get_str() + " reaches a pole at k=" +
                                std::to_string(k + 1));
            }
            den *= f;
        }
        if (term == 0) continue;
        for (const auto& a : upper) term *= a + static_cast<long>(k);
        term *= z;
        term /= den;
        sum += term;
    }
    sum.canonicalize();
    return sum;
}

Residue truncated_pFq_mod(const SeriesSpec& spec, const ModulusContext& ctx) {
    std::vector<Residue> upper, lower;
    for (const auto& a : spec.upper) upper.push_back(reduce_rational(a, ctx));
    for (const auto& b : spec.lower) lower.push_back(reduce_rational(b, ctx));
    const Residue z = reduce_rational(spec.z, ctx);

    Residue term(ctx, 1), sum(ctx, 1);
    for (std::int64_t k = 0; k < spec.truncation; ++k) {
        const Residue shift(ctx, k);
        Residue den(ctx, k + 1);
        for (const auto& b : lower) den *= b + shift;
        if (!den.is_unit()) {
            throw Error(ErrorCode::NonUnitDenominator,
                        "term " + std::to_string(k + 1) + " has a denominator divisible by " +
                            std::to_string(ctx.p()));
        }
        if (term.is_zero()) continue;
        for (const auto& a : upper) term *= a + shift;
        term *= z * mod_inverse(den);
        sum += term;
    }
    return sum;
}

SeriesSpec spec_2f1_half(const PRational& a, std::int64_t truncation) {
    return SeriesSpec{{-a, a + PRational(1)}, {PRational(1)}, PRational(1, 2), truncation};
}

SeriesSpec spec_3f2_one(const PRational& a, std::int64_t truncation) {
    return SeriesSpec{
        {PRational(1, 2), -a, a + PRational(1)}, {PRational(1), PRational(1)}, PRational(1), truncation};
}

Residue series_2f1_half(const PRational& a, const ModulusContext& ctx) {
    return truncated_pFq_mod(spec_2f1_half(a, ctx.p() - 1), ctx);
}

Residue series_3f2_one(const PRational& a, const ModulusContext& ctx) {
    return truncated_pFq_mod(spec_3f2_one(a, ctx.p() - 1), ctx);
}

}  // namespace supercong
