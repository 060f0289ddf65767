#include "supercong/congruences.hpp"

#include "supercong/hyperseries.hpp"

namespace supercong {

namespace {

const PRational kHalf(1, 2);
const PRational kOne(1);

std::string parity_reason(const PRational& a, std::uint32_t p, bool want_even) {
    return std::string("parity: <a>_p=") + std::to_string(least_residue(a, p)) + " is " +
           (want_even ? "odd" : "even");
}

ReportRecord make_record(StatementId id, std::uint32_t p, int k, const std::optional<PRational>& a,
                         const Residue& lhs, const Residue& rhs) {
    ReportRecord r;
    r.statement = id;
    r.p = p;
    r.k = k;
    r.a = a;
    r.lhs = lhs.value();
    r.rhs = rhs.value();
    r.verdict = lhs == rhs ? Verdict::Pass : Verdict::Fail;
    return r;
}

ReportRecord skipped(StatementId id, std::uint32_t p, int k, const std::optional<PRational>& a,
                     std::string reason) {
    ReportRecord r;
    r.statement = id;
    r.p = p;
    r.k = k;
    r.a = a;
    r.verdict = Verdict::Skipped;
    r.skip_reason = std::move(reason);
    return r;
}

// (-1/4)^(r/2) C(r, r/2) mod p^k for even r < p.
Residue central_term(std::uint32_t r, const ModulusContext& ctx) {
    const Integer c = binomial(r, r / 2) % Integer(static_cast<unsigned long>(ctx.modulus()));
    const Residue quarter = reduce_rational(PRational(-1, 4), ctx);
    return Residue(ctx, static_cast<std::int64_t>(c.get_ui())) * quarter.pow(r / 2);
}

}  // namespace

const StatementInfo& info(StatementId id) {
    for (const auto& s : kStatements) {
        if (s.id == id) return s;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown statement id");
}

std::optional<StatementId> statement_from_string(std::string_view name) {
    for (const auto& s : kStatements) {
        if (s.name == name) return s.id;
    }
    return std::nullopt;
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Skipped: return "SKIPPED";
    }
    return "?";
}

bool record_less(const ReportRecord& x, const ReportRecord& y) {
    if (x.statement != y.statement) return x.statement < y.statement;
    if (x.p != y.p) return x.p < y.p;
    if (x.a.has_value() != y.a.has_value()) return !x.a.has_value();
    if (!x.a) return false;
    return *x.a < *y.a;
}

PRational conjecture_parameter(StatementId id) {
    switch (id) {
        case StatementId::CONJ_S1: return PRational(-1, 3);
        case StatementId::CONJ_S2: return PRational(-1, 4);
        case StatementId::CONJ_S3: return PRational(-1, 6);
        default: break;
    }
    throw Error(ErrorCode::InvalidArgument, "statement has no fixed parameter");
}

// ---------------------------------------------------------------------------
// PrimeVerifier

PrimeVerifier::PrimeVerifier(std::uint32_t p, GammaOptions options) : p_(p), options_(options) {
    (void)ModulusContext(p, 1);  // validates p
}

const GammaEvaluator& PrimeVerifier::gamma(int k) const {
    if (k < 1 || k > 3) throw Error(ErrorCode::InvalidArgument, "exponent k must be 1, 2 or 3");
    const auto i = static_cast<std::size_t>(k - 1);
    std::call_once(once_[i], [&] { gammas_[i] = std::make_unique<GammaEvaluator>(context(k), options_); });
    return *gammas_[i];
}

Residue PrimeVerifier::sign_plus(const ModulusContext& ctx) const {
    return Residue(ctx, ((p_ + 1) / 2) % 2 == 0 ? 1 : -1);
}

Residue PrimeVerifier::rhs_thm1(const PRational& a, int k) const {
    if (!least_residue_is_even(a, p_)) throw Error(ErrorCode::HypothesisFailed, parity_reason(a, p_, true));
    const GammaEvaluator& g = gamma(k);
    return sign_plus(g.context()) * g(kHalf) * g(-a / PRational(2)) * g((a + kOne) / PRational(2));
}

Residue PrimeVerifier::rhs_thm2(const PRational& a, int k) const {
    if (!least_residue_is_even(a, p_)) throw Error(ErrorCode::HypothesisFailed, parity_reason(a, p_, true));
    const GammaEvaluator& g = gamma(k);
    const Residue prod = g(-a / PRational(2)) * g((a + kOne) / PRational(2));
    return sign_plus(g.context()) * prod * prod;
}

Residue PrimeVerifier::rhs_conj(StatementId id, int k) const {
    const GammaEvaluator& g = gamma(k);
    const ModulusContext& ctx = g.context();
    const Residue p_squared(ctx, static_cast<std::int64_t>(p_) * p_);
    const Residue plus = sign_plus(ctx);
    const Residue minus = -plus;  // (-1)^((p-1)/2)

    auto squared = [&](PRational x, PRational y) {
        const Residue v = g(x) * g(y);
        return v * v;
    };

    switch (id) {
        case StatementId::CONJ_S1: {
            const Residue core = squared(PRational(1, 6), PRational(1, 3));
            if (p_ % 6 == 1) return plus * core;
            return minus * p_squared * reduce_rational(PRational(1, 18), ctx) * core;
        }
        case StatementId::CONJ_S2: {
            const Residue core = squared(PRational(1, 8), PRational(3, 8));
            if (p_ % 8 == 1 || p_ % 8 == 3) return plus * core;
            return minus * p_squared * reduce_rational(PRational(3, 64), ctx) * core;
        }
        case StatementId::CONJ_S3: {
            const Residue core = squared(PRational(1, 12), PRational(5, 12));
            if (p_ % 4 == 1) return -core;
            return -(p_squared * reduce_rational(PRational(5, 144), ctx) * core);
        }
        default: break;
    }
    throw Error(ErrorCode::InvalidArgument, "rhs_conj takes CONJ_S1, CONJ_S2 or CONJ_S3");
}

ReportRecord PrimeVerifier::check_c9_trace(const PRational& a) const {
    const ModulusContext ctx = context(2);
    if (!least_residue_is_even(a, p_)) {
        return skipped(StatementId::TRACE_C9, p_, 2, a, parity_reason(a, p_, true));
    }
    const std::uint32_t r = least_residue(a, p_);
    const ModulusContext ctx1 = context(1);
    // The correction is p * (delta/2 * (H_{(p-r-1)/2} - H_{r/2})) and only needs
    // its cofactor mod p.
    const Residue cofactor = Residue(ctx1, static_cast<std::int64_t>(delta(a, ctx).value())) *
                             reduce_rational(kHalf, ctx1) *
                             (harmonic_mod((p_ - r - 1) / 2, p_) - harmonic_mod(r / 2, p_));
    const Residue correction(ctx, static_cast<std::int64_t>(1 + p_ * cofactor.value()));
    return make_record(StatementId::TRACE_C9, p_, 2, a, series_2f1_half(a, ctx),
                       central_term(r, ctx) * correction);
}

ReportRecord PrimeVerifier::check_c15(const PRational& a) const {
    const ModulusContext ctx = context(1);
    if (!least_residue_is_even(a, p_)) {
        return skipped(StatementId::TRACE_C15, p_, 1, a, parity_reason(a, p_, true));
    }
    const std::uint32_t r = least_residue(a, p_);
    const Residue lhs = harmonic_mod((p_ - r - 1) / 2, p_) - harmonic_mod(r / 2, p_) +
                        g1(-a / PRational(2), p_) - g1((kOne + a) / PRational(2), p_);
    return make_record(StatementId::TRACE_C15, p_, 1, a, lhs, Residue(ctx, 0));
}

ReportRecord PrimeVerifier::check_b5(const PRational& a) const {
    const GammaEvaluator& g = gamma(2);
    const ModulusContext& ctx = g.context();
    const PRational b = kOne + a;
    const Residue lhs = g(a + b * PRational(p_));
    const ModulusContext ctx1 = context(1);
    const Residue first_order = g1(a, p_) * reduce_rational(b, ctx1);
    const Residue rhs = g(a) * Residue(ctx, static_cast<std::int64_t>(1 + p_ * first_order.value()));
    return make_record(StatementId::LEMMA_B5, p_, 2, a, lhs, rhs);
}

ReportRecord PrimeVerifier::check(StatementId id, const std::optional<PRational>& a,
                                  std::optional<int> power) const {
    const StatementInfo& meta = info(id);
    const int k = (power && meta.power_overridable) ? *power : meta.power;
    if (meta.takes_parameter && !a) {
        throw Error(ErrorCode::InvalidArgument, std::string(meta.name) + " needs a parameter");
    }
    if (!meta.takes_parameter && a) {
        throw Error(ErrorCode::InvalidArgument, std::string(meta.name) + " takes no parameter");
    }
    if (a && !a->is_p_integral(p_)) {
        throw Error(ErrorCode::NotPAdicInteger,
                    a->to_string() + " is not a " + std::to_string(p_) + "-adic integer");
    }
    if (meta.hypothesis != Hypothesis::None) {
        const bool even = least_residue_is_even(*a, p_);
        const bool want_even = meta.hypothesis == Hypothesis::EvenParity;
        if (even != want_even) return skipped(id, p_, k, a, parity_reason(*a, p_, want_even));
    }

    const ModulusContext ctx = context(k);
    switch (id) {
        case StatementId::SUN_A2:
            return make_record(id, p_, k, a, series_3f2_one(*a, ctx), Residue(ctx, 0));
        case StatementId::SUN_A3:
            return make_record(id, p_, k, a, series_2f1_half(*a, ctx), Residue(ctx, 0));
        case StatementId::THM1_A4:
            return make_record(id, p_, k, a, series_2f1_half(*a, ctx), rhs_thm1(*a, k));
        case StatementId::THM2_A5:
        case StatementId::CONJ_S4:
            return make_record(id, p_, k, a, series_3f2_one(*a, ctx), rhs_thm2(*a, k));
        case StatementId::THM3_A6: {
            const Residue f21 = series_2f1_half(*a, ctx);
            return make_record(id, p_, k, a, series_3f2_one(*a, ctx), f21 * f21);
        }
        case StatementId::LEMMA_B5: return check_b5(*a);
        case StatementId::TRACE_C9: return check_c9_trace(*a);
        case StatementId::TRACE_C15: return check_c15(*a);
        case StatementId::CONJ_S1:
        case StatementId::CONJ_S2:
        case StatementId::CONJ_S3:
            return make_record(id, p_, k, std::nullopt,
                               series_3f2_one(conjecture_parameter(id), ctx), rhs_conj(id, k));
    }
    throw Error(ErrorCode::InvalidArgument, "unknown statement id");
}

// ---------------------------------------------------------------------------
// free wrappers

Residue rhs_thm1(const PRational& a, const ModulusContext& ctx) {
    return PrimeVerifier(ctx.p()).rhs_thm1(a, ctx.k());
}

Residue rhs_thm2(const PRational& a, const ModulusContext& ctx) {
    return PrimeVerifier(ctx.p()).rhs_thm2(a, ctx.k());
}

Residue rhs_conj(StatementId id, std::uint32_t p, int k) { return PrimeVerifier(p).rhs_conj(id, k); }

ReportRecord check_statement(StatementId id, std::uint32_t p, const std::optional<PRational>& a,
                             std::optional<int> power) {
    return PrimeVerifier(p).check(id, a, power);
}

ReportRecord check_c9_trace(const PRational& a, std::uint32_t p) { return PrimeVerifier(p).check_c9_trace(a); }

ReportRecord check_c15(const PRational& a, std::uint32_t p) { return PrimeVerifier(p).check_c15(a); }

}  // namespace supercong
