#pragma once

// Statement catalog and verdict engine. Each statement compares a truncated
// series (or a proof-trace expression) against its closed form in Z/p^k.

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "supercong/padic_gamma.hpp"

namespace supercong {

enum class StatementId {
    SUN_A2,
    SUN_A3,
    THM1_A4,
    THM2_A5,
    THM3_A6,
    LEMMA_B5,
    TRACE_C9,
    TRACE_C15,
    CONJ_S1,
    CONJ_S2,
    CONJ_S3,
    CONJ_S4,
};

enum class StatementClass { Theorem, Conjecture };

/// Gate on the parameter a, checked before anything is evaluated.
enum class Hypothesis { None, OddParity, EvenParity };

struct StatementInfo {
    StatementId id;
    std::string_view name;
    int power;             // native exponent k of the comparison
    bool takes_parameter;  // false for the a-free conjectures S1-S3
    Hypothesis hypothesis;
    StatementClass klass;
    bool power_overridable;
};

inline constexpr std::array<StatementInfo, 12> kStatements{{
    {StatementId::SUN_A2, "SUN_A2", 2, true, Hypothesis::OddParity, StatementClass::Theorem, true},
    {StatementId::SUN_A3, "SUN_A3", 2, true, Hypothesis::OddParity, StatementClass::Theorem, true},
    {StatementId::THM1_A4, "THM1_A4", 2, true, Hypothesis::EvenParity, StatementClass::Theorem, true},
    {StatementId::THM2_A5, "THM2_A5", 2, true, Hypothesis::EvenParity, StatementClass::Theorem, true},
    {StatementId::THM3_A6, "THM3_A6", 2, true, Hypothesis::None, StatementClass::Theorem, true},
    {StatementId::LEMMA_B5, "LEMMA_B5", 2, true, Hypothesis::None, StatementClass::Theorem, false},
    {StatementId::TRACE_C9, "TRACE_C9", 2, true, Hypothesis::EvenParity, StatementClass::Theorem, false},
    {StatementId::TRACE_C15, "TRACE_C15", 1, true, Hypothesis::EvenParity, StatementClass::Theorem, false},
    {StatementId::CONJ_S1, "CONJ_S1", 3, false, Hypothesis::None, StatementClass::Conjecture, true},
    {StatementId::CONJ_S2, "CONJ_S2", 3, false, Hypothesis::None, StatementClass::Conjecture, true},
    {StatementId::CONJ_S3, "CONJ_S3", 3, false, Hypothesis::None, StatementClass::Conjecture, true},
    {StatementId::CONJ_S4, "CONJ_S4", 3, true, Hypothesis::EvenParity, StatementClass::Conjecture, true},
}};

const StatementInfo& info(StatementId id);
std::optional<StatementId> statement_from_string(std::string_view name);

enum class Verdict { Pass, Fail, Skipped };
std::string_view to_string(Verdict v);

struct ReportRecord {
    StatementId statement;
    std::uint32_t p = 0;
    int k = 0;
    std::optional<PRational> a;
    std::uint64_t lhs = 0;
    std::uint64_t rhs = 0;
    Verdict verdict = Verdict::Skipped;
    std::string skip_reason;
};

/// Order by (statement, p, a) with the a-free record first.
bool record_less(const ReportRecord& x, const ReportRecord& y);

/// Per-prime state: Gamma evaluators for k = 1..3, built on first use.
/// Safe to share between threads.
class PrimeVerifier {
public:
    explicit PrimeVerifier(std::uint32_t p, GammaOptions options = {});

    std::uint32_t p() const noexcept { return p_; }
    ModulusContext context(int k) const { return ModulusContext(p_, k); }
    const GammaEvaluator& gamma(int k) const;

    /// (-1)^((p+1)/2) Gamma_p(1/2) Gamma_p(-a/2) Gamma_p((a+1)/2).
    /// Throws HypothesisFailed for odd <a>_p.
    Residue rhs_thm1(const PRational& a, int k = 2) const;
    /// (-1)^((p+1)/2) Gamma_p(-a/2)^2 Gamma_p((a+1)/2)^2.
    Residue rhs_thm2(const PRational& a, int k = 2) const;
    /// Case-split right-hand sides of CONJ_S1..CONJ_S3.
    Residue rhs_conj(StatementId id, int k = 3) const;

    /// `power` overrides the native exponent for statements that allow it.
    /// Unmet hypotheses give SKIPPED; never throws for them.
    ReportRecord check(StatementId id, const std::optional<PRational>& a,
                       std::optional<int> power = std::nullopt) const;

    ReportRecord check_c9_trace(const PRational& a) const;
    ReportRecord check_c15(const PRational& a) const;
    /// Gamma_p(a + b p) = Gamma_p(a) (1 + G_1(a) b p) mod p^2 with b = 1 + a.
    ReportRecord check_b5(const PRational& a) const;

private:
    Residue sign_plus(const ModulusContext& ctx) const;  // (-1)^((p+1)/2)

    std::uint32_t p_;
    GammaOptions options_;
    mutable std::array<std::once_flag, 3> once_;
    mutable std::array<std::unique_ptr<GammaEvaluator>, 3> gammas_;
};

/// Convenience wrappers that build a throwaway PrimeVerifier.
Residue rhs_thm1(const PRational& a, const ModulusContext& ctx);
Residue rhs_thm2(const PRational& a, const ModulusContext& ctx);
Residue rhs_conj(StatementId id, std::uint32_t p, int k = 3);
ReportRecord check_statement(StatementId id, std::uint32_t p, const std::optional<PRational>& a,
                             std::optional<int> power = std::nullopt);
ReportRecord check_c9_trace(const PRational& a, std::uint32_t p);
ReportRecord check_c15(const PRational& a, std::uint32_t p);

/// The rational parameter fixed by each of CONJ_S1..S3 (-1/3, -1/4, -1/6).
PRational conjecture_parameter(StatementId id);

}  // namespace supercong
