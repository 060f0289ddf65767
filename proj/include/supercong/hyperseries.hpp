#pragma once

// Pochhammer symbols and truncated hypergeometric series
//
//   rFs(a_1..a_r; b_1..b_s; z)_N = sum_{k=0}^{N} prod (a_i)_k / prod (b_j)_k * z^k / k!
//
// evaluated exactly over Q (GMP rationals) or in Z/p^k. Both modes build each
// term from the previous one by multiplying with the term ratio.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "supercong/padic_core.hpp"

namespace supercong {

using Rational = mpq_class;
using Integer = mpz_class;

Rational to_rational(const PRational& a);

struct SeriesSpec {
    std::vector<PRational> upper;
    std::vector<PRational> lower;
    PRational z;
    std::int64_t truncation = 0;  // sum over k = 0..truncation
};

/// (a)_k = a (a+1) ... (a+k-1), (a)_0 = 1.
Rational pochhammer_exact(const Rational& a, std::int64_t k);
inline Rational pochhammer_exact(const PRational& a, std::int64_t k) {
    return pochhammer_exact(to_rational(a), k);
}

/// Image of (a)_k in Z/p^k, without going through big rationals.
Residue pochhammer_mod(const PRational& a, std::int64_t k, const ModulusContext& ctx);

/// Ordinary binomial C(m, j) with C(m, j) = 0 outside 0 <= j <= m.
Integer binomial(std::int64_t m, std::int64_t j);

/// C(x, j) = (x - j + 1)_j / j! for rational x and j >= 0.
Rational generalized_binomial(const Rational& x, std::int64_t j);

/// Throws LowerParameterPole when some (b_j)_k, k <= N, hits zero.
Rational truncated_pFq_exact(const SeriesSpec& spec);

/// Throws NotPAdicInteger for non-integral parameters and NonUnitDenominator
/// when a lower Pochhammer or k! stops being a unit.
Residue truncated_pFq_mod(const SeriesSpec& spec, const ModulusContext& ctx);

/// 2F1(-a, a+1; 1; 1/2) truncated at N.
SeriesSpec spec_2f1_half(const PRational& a, std::int64_t truncation);
/// 3F2(1/2, -a, a+1; 1, 1; 1) truncated at N.
SeriesSpec spec_3f2_one(const PRational& a, std::int64_t truncation);

/// 2F1(-a, a+1; 1; 1/2)_{p-1} mod p^k.
Residue series_2f1_half(const PRational& a, const ModulusContext& ctx);
/// 3F2(1/2, -a, a+1; 1, 1; 1)_{p-1} mod p^k.
Residue series_3f2_one(const PRational& a, const ModulusContext& ctx);

}  // namespace supercong
