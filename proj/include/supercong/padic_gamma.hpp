#pragma once

// Morita's p-adic Gamma function in Z/p^k.
//
// For m a non-negative integer, Gamma_p(m) = (-1)^m * prod_{0<j<m, p∤j} j.
// Gamma_p is 1-Lipschitz on Z_p, so for a p-adic integer x the value mod p^k
// only depends on x mod p^k: the evaluator reduces x to its canonical
// representative m in [0, p^k) and takes the product above.

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "supercong/padic_core.hpp"

namespace supercong {

struct GammaOptions {
    /// Longest product the evaluator will run. 0 means "the modulus", which
    /// admits every argument.
    std::uint64_t complexity_cap = 0;
    /// Moduli up to this size get a full prefix-product table on first use;
    /// larger ones fall back to direct products with a memo.
    std::uint64_t table_limit = std::uint64_t{1} << 24;
};

class GammaEvaluator {
public:
    explicit GammaEvaluator(const ModulusContext& ctx, GammaOptions options = {});

    GammaEvaluator(const GammaEvaluator&) = delete;
    GammaEvaluator& operator=(const GammaEvaluator&) = delete;

    const ModulusContext& context() const noexcept { return ctx_; }
    std::uint64_t complexity_cap() const noexcept { return cap_; }
    bool uses_table() const noexcept { return use_table_; }

    /// Gamma_p(x) mod p^k. Throws NotPAdicInteger, or CapExceeded when the
    /// representative of x is longer than the cap.
    Residue operator()(const PRational& x) const;

    /// Gamma_p(m) for a canonical representative m in [0, p^k).
    Residue at_canonical(std::uint64_t m) const;

private:
    std::uint64_t direct_product(std::uint64_t m) const;
    void build_table() const;

    ModulusContext ctx_;
    std::uint64_t cap_;
    bool use_table_;

    mutable std::once_flag table_once_;
    mutable std::vector<std::uint32_t> table_;  // prod_{0<j<m, p∤j} j

    mutable std::mutex memo_mutex_;
    mutable std::unordered_map<std::uint64_t, std::uint64_t> memo_;
};

/// One-shot Gamma_p(x) mod p^k by direct product, no caching.
Residue gamma_p(const PRational& x, const ModulusContext& ctx);

/// G_1(1) mod p, read off Gamma_p(1+p) = -(1 + G_1(1) p) (mod p^2).
Residue g1_of_one(std::uint32_t p);

/// G_1(x) = G_1(1) + H_{s_p(x)-1} (mod p).
Residue g1(const PRational& x, std::uint32_t p);

}  // namespace supercong
