#include "supercong/padic_gamma.hpp"

namespace supercong {

namespace {

std::uint64_t product_below(std::uint64_t m, std::uint32_t p, std::uint64_t modulus) {
    std::uint64_t acc = 1;
    for (std::uint64_t j = 1; j < m; ++j) {
        if (j % p != 0) acc = acc * j % modulus;
    }
    return acc;
}

Residue signed_gamma(const ModulusContext& ctx, std::uint64_t m, std::uint64_t product) {
    Residue r = Residue::from_canonical(ctx, product);
    return (m % 2 == 0) ? r : -r;
}

}  // namespace

GammaEvaluator::GammaEvaluator(const ModulusContext& ctx, GammaOptions options)
    : ctx_(ctx),
      cap_(options.complexity_cap == 0 ? ctx.modulus() : options.complexity_cap),
      use_table_(cap_ >= ctx.modulus() && ctx.modulus() <= options.table_limit) {}

void GammaEvaluator::build_table() const {
    const std::uint64_t n = ctx_.modulus();
    const std::uint32_t p = ctx_.p();
    table_.resize(n);
    std::uint64_t acc = 1;
    table_[0] = 1;
    for (std::uint64_t m = 1; m < n; ++m) {
        // table_[m] covers j < m, so fold in m-1 before storing.
        const std::uint64_t j = m - 1;
        if (j != 0 && j % p != 0) acc = acc * j % n;
        table_[m] = static_cast<std::uint32_t>(acc);
    }
}

std::uint64_t GammaEvaluator::direct_product(std::uint64_t m) const {
    {
        std::lock_guard lock(memo_mutex_);
        if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    }
    const std::uint64_t value = product_below(m, ctx_.p(), ctx_.modulus());
    std::lock_guard lock(memo_mutex_);
    memo_.emplace(m, value);
    return value;
}

Residue GammaEvaluator::at_canonical(std::uint64_t m) const {
    if (m >= ctx_.modulus()) {
        throw Error(ErrorCode::InvalidArgument, "gamma argument is not a canonical residue");
    }
    if (use_table_) {
        std::call_once(table_once_, [this] { build_table(); });
        return signed_gamma(ctx_, m, table_[m]);
    }
    if (m > cap_) {
        throw Error(ErrorCode::CapExceeded, "gamma product of length " + std::to_string(m) +
                                                " exceeds cap " + std::to_string(cap_));
    }
    return signed_gamma(ctx_, m, direct_product(m));
}

Residue GammaEvaluator::operator()(const PRational& x) const {
    return at_canonical(reduce_rational(x, ctx_).value());
}

Residue gamma_p(const PRational& x, const ModulusContext& ctx) {
    const std::uint64_t m = reduce_rational(x, ctx).value();
    return signed_gamma(ctx, m, product_below(m, ctx.p(), ctx.modulus()));
}

Residue g1_of_one(std::uint32_t p) {
    const ModulusContext ctx2(p, 2);
    const Residue t = gamma_p(PRational(1 + static_cast<std::int64_t>(p)), ctx2);
    // -t = 1 + G_1(1) p (mod p^2); the quotient by p is exact.
    const std::uint64_t lifted = (-t - Residue(ctx2, 1)).value();
    if (lifted % p != 0) {
        throw Error(ErrorCode::InvalidArgument, "Gamma_p(1+p) is not -1 mod p");
    }
    return Residue(ModulusContext(p, 1), static_cast<std::int64_t>(lifted / p));
}

Residue g1(const PRational& x, std::uint32_t p) {
    return g1_of_one(p) + harmonic_mod(static_cast<std::int64_t>(s_p(x, p)) - 1, p);
}

}  // namespace supercong
