#include "supercong/supercong.h"

#include <cstring>
#include <sstream>
#include <string>

#include "supercong/congruences.hpp"
#include "supercong/hyperseries.hpp"
#include "supercong/identities.hpp"
#include "supercong/scan.hpp"

struct sc_verifier {
    explicit sc_verifier(std::uint32_t p) : impl(p) {}
    supercong::PrimeVerifier impl;
};

struct sc_scan {
    supercong::ScanConfig config;
    std::string summary;
};

namespace {

thread_local std::string last_error;

sc_status to_status(supercong::ErrorCode code) {
    using supercong::ErrorCode;
    switch (code) {
        case ErrorCode::InvalidArgument: return SC_ERR_INVALID_ARGUMENT;
        case ErrorCode::NotInvertible: return SC_ERR_NOT_INVERTIBLE;
        case ErrorCode::NotPAdicInteger: return SC_ERR_NOT_PADIC_INTEGER;
        case ErrorCode::IndexOutOfRange: return SC_ERR_INDEX_OUT_OF_RANGE;
        case ErrorCode::CapExceeded: return SC_ERR_CAP_EXCEEDED;
        case ErrorCode::LowerParameterPole: return SC_ERR_LOWER_PARAMETER_POLE;
        case ErrorCode::NonUnitDenominator: return SC_ERR_NON_UNIT_DENOMINATOR;
        case ErrorCode::HypothesisFailed: return SC_ERR_HYPOTHESIS_FAILED;
        case ErrorCode::OddInput: return SC_ERR_ODD_INPUT;
        case ErrorCode::Parse: return SC_ERR_PARSE;
        case ErrorCode::Io: return SC_ERR_IO;
    }
    return SC_ERR_INTERNAL;
}

sc_status fail(sc_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

template <class Fn>
sc_status guarded(Fn&& fn) {
    try {
        fn();
        return SC_OK;
    } catch (const supercong::Error& e) {
        return fail(to_status(e.code()), e.what());
    } catch (const std::exception& e) {
        return fail(SC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(SC_ERR_INTERNAL, "unknown exception");
    }
}

#define SC_REQUIRE(cond)                                                        \
    do {                                                                        \
        if (!(cond)) return fail(SC_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
    } while (0)

void copy_truncated(char* dst, std::size_t cap, const std::string& src) {
    const std::size_t n = std::min(cap - 1, src.size());
    std::memcpy(dst, src.data(), n);
    dst[n] = '\0';
}

}  // namespace

extern "C" {

const char* sc_version(void) { return "1.0.0"; }

const char* sc_status_name(sc_status status) {
    switch (status) {
        case SC_OK: return "OK";
        case SC_ERR_INVALID_ARGUMENT: return "InvalidArgument";
        case SC_ERR_NOT_INVERTIBLE: return "NotInvertible";
        case SC_ERR_NOT_PADIC_INTEGER: return "NotPAdicInteger";
        case SC_ERR_INDEX_OUT_OF_RANGE: return "IndexOutOfRange";
        case SC_ERR_CAP_EXCEEDED: return "CapExceeded";
        case SC_ERR_LOWER_PARAMETER_POLE: return "LowerParameterPole";
        case SC_ERR_NON_UNIT_DENOMINATOR: return "NonUnitDenominator";
        case SC_ERR_HYPOTHESIS_FAILED: return "HypothesisFailed";
        case SC_ERR_ODD_INPUT: return "OddInput";
        case SC_ERR_PARSE: return "Parse";
        case SC_ERR_IO: return "Io";
        case SC_ERR_INTERNAL: return "Internal";
    }
    return "Unknown";
}

const char* sc_last_error(void) { return last_error.c_str(); }

sc_status sc_sieve_primes(int64_t lo, int64_t hi, uint32_t* out, size_t capacity, size_t* count) {
    SC_REQUIRE(count);
    return guarded([&] {
        const auto primes = supercong::sieve_primes(lo, hi);
        *count = primes.size();
        if (out) std::copy_n(primes.begin(), std::min(capacity, primes.size()), out);
    });
}

sc_status sc_mod_inverse(uint32_t p, int k, uint64_t x, uint64_t* out) {
    SC_REQUIRE(out);
    return guarded([&] {
        const supercong::ModulusContext ctx(p, k);
        *out = supercong::mod_inverse(supercong::Residue::from_canonical(ctx, x)).value();
    });
}

sc_status sc_reduce_rational(uint32_t p, int k, int64_t num, int64_t den, uint64_t* out) {
    SC_REQUIRE(out);
    return guarded([&] {
        *out = supercong::reduce_rational(supercong::PRational(num, den), supercong::ModulusContext(p, k)).value();
    });
}

sc_status sc_least_residue(uint32_t p, int64_t num, int64_t den, uint32_t* out) {
    SC_REQUIRE(out);
    return guarded([&] { *out = supercong::least_residue(supercong::PRational(num, den), p); });
}

sc_status sc_harmonic_mod(uint32_t p, int64_t n, uint32_t* out) {
    SC_REQUIRE(out);
    return guarded([&] {
        (void)supercong::ModulusContext(p, 1);
        *out = static_cast<uint32_t>(supercong::harmonic_mod(n, p).value());
    });
}

sc_status sc_verifier_create(uint32_t p, sc_verifier** out) {
    SC_REQUIRE(out);
    *out = nullptr;
    return guarded([&] { *out = new sc_verifier(p); });
}

void sc_verifier_destroy(sc_verifier* verifier) { delete verifier; }

sc_status sc_gamma_p(const sc_verifier* verifier, int k, int64_t num, int64_t den, uint64_t* out) {
    SC_REQUIRE(verifier && out);
    return guarded([&] { *out = verifier->impl.gamma(k)(supercong::PRational(num, den)).value(); });
}

sc_status sc_g1(const sc_verifier* verifier, int64_t num, int64_t den, uint64_t* out) {
    SC_REQUIRE(verifier && out);
    return guarded([&] { *out = supercong::g1(supercong::PRational(num, den), verifier->impl.p()).value(); });
}

sc_status sc_series_2f1_half(const sc_verifier* verifier, int k, int64_t num, int64_t den, uint64_t* out) {
    SC_REQUIRE(verifier && out);
    return guarded([&] {
        *out = supercong::series_2f1_half(supercong::PRational(num, den), verifier->impl.context(k)).value();
    });
}

sc_status sc_series_3f2_one(const sc_verifier* verifier, int k, int64_t num, int64_t den, uint64_t* out) {
    SC_REQUIRE(verifier && out);
    return guarded([&] {
        *out = supercong::series_3f2_one(supercong::PRational(num, den), verifier->impl.context(k)).value();
    });
}

sc_status sc_check_statement(const sc_verifier* verifier, const char* statement, int has_a, int64_t a_num,
                             int64_t a_den, int power, sc_record* out) {
    SC_REQUIRE(verifier && statement && out);
    return guarded([&] {
        const auto id = supercong::statement_from_string(statement);
        if (!id) {
            throw supercong::Error(supercong::ErrorCode::InvalidArgument,
                                   std::string("unknown statement '") + statement + "'");
        }
        std::optional<supercong::PRational> a;
        if (has_a) a = supercong::PRational(a_num, a_den);
        std::optional<int> pw;
        if (power != 0) pw = power;
        const supercong::ReportRecord r = verifier->impl.check(*id, a, pw);

        *out = sc_record{};
        copy_truncated(out->statement, sizeof out->statement, std::string(supercong::info(r.statement).name));
        out->p = r.p;
        out->k = r.k;
        out->has_a = r.a.has_value() ? 1 : 0;
        out->a_num = r.a ? r.a->num() : 0;
        out->a_den = r.a ? r.a->den() : 1;
        out->lhs = r.lhs;
        out->rhs = r.rhs;
        out->verdict = r.verdict == supercong::Verdict::Pass   ? SC_PASS
                       : r.verdict == supercong::Verdict::Fail ? SC_FAIL
                                                               : SC_SKIPPED;
        copy_truncated(out->skip_reason, sizeof out->skip_reason, r.skip_reason);
    });
}

sc_status sc_check_identity(const char* identity, int64_t n, int* passed) {
    SC_REQUIRE(identity && passed);
    return guarded([&] {
        const auto id = supercong::identity_from_string(identity);
        if (!id) {
            throw supercong::Error(supercong::ErrorCode::InvalidArgument,
                                   std::string("unknown identity '") + identity + "'");
        }
        *passed = supercong::check_identity(*id, n).pass ? 1 : 0;
    });
}

sc_status sc_scan_create(sc_scan** out) {
    SC_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        auto* scan = new sc_scan{};
        scan->config.statements = supercong::parse_selection("theorems").statements;
        *out = scan;
    });
}

void sc_scan_destroy(sc_scan* scan) { delete scan; }

sc_status sc_scan_set_primes(sc_scan* scan, int64_t lo, int64_t hi) {
    SC_REQUIRE(scan);
    if (lo > hi) return fail(SC_ERR_INVALID_ARGUMENT, "prime range is empty: lo > hi");
    scan->config.prime_lo = lo;
    scan->config.prime_hi = hi;
    return SC_OK;
}

sc_status sc_scan_set_statements(sc_scan* scan, const char* list) {
    SC_REQUIRE(scan && list);
    return guarded([&] {
        auto sel = supercong::parse_selection(list);
        scan->config.statements = std::move(sel.statements);
        scan->config.identities = std::move(sel.identities);
    });
}

sc_status sc_scan_set_power(sc_scan* scan, int power) {
    SC_REQUIRE(scan);
    if (power < 0 || power > 3) return fail(SC_ERR_INVALID_ARGUMENT, "power must be 0 (native), 1, 2 or 3");
    if (power == 0) {
        scan->config.power.reset();
    } else {
        scan->config.power = power;
    }
    return SC_OK;
}

sc_status sc_scan_set_params_file(sc_scan* scan, const char* path) {
    SC_REQUIRE(scan);
    if (path) {
        scan->config.params_path = std::filesystem::path(path);
    } else {
        scan->config.params_path.reset();
    }
    return SC_OK;
}

sc_status sc_scan_set_seed(sc_scan* scan, uint64_t seed) {
    SC_REQUIRE(scan);
    scan->config.seed = seed;
    return SC_OK;
}

sc_status sc_scan_set_sample_count(sc_scan* scan, int count) {
    SC_REQUIRE(scan);
    if (count < 0) return fail(SC_ERR_INVALID_ARGUMENT, "sample count must be >= 0");
    scan->config.sample_count = count;
    return SC_OK;
}

sc_status sc_scan_set_jobs(sc_scan* scan, unsigned jobs) {
    SC_REQUIRE(scan);
    if (jobs < 1) return fail(SC_ERR_INVALID_ARGUMENT, "jobs must be >= 1");
    scan->config.jobs = jobs;
    return SC_OK;
}

sc_status sc_scan_set_output(sc_scan* scan, const char* path, const char* format) {
    SC_REQUIRE(scan);
    return guarded([&] {
        if (format) scan->config.format = supercong::parse_format(format);
        scan->config.out_path = path ? path : "-";
    });
}

sc_status sc_scan_set_flags(sc_scan* scan, int strict, int force) {
    SC_REQUIRE(scan);
    scan->config.strict = strict != 0;
    scan->config.force = force != 0;
    return SC_OK;
}

sc_status sc_scan_set_n_max(sc_scan* scan, int64_t n_max) {
    SC_REQUIRE(scan);
    if (n_max < 0) return fail(SC_ERR_INVALID_ARGUMENT, "n-max must be >= 0");
    scan->config.n_max = n_max;
    return SC_OK;
}

sc_status sc_scan_run(sc_scan* scan, int* exit_code) {
    SC_REQUIRE(scan && exit_code);
    return guarded([&] {
        std::ostringstream summary;
        *exit_code = supercong::run_scan_to_report(scan->config, summary);
        scan->summary = summary.str();
    });
}

const char* sc_scan_summary(const sc_scan* scan) { return scan ? scan->summary.c_str() : ""; }

}  // extern "C"
