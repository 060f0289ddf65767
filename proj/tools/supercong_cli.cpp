// supercong: scan primes and verify the supercongruence catalog.
//
// Exit codes: 0 clean, 1 theorem FAIL (or conjecture FAIL with --strict),
// 2 usage, configuration or I/O error.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "supercong/supercong.h"

namespace {

constexpr int kExitUsage = 2;

bool parse_range(const std::string& text, std::int64_t& lo, std::int64_t& hi) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            std::size_t used = 0;
            lo = hi = std::stoll(text, &used);
            return used == text.size();
        }
        std::size_t used_lo = 0, used_hi = 0;
        const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
        lo = std::stoll(a, &used_lo);
        hi = std::stoll(b, &used_hi);
        return used_lo == a.size() && used_hi == b.size();
    } catch (const std::exception&) {
        return false;
    }
}

int report(sc_status status) {
    std::cerr << "supercong: " << sc_status_name(status) << ": " << sc_last_error() << '\n';
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verify p-adic Gamma supercongruences over a range of primes"};
    app.set_version_flag("--version", sc_version());

    std::string primes = "5..50";
    std::string statements = "theorems";
    int power = 0;
    std::string params;
    std::uint64_t seed = 42;
    int samples = 20;
    unsigned jobs = 1;
    std::string out = "-";
    std::string format = "jsonl";
    bool strict = false;
    bool force = false;
    std::int64_t n_max = 100;

    app.add_option("--primes", primes, "Prime range LO..HI (primes below 5 are ignored)")
        ->envname("SUPERCONG_PRIMES")
        ->capture_default_str();
    app.add_option("--power", power, "Override each statement's modulus exponent k")
        ->envname("SUPERCONG_POWER")
        ->check(CLI::Range(1, 3));
    app.add_option("--statements", statements,
                   "Comma-separated statement ids, or all|theorems|conjectures|identities")
        ->envname("SUPERCONG_STATEMENTS")
        ->capture_default_str();
    app.add_option("--params", params, "Parameter file, one fraction per line")->envname("SUPERCONG_PARAMS");
    app.add_option("--seed", seed, "Seed for the fraction sampler")->envname("SUPERCONG_SEED")->capture_default_str();
    app.add_option("--samples", samples, "Sampled fractions per prime")
        ->envname("SUPERCONG_SAMPLES")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--jobs", jobs, "Worker threads")->envname("SUPERCONG_JOBS")->check(CLI::PositiveNumber);
    app.add_option("--out", out, "Report path, '-' for stdout")->envname("SUPERCONG_OUT")->capture_default_str();
    app.add_option("--format", format, "Report format")
        ->envname("SUPERCONG_FORMAT")
        ->check(CLI::IsMember({"jsonl", "csv"}))
        ->capture_default_str();
    app.add_flag("--strict", strict, "Conjecture FAILs also set exit status 1")->envname("SUPERCONG_STRICT");
    app.add_flag("--force", force, "Allow k=3 scans with primes above 1000")->envname("SUPERCONG_FORCE");
    app.add_option("--n-max", n_max, "Upper index for identity sweeps")
        ->envname("SUPERCONG_N_MAX")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    std::int64_t lo = 0, hi = 0;
    if (!parse_range(primes, lo, hi) || lo > hi) {
        std::cerr << "supercong: --primes expects LO..HI with LO <= HI, got '" << primes << "'\n";
        return kExitUsage;
    }

    sc_scan* scan = nullptr;
    if (sc_status s = sc_scan_create(&scan); s != SC_OK) return report(s);
    struct Guard {
        sc_scan* s;
        ~Guard() { sc_scan_destroy(s); }
    } guard{scan};

    sc_status s = SC_OK;
    if ((s = sc_scan_set_primes(scan, lo, hi)) != SC_OK ||
        (s = sc_scan_set_statements(scan, statements.c_str())) != SC_OK ||
        (s = sc_scan_set_power(scan, power)) != SC_OK ||
        (s = sc_scan_set_params_file(scan, params.empty() ? nullptr : params.c_str())) != SC_OK ||
        (s = sc_scan_set_seed(scan, seed)) != SC_OK ||
        (s = sc_scan_set_sample_count(scan, samples)) != SC_OK ||
        (s = sc_scan_set_jobs(scan, jobs)) != SC_OK ||
        (s = sc_scan_set_output(scan, out.c_str(), format.c_str())) != SC_OK ||
        (s = sc_scan_set_flags(scan, strict, force)) != SC_OK ||
        (s = sc_scan_set_n_max(scan, n_max)) != SC_OK) {
        return report(s);
    }

    int exit_code = 0;
    if ((s = sc_scan_run(scan, &exit_code)) != SC_OK) return report(s);

    std::FILE* summary = out == "-" ? stderr : stdout;
    std::fputs(sc_scan_summary(scan), summary);
    return exit_code;
}
