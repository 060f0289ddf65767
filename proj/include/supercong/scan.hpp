#pragma once

// Batch verification over a range of primes and its flat-file report.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "supercong/congruences.hpp"
#include "supercong/identities.hpp"

namespace supercong {

enum class ReportFormat { JsonLines, Csv };

struct ScanConfig {
    std::int64_t prime_lo = 5;
    std::int64_t prime_hi = 50;
    std::vector<StatementId> statements;
    std::vector<IdentityId> identities;
    std::optional<int> power;  // overrides each statement's native exponent
    std::optional<std::filesystem::path> params_path;
    std::uint64_t seed = 42;
    int sample_count = 20;
    unsigned jobs = 1;
    std::string out_path = "-";  // "-" is stdout
    ReportFormat format = ReportFormat::JsonLines;
    bool strict = false;
    bool force = false;
    std::int64_t n_max = 100;
};

struct Selection {
    std::vector<StatementId> statements;
    std::vector<IdentityId> identities;
};

/// Comma-separated ids, or one of the groups all / theorems / conjectures /
/// identities (groups may be mixed with ids). Throws InvalidArgument on an
/// unknown name.
Selection parse_selection(std::string_view list);

ReportFormat parse_format(std::string_view name);

/// Throws InvalidArgument describing the first problem.
void validate(const ScanConfig& config);

/// Accepts "num/den" or "int" with an optional sign (ASCII '-' or U+2212).
std::optional<PRational> parse_fraction(std::string_view text);

/// One fraction per line; '#' starts a comment. Throws Parse with the line
/// number of the first malformed line, Io if the file cannot be read.
std::vector<PRational> parse_params(const std::filesystem::path& path);
std::vector<PRational> parse_params(std::istream& in, std::string_view source = "<stream>");

/// `count` distinct fractions m/n with |m| <= 20, 1 <= n <= 20, p ∤ n, not
/// already in `exclude`. Raw mt19937_64 output seeded with seed ^ (p * golden).
std::vector<PRational> sample_fractions(std::uint32_t p, std::uint64_t seed, int count,
                                        const std::vector<PRational>& exclude = {});

/// 0..p-1, the named rationals -1/2, -1/3, -1/4, -1/6, then `count` samples.
std::vector<PRational> default_parameters(std::uint32_t p, std::uint64_t seed, int count = 20);

struct Tally {
    std::string name;
    bool conjecture = false;
    bool identity = false;
    std::int64_t pass = 0;
    std::int64_t fail = 0;
    std::int64_t skipped = 0;
};

struct ScanResult {
    std::vector<ReportRecord> records;            // sorted by (statement, p, a)
    std::vector<IdentityRecord> identity_records;  // in selection order, ascending n
    std::vector<Tally> tallies;                    // one per selected statement/identity
    bool theorem_failure = false;
    bool conjecture_failure = false;
    int exit_code = 0;
};

ScanResult run_scan(const ScanConfig& config);

/// 1 on a theorem-class FAIL, or a conjecture FAIL when strict; else 0.
int exit_status(const ScanResult& result, bool strict);

void write_report(const ScanResult& result, std::ostream& out, ReportFormat format);
std::string summary_table(const ScanResult& result);

/// run_scan + write to config.out_path + summary to `summary`. Returns the
/// process exit status (0 clean, 1 theorem FAIL or strict conjecture FAIL).
int run_scan_to_report(const ScanConfig& config, std::ostream& summary);

}  // namespace supercong
