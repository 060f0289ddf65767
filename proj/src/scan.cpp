#include "supercong/scan.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <mutex>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace supercong {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::optional<std::int64_t> parse_int(std::string_view s) {
    std::int64_t v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return v;
}

bool contains(const std::vector<PRational>& xs, const PRational& x) {
    return std::find(xs.begin(), xs.end(), x) != xs.end();
}

int effective_power(StatementId id, const std::optional<int>& power) {
    const StatementInfo& meta = info(id);
    return (power && meta.power_overridable) ? *power : meta.power;
}

std::vector<ReportRecord> scan_prime(std::uint32_t p, const ScanConfig& config,
                                     const std::vector<PRational>* file_params) {
    const PrimeVerifier verifier(p);
    std::vector<PRational> params;
    if (file_params) {
        for (const auto& a : *file_params) {
            if (a.is_p_integral(p) && !contains(params, a)) params.push_back(a);
        }
    } else {
        params = default_parameters(p, config.seed, config.sample_count);
    }

    std::vector<ReportRecord> out;
    for (StatementId id : config.statements) {
        if (!info(id).takes_parameter) {
            out.push_back(verifier.check(id, std::nullopt, config.power));
            continue;
        }
        for (const auto& a : params) out.push_back(verifier.check(id, a, config.power));
    }
    return out;
}

nlohmann::ordered_json to_json(const ReportRecord& r) {
    nlohmann::ordered_json j;
    const StatementInfo& meta = info(r.statement);
    j["statement"] = meta.name;
    j["section"] = meta.klass == StatementClass::Conjecture ? "conjecture" : "theorem";
    j["p"] = r.p;
    j["k"] = r.k;
    j["a_num"] = r.a ? nlohmann::ordered_json(r.a->num()) : nlohmann::ordered_json(nullptr);
    j["a_den"] = r.a ? nlohmann::ordered_json(r.a->den()) : nlohmann::ordered_json(nullptr);
    j["n"] = nullptr;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["verdict"] = to_string(r.verdict);
    j["skip_reason"] = r.skip_reason.empty() ? nlohmann::ordered_json(nullptr)
                                             : nlohmann::ordered_json(r.skip_reason);
    return j;
}

nlohmann::ordered_json to_json(const IdentityRecord& r) {
    nlohmann::ordered_json j;
    j["statement"] = to_string(r.id);
    j["section"] = "identity";
    j["p"] = nullptr;
    j["k"] = nullptr;
    j["a_num"] = nullptr;
    j["a_den"] = nullptr;
    j["n"] = r.n;
    j["lhs"] = r.check.lhs.get_str();
    j["rhs"] = r.check.rhs.get_str();
    j["verdict"] = r.check.pass ? "PASS" : "FAIL";
    j["skip_reason"] = nullptr;
    return j;
}

constexpr const char* kColumns[] = {"statement", "section", "p", "k", "a_num", "a_den",
                                    "n", "lhs", "rhs", "verdict", "skip_reason"};

void write_csv_row(std::ostream& out, const nlohmann::ordered_json& j) {
    bool first = true;
    for (const char* col : kColumns) {
        if (!first) out << ',';
        first = false;
        const auto& v = j.at(col);
        if (v.is_null()) continue;
        if (v.is_string()) {
            const std::string s = v.get<std::string>();
            if (s.find_first_of(",\"\n") != std::string::npos) {
                out << '"';
                for (char c : s) out << (c == '"' ? "\"\"" : std::string(1, c));
                out << '"';
            } else {
                out << s;
            }
        } else {
            out << v.dump();
        }
    }
    out << '\n';
}

}  // namespace

Selection parse_selection(std::string_view list) {
    Selection sel;
    auto add_statement = [&](StatementId id) {
        if (std::find(sel.statements.begin(), sel.statements.end(), id) == sel.statements.end()) {
            sel.statements.push_back(id);
        }
    };
    auto add_identity = [&](IdentityId id) {
        if (std::find(sel.identities.begin(), sel.identities.end(), id) == sel.identities.end()) {
            sel.identities.push_back(id);
        }
    };

    std::size_t pos = 0;
    while (pos <= list.size()) {
        const std::size_t comma = list.find(',', pos);
        const std::string token(trim(list.substr(pos, comma == std::string_view::npos ? list.npos : comma - pos)));
        pos = comma == std::string_view::npos ? list.size() + 1 : comma + 1;
        if (token.empty()) continue;

        const bool all = token == "all";
        if (all || token == "theorems") {
            for (const auto& s : kStatements) {
                if (s.klass == StatementClass::Theorem) add_statement(s.id);
            }
        }
        if (all || token == "conjectures") {
            for (const auto& s : kStatements) {
                if (s.klass == StatementClass::Conjecture) add_statement(s.id);
            }
        }
        if (all || token == "identities") {
            for (IdentityId id : kAllIdentities) add_identity(id);
        }
        if (all || token == "theorems" || token == "conjectures" || token == "identities") continue;

        if (auto id = statement_from_string(token)) {
            add_statement(*id);
        } else if (auto ident = identity_from_string(token)) {
            add_identity(*ident);
        } else {
            throw Error(ErrorCode::InvalidArgument, "unknown statement '" + token + "'");
        }
    }
    std::sort(sel.statements.begin(), sel.statements.end());
    if (sel.statements.empty() && sel.identities.empty()) {
        throw Error(ErrorCode::InvalidArgument, "empty statement selection");
    }
    return sel;
}

ReportFormat parse_format(std::string_view name) {
    if (name == "jsonl") return ReportFormat::JsonLines;
    if (name == "csv") return ReportFormat::Csv;
    throw Error(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "'");
}

void validate(const ScanConfig& config) {
    if (config.prime_lo > config.prime_hi) {
        throw Error(ErrorCode::InvalidArgument, "prime range is empty: lo > hi");
    }
    if (config.jobs < 1) throw Error(ErrorCode::InvalidArgument, "jobs must be >= 1");
    if (config.power && (*config.power < 1 || *config.power > 3)) {
        throw Error(ErrorCode::InvalidArgument, "power must be 1, 2 or 3");
    }
    if (config.sample_count < 0) throw Error(ErrorCode::InvalidArgument, "sample count must be >= 0");
    if (config.n_max < 0) throw Error(ErrorCode::InvalidArgument, "n-max must be >= 0");
    if (config.statements.empty() && config.identities.empty()) {
        throw Error(ErrorCode::InvalidArgument, "no statements selected");
    }
    const bool cubic = std::any_of(config.statements.begin(), config.statements.end(),
                                   [&](StatementId id) { return effective_power(id, config.power) == 3; });
    if (cubic && config.prime_hi > 1000 && !config.force) {
        throw Error(ErrorCode::InvalidArgument,
                    "k=3 scans above p=1000 evaluate Gamma_p in O(p^3); pass --force to run anyway");
    }
}

std::optional<PRational> parse_fraction(std::string_view text) {
    std::string s(trim(text));
    // U+2212 MINUS SIGN
    if (s.rfind("\xE2\x88\x92", 0) == 0) s = "-" + s.substr(3);
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    const auto slash = s.find('/');
    const auto num = parse_int(trim(std::string_view(s).substr(0, slash)));
    if (!num) return std::nullopt;
    std::int64_t den = 1;
    if (slash != std::string::npos) {
        const auto d = parse_int(trim(std::string_view(s).substr(slash + 1)));
        if (!d || *d <= 0) return std::nullopt;
        den = *d;
    }
    return PRational(*num, den);
}

std::vector<PRational> parse_params(std::istream& in, std::string_view source) {
    std::vector<PRational> out;
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        std::string_view body = line;
        if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
        body = trim(body);
        if (body.empty()) continue;
        auto value = parse_fraction(body);
        if (!value) {
            throw Error(ErrorCode::Parse, std::string(source) + ":" + std::to_string(lineno) +
                                              ": malformed parameter '" + std::string(body) + "'");
        }
        out.push_back(*value);
    }
    return out;
}

std::vector<PRational> parse_params(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot read parameter file " + path.string());
    return parse_params(in, path.string());
}

std::vector<PRational> sample_fractions(std::uint32_t p, std::uint64_t seed, int count,
                                        const std::vector<PRational>& exclude) {
    std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(p) * kGolden));
    std::vector<PRational> out;
    for (int attempts = 0; static_cast<int>(out.size()) < count && attempts < 100000; ++attempts) {
        const auto m = static_cast<std::int64_t>(rng() % 41) - 20;
        const auto n = static_cast<std::int64_t>(rng() % 20) + 1;
        if (n % p == 0) continue;
        const PRational x(m, n);
        if (!x.is_p_integral(p) || contains(exclude, x) || contains(out, x)) continue;
        out.push_back(x);
    }
    return out;
}

std::vector<PRational> default_parameters(std::uint32_t p, std::uint64_t seed, int count) {
    std::vector<PRational> params;
    for (std::uint32_t a = 0; a < p; ++a) params.emplace_back(a);
    for (const PRational& named : {PRational(-1, 2), PRational(-1, 3), PRational(-1, 4), PRational(-1, 6)}) {
        if (!contains(params, named)) params.push_back(named);
    }
    const auto sampled = sample_fractions(p, seed, count, params);
    params.insert(params.end(), sampled.begin(), sampled.end());
    return params;
}

ScanResult run_scan(const ScanConfig& config) {
    validate(config);
    std::optional<std::vector<PRational>> file_params;
    if (config.params_path) file_params = parse_params(*config.params_path);

    ScanResult result;
    const std::vector<std::uint32_t> primes = sieve_primes(config.prime_lo, config.prime_hi);
    std::vector<std::vector<ReportRecord>> per_prime(primes.size());

    if (!config.statements.empty() && !primes.empty()) {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            for (std::size_t i = next++; i < primes.size(); i = next++) {
                try {
                    per_prime[i] = scan_prime(primes[i], config, file_params ? &*file_params : nullptr);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        };
        const unsigned jobs = std::min<std::size_t>(config.jobs, primes.size());
        std::vector<std::jthread> pool;
        for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
        worker();
        pool.clear();
        if (failure) std::rethrow_exception(failure);
    }
    for (auto& chunk : per_prime) {
        result.records.insert(result.records.end(), std::make_move_iterator(chunk.begin()),
                              std::make_move_iterator(chunk.end()));
    }
    std::sort(result.records.begin(), result.records.end(), record_less);

    for (IdentityId id : config.identities) {
        auto part = sweep_identity(id, config.n_max);
        result.identity_records.insert(result.identity_records.end(), std::make_move_iterator(part.begin()),
                                       std::make_move_iterator(part.end()));
    }

    for (StatementId id : config.statements) {
        Tally t{std::string(info(id).name), info(id).klass == StatementClass::Conjecture, false};
        for (const auto& r : result.records) {
            if (r.statement != id) continue;
            switch (r.verdict) {
                case Verdict::Pass: ++t.pass; break;
                case Verdict::Fail: ++t.fail; break;
                case Verdict::Skipped: ++t.skipped; break;
            }
        }
        if (t.fail > 0) (t.conjecture ? result.conjecture_failure : result.theorem_failure) = true;
        result.tallies.push_back(std::move(t));
    }
    for (IdentityId id : config.identities) {
        Tally t{to_string(id), false, true};
        for (const auto& r : result.identity_records) {
            if (r.id == id) ++(r.check.pass ? t.pass : t.fail);
        }
        if (t.fail > 0) result.theorem_failure = true;
        result.tallies.push_back(std::move(t));
    }
    result.exit_code = exit_status(result, config.strict);
    return result;
}

int exit_status(const ScanResult& result, bool strict) {
    return (result.theorem_failure || (strict && result.conjecture_failure)) ? 1 : 0;
}

void write_report(const ScanResult& result, std::ostream& out, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        bool first = true;
        for (const char* col : kColumns) {
            out << (first ? "" : ",") << col;
            first = false;
        }
        out << '\n';
    }
    auto emit = [&](const nlohmann::ordered_json& j) {
        if (format == ReportFormat::JsonLines) {
            out << j.dump() << '\n';
        } else {
            write_csv_row(out, j);
        }
    };
    for (const auto& r : result.records) emit(to_json(r));
    for (const auto& r : result.identity_records) emit(to_json(r));
}

std::string summary_table(const ScanResult& result) {
    std::ostringstream os;
    auto section = [&](const char* title, auto pick) {
        bool header = false;
        for (const auto& t : result.tallies) {
            if (!pick(t)) continue;
            if (!header) {
                os << title << '\n';
                char line[96];
                std::snprintf(line, sizeof line, "  %-12s %8s %8s %8s\n", "statement", "PASS", "FAIL", "SKIPPED");
                os << line;
                header = true;
            }
            char line[96];
            std::snprintf(line, sizeof line, "  %-12s %8lld %8lld %8lld\n", t.name.c_str(),
                          static_cast<long long>(t.pass), static_cast<long long>(t.fail),
                          static_cast<long long>(t.skipped));
            os << line;
        }
    };
    section("theorems", [](const Tally& t) { return !t.conjecture && !t.identity; });
    section("conjectures (non-blocking unless --strict)", [](const Tally& t) { return t.conjecture; });
    section("identities", [](const Tally& t) { return t.identity; });
    return os.str();
}

int run_scan_to_report(const ScanConfig& config, std::ostream& summary) {
    validate(config);
    std::ofstream file;
    if (config.out_path != "-") {
        file.open(config.out_path, std::ios::binary | std::ios::trunc);
        if (!file) throw Error(ErrorCode::Io, "cannot write report to " + config.out_path);
    }
    const ScanResult result = run_scan(config);
    std::ostream& out = config.out_path == "-" ? std::cout : file;
    write_report(result, out, config.format);
    out.flush();
    if (!out) throw Error(ErrorCode::Io, "failed writing report to " + config.out_path);
    summary << summary_table(result);
    return result.exit_code;
}

}  // namespace supercong
