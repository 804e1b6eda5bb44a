// twinsort: sort newline-delimited values with the twin (odd-even pair)
// sorting technique, reproduce its efficiency table, verify it
// exhaustively against a brute-force oracle, and benchmark it against
// classical sorts.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O or
// parse error.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twinsort/bench.hpp"
#include "twinsort/efficiency.hpp"
#include "twinsort/element.hpp"
#include "twinsort/generate.hpp"
#include "twinsort/twin_sort.hpp"
#include "twinsort/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace twinsort;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

constexpr std::uint64_t kTableMaxN = 1'000'000;

// ---------------------------------------------------------------- sort

std::optional<std::int64_t> parse_int_key(std::string_view s) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

std::optional<double> parse_float_key(std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v,
                                           std::chars_format::general);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

// Total order on keys; for float, NaN values group last under ascending
// order and compare equal to each other. Descending inverts the
// comparator (never post-reverses, which would break stability).
template <class K>
struct KeyCompare {
    bool descending = false;

    static bool key_less(const K& x, const K& y) {
        if constexpr (std::is_same_v<K, double>) {
            if (std::isnan(x)) return false;
            if (std::isnan(y)) return true;
        }
        return x < y;
    }

    bool operator()(const Keyed<K, std::string>& a,
                    const Keyed<K, std::string>& b) const {
        return descending ? key_less(b.key, a.key) : key_less(a.key, b.key);
    }
};

struct SortOptions {
    std::string file = "-";
    std::string type = "int";
    std::string order = "asc";
    bool trace = false;
    std::string stats_out;
};

// Reads lines, stripping one trailing '\r' per line (CRLF input).
bool read_lines(std::istream& in, std::vector<std::string>& lines) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return !in.bad();
}

template <class K, class ParseKey>
int sort_typed(std::vector<std::string> lines, ParseKey parse_key,
               const SortOptions& opt) {
    std::vector<Keyed<K, std::string>> elems;
    elems.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::optional<K> key = parse_key(lines[i]);
        if (!key) {
            std::cerr << "twinsort: parse error at line " << i + 1 << ": '"
                      << lines[i] << "' is not a valid " << opt.type
                      << " key\n";
            return kExitIo;
        }
        elems.push_back({*key, std::move(lines[i])});
    }

    const KeyCompare<K> compare{opt.order == "desc"};
    SortStats stats;
    PassTrace<Keyed<K, std::string>> trace;
    if (opt.trace)
        stats = twin_sort_traced(elems, trace, compare);
    else
        stats = twin_sort(elems, compare);

    for (const auto& e : elems) std::cout << e.payload << '\n';

    ordered_json stats_json;
    stats_json["n"] = stats.n;
    stats_json["comparisons"] = stats.comparisons;
    stats_json["swaps"] = stats.swaps;
    stats_json["passes"] = stats.passes;
    stats_json["terminated_early"] = stats.terminated_early;

    std::ofstream stats_file;
    std::ostream* stats_stream = &std::cerr;
    if (!opt.stats_out.empty()) {
        stats_file.open(opt.stats_out);
        if (!stats_file) {
            std::cerr << "twinsort: cannot open stats output '"
                      << opt.stats_out << "'\n";
            return kExitIo;
        }
        stats_stream = &stats_file;
    }
    *stats_stream << stats_json.dump() << '\n';

    if (opt.trace) {
        ordered_json trace_json;
        ordered_json initial = ordered_json::array();
        for (const auto& e : trace.initial) initial.push_back(e.key);
        trace_json["initial"] = std::move(initial);
        ordered_json snapshots = ordered_json::array();
        for (const auto& snap : trace.snapshots) {
            ordered_json arr = ordered_json::array();
            for (const auto& e : snap.elements) arr.push_back(e.key);
            snapshots.push_back(std::move(arr));
        }
        trace_json["snapshots"] = std::move(snapshots);
        *stats_stream << trace_json.dump() << '\n';
    }
    return kExitOk;
}

int run_sort(const SortOptions& opt) {
    std::vector<std::string> lines;
    if (opt.file == "-") {
        if (!read_lines(std::cin, lines)) {
            std::cerr << "twinsort: error reading standard input\n";
            return kExitIo;
        }
    } else {
        std::ifstream in(opt.file);
        if (!in) {
            std::cerr << "twinsort: cannot open '" << opt.file << "'\n";
            return kExitIo;
        }
        if (!read_lines(in, lines)) {
            std::cerr << "twinsort: error reading '" << opt.file << "'\n";
            return kExitIo;
        }
    }

    if (opt.type == "int")
        return sort_typed<std::int64_t>(std::move(lines), parse_int_key, opt);
    if (opt.type == "float")
        return sort_typed<double>(std::move(lines), parse_float_key, opt);
    return sort_typed<std::string>(
        std::move(lines),
        [](std::string_view s) {
            return std::optional<std::string>(std::string(s));
        },
        opt);
}

// --------------------------------------------------------------- table

int run_table(std::uint64_t n_min, std::uint64_t n_max,
              const std::string& format) {
    if (n_min > n_max || n_max > kTableMaxN) {
        std::cerr << "twinsort: invalid range --min " << n_min << " --max "
                  << n_max << " (need 0 <= min <= max <= " << kTableMaxN
                  << ")\n";
        return kExitUsage;
    }
    const std::vector<EfficiencyRow> rows = efficiency_table(n_min, n_max);
    if (format == "csv") {
        std::cout << "n,best,worst,avg\n";
        for (const EfficiencyRow& row : rows)
            std::cout << row.n << ',' << row.best << ',' << row.worst << ','
                      << format_average(row.worst) << '\n';
    } else {
        ordered_json table = ordered_json::array();
        for (const EfficiencyRow& row : rows) {
            ordered_json obj;
            obj["n"] = row.n;
            obj["best"] = row.best;
            obj["worst"] = row.worst;
            if (row.worst % 2 == 0)
                obj["avg"] = row.worst / 2;
            else
                obj["avg"] = row.average;  // exact x.5
            table.push_back(std::move(obj));
        }
        std::cout << table.dump() << '\n';
    }
    return kExitOk;
}

// -------------------------------------------------------------- verify

struct GoldenEntry {
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 1;
};

int run_verify(std::size_t max_n, bool bless, const std::string& golden_path) {
    std::map<std::size_t, GoldenEntry> golden;
    bool have_golden = false;
    if (!bless) {
        std::ifstream f(golden_path);
        if (f) {
            try {
                const auto doc = ordered_json::parse(f);
                for (const auto& [key, value] : doc.items())
                    golden[std::stoul(key)] = {value.at("numerator"),
                                               value.at("denominator")};
                have_golden = true;
            } catch (const std::exception& e) {
                std::cerr << "twinsort: bad golden file '" << golden_path
                          << "': " << e.what() << '\n';
                return kExitIo;
            }
        } else {
            std::cout << "note: no golden file at '" << golden_path
                      << "' (run with --bless to create it)\n";
        }
    }

    bool all_pass = true;
    std::string first_failure;
    ordered_json blessed;
    for (std::size_t n = 1; n <= max_n; ++n) {
        const VerificationReport report = verify_permutations(n);
        const StabilityResult stability =
            stability_check(n, DuplicateProfile{4, 200, 1000 + n});

        std::string golden_note = "none";
        bool golden_ok = true;
        if (have_golden) {
            const auto it = golden.find(n);
            if (it == golden.end()) {
                golden_note = "no-entry";
            } else if (it->second.numerator == report.mean_comparisons.num &&
                       it->second.denominator == report.mean_comparisons.den) {
                golden_note = "ok";
            } else {
                golden_note = "MISMATCH";
                golden_ok = false;
            }
        }

        const bool pass = report.passed() && stability.passed && golden_ok;
        all_pass = all_pass && pass;

        std::cout << "n=" << n << ": checked=" << report.permutations_checked
                  << " max_comparisons=" << report.max_comparisons
                  << " mean_comparisons="
                  << to_string(report.mean_comparisons)
                  << " model_avg=" << format_average(worst_case(n))
                  << " stability=" << (stability.passed ? "ok" : "FAIL")
                  << " golden=" << golden_note << ' '
                  << (pass ? "PASS" : "FAIL") << '\n';

        if (!pass && first_failure.empty()) {
            if (!report.failures.empty()) {
                const Failure& f = report.failures.front();
                first_failure = "n=" + std::to_string(n) + " " +
                                failure_kind_name(f.kind) + " input=[";
                for (std::size_t i = 0; i < f.input.size(); ++i)
                    first_failure += (i ? " " : "") +
                                     std::to_string(f.input[i]);
                first_failure += "]";
            } else if (!stability.passed) {
                first_failure = "n=" + std::to_string(n) + " unstable keys=[";
                for (std::size_t i = 0;
                     i < stability.first_failing_keys.size(); ++i)
                    first_failure +=
                        (i ? " " : "") +
                        std::to_string(stability.first_failing_keys[i]);
                first_failure += "]";
            } else {
                first_failure =
                    "n=" + std::to_string(n) + " golden mismatch: measured " +
                    to_string(report.mean_comparisons);
            }
        }

        ordered_json entry;
        entry["numerator"] = report.mean_comparisons.num;
        entry["denominator"] = report.mean_comparisons.den;
        blessed[std::to_string(n)] = std::move(entry);
    }

    if (!all_pass) {
        std::cout << "FAIL: first failing case: " << first_failure << '\n';
        return kExitVerifyFail;
    }

    if (bless) {
        std::ofstream out(golden_path);
        if (!out) {
            std::cerr << "twinsort: cannot write golden file '" << golden_path
                      << "'\n";
            return kExitIo;
        }
        out << blessed.dump(2) << '\n';
        std::cout << "blessed golden file '" << golden_path << "' for n=1.."
                  << max_n << '\n';
    }
    std::cout << "all checks passed for n=1.." << max_n << '\n';
    return kExitOk;
}

// --------------------------------------------------------------- bench

int run_bench_cmd(const std::vector<std::string>& algo_names,
                  const std::vector<std::string>& gen_names,
                  const std::vector<std::size_t>& sizes, std::uint64_t trials,
                  std::uint64_t seed, bool measure_time,
                  const std::string& format) {
    BenchConfig config;
    for (const std::string& name : algo_names) {
        const std::optional<Algo> algo = parse_algo(name);
        if (!algo) {
            std::cerr << "twinsort: unknown algorithm '" << name
                      << "' (expected twin, insertion, merge, quick)\n";
            return kExitUsage;
        }
        config.algorithms.push_back(*algo);
    }
    for (const std::string& name : gen_names) {
        const std::optional<GeneratorKind> kind = parse_generator(name);
        if (!kind) {
            std::cerr << "twinsort: unknown generator '" << name
                      << "' (expected sorted, reversed, random, "
                         "nearly_sorted, few_unique)\n";
            return kExitUsage;
        }
        config.generators.push_back(*kind);
    }
    config.sizes = sizes;
    config.trials = trials;
    config.seed = seed;
    config.measure_time = measure_time;

    const std::vector<BenchRecord> records = run_bench(config);
    if (format == "csv") {
        write_bench_csv(std::cout, records);
    } else {
        ordered_json arr = ordered_json::array();
        for (const BenchRecord& rec : records) {
            ordered_json obj;
            obj["algo"] = algo_name(rec.algo);
            obj["generator"] = generator_name(rec.generator);
            obj["n"] = rec.n;
            obj["seed"] = rec.seed;
            obj["trial"] = rec.trial;
            obj["comparisons"] = rec.comparisons;
            obj["swaps"] = rec.swaps;
            if (rec.elapsed_ns)
                obj["elapsed_ns"] = *rec.elapsed_ns;
            else
                obj["elapsed_ns"] = nullptr;
            arr.push_back(std::move(obj));
        }
        std::cout << arr.dump() << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "twinsort: odd-even pair sorting with early termination -- "
        "sort, efficiency table, exhaustive verification, benchmarks"};
    app.require_subcommand(1);

    // sort
    SortOptions sort_opt;
    CLI::App* sort_cmd =
        app.add_subcommand("sort", "Sort newline-delimited values");
    sort_cmd->add_option("file", sort_opt.file,
                         "input file ('-' or omitted: standard input)");
    sort_cmd->add_option("--type", sort_opt.type, "key type")
        ->check(CLI::IsMember({"int", "float", "text"}))
        ->capture_default_str();
    sort_cmd->add_option("--order", sort_opt.order, "sort direction")
        ->check(CLI::IsMember({"asc", "desc"}))
        ->capture_default_str();
    sort_cmd->add_flag("--trace", sort_opt.trace,
                       "emit per-pass snapshots as a second JSON document");
    sort_cmd->add_option("--stats-out", sort_opt.stats_out,
                         "write stats/trace JSON to this file instead of "
                         "standard error");

    // table
    std::uint64_t table_min = 2;
    std::uint64_t table_max = 13;
    std::string table_format = "csv";
    CLI::App* table_cmd = app.add_subcommand(
        "table", "Print the best/worst/average comparison-count table");
    table_cmd->add_option("--min", table_min, "smallest n")
        ->capture_default_str();
    table_cmd->add_option("--max", table_max, "largest n")
        ->capture_default_str();
    table_cmd->add_option("--format", table_format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    // verify
    std::size_t verify_max_n = 8;
    bool verify_bless = false;
    std::string golden_path = "goldens/empirical_avg.json";
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "Exhaustively check all permutations up to --max-n");
    verify_cmd->add_option("--max-n", verify_max_n, "largest instance size")
        ->check(CLI::Range(std::size_t{1}, kMaxVerifyN))
        ->capture_default_str();
    verify_cmd->add_flag("--bless", verify_bless,
                         "rewrite the empirical-average golden file");
    verify_cmd->add_option("--golden", golden_path, "golden file path")
        ->capture_default_str();

    // bench
    std::vector<std::string> algo_names{"twin", "insertion", "merge", "quick"};
    std::vector<std::string> gen_names{"sorted", "reversed", "random",
                                       "nearly_sorted", "few_unique"};
    std::vector<std::size_t> sizes{16, 64, 256};
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    bool measure_time = false;
    std::string bench_format = "csv";
    CLI::App* bench_cmd = app.add_subcommand(
        "bench", "Run counted (and optionally timed) sorting trials");
    bench_cmd->add_option("--algos", algo_names, "algorithms to run")
        ->delimiter(',')
        ->capture_default_str();
    bench_cmd->add_option("--gens", gen_names, "input generators")
        ->delimiter(',')
        ->capture_default_str();
    bench_cmd->add_option("--sizes", sizes, "input sizes")
        ->delimiter(',')
        ->capture_default_str();
    bench_cmd->add_option("--trials", trials, "trials per cell")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench_cmd->add_option("--seed", seed, "top-level seed")
        ->capture_default_str();
    bench_cmd->add_flag("--time", measure_time,
                        "measure wall time around each sort call");
    bench_cmd->add_option("--format", bench_format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sort_cmd->parsed()) return run_sort(sort_opt);
        if (table_cmd->parsed())
            return run_table(table_min, table_max, table_format);
        if (verify_cmd->parsed())
            return run_verify(verify_max_n, verify_bless, golden_path);
        if (bench_cmd->parsed())
            return run_bench_cmd(algo_names, gen_names, sizes, trials, seed,
                                 measure_time, bench_format);
    } catch (const std::exception& e) {
        std::cerr << "twinsort: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;  // unreachable with require_subcommand(1)
}
