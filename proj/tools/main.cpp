#include <cctype>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "windowlab/serialize.hpp"

namespace {

using namespace windowlab;

// `--seq` accepts either literal digits or @path; file contents are one
// sequence with all whitespace stripped.
CircularBitSeq load_sequence(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        const std::string path = arg.substr(1);
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::invalid_argument("cannot open " + path);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        std::erase_if(text, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
        return CircularBitSeq::parse(text);
    }
    return CircularBitSeq::parse(arg);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_count(const std::string& seq_arg, int k, const std::string& format, unsigned workers) {
    const auto cv = count_windows_rolling(load_sequence(seq_arg), Order(k), workers);
    if (format == "tsv")
        std::cout << tsv_of(cv);
    else
        emit(json_of(cv));
    return 0;
}

int run_verify_one(const CircularBitSeq& seq) {
    const auto report = verify_equal_differences(seq);
    emit(json_of(report));
    return report.holds ? 0 : 1;
}

int run_verify_sweep(int n_min, int n_max, unsigned workers) {
    const auto report = exhaustive_verify(n_min, n_max, workers);
    emit(json_of(report));
    return report.violations.empty() ? 0 : 1;
}

int run_delta(const std::string& context_arg, int bit) {
    if (context_arg.size() != 6)
        throw std::invalid_argument("context must be exactly 6 binary digits");
    BoundaryContext ctx{};
    for (std::size_t i = 0; i < 6; ++i) {
        if (context_arg[i] != '0' && context_arg[i] != '1')
            throw std::invalid_argument("invalid digit at position " + std::to_string(i));
        ctx.p[i] = static_cast<std::uint8_t>(context_arg[i] - '0');
    }
    ctx.appended = static_cast<std::uint8_t>(bit & 1);
    emit(json_of(ctx, delta_from_context(ctx)));
    return 0;
}

int run_tables(const std::string& out_dir, const std::string& format) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    const std::string ext = format == "md" ? ".md" : ".tsv";
    for (const auto& table : {gen_basis_table(), gen_lost_table(), gen_adjoined_table(0),
                              gen_adjoined_table(1), gen_delta_table(0), gen_delta_table(1)}) {
        std::ofstream out(fs::path(out_dir) / (table.name + ext), std::ios::binary);
        out << (format == "md" ? to_markdown(table) : to_tsv(table));
    }
    const auto report = validate_tables();
    emit(json_of(report));
    return report.oracle_failures.empty() && report.tables_consistent ? 0 : 1;
}

int run_discover(int k, const std::string& method, unsigned max_len) {
    if (method == "constructive") {
        emit(json_of(constructive_basis(Order(k))));
        return 0;
    }
    if (method == "empirical") {
        emit(json_of(empirical_basis(Order(k), max_len)));
        return 0;
    }
    const auto con = constructive_basis(Order(k));
    const auto emp = empirical_basis(Order(k), max_len);
    const bool agree = equal_spans(con, emp);
    Json j = json_of(con);
    j["method"] = "both";
    j["agreement"] = agree;
    if (!agree) {
        j["constructive"] = json_of(con);
        j["empirical"] = json_of(emp);
    }
    emit(j);
    return agree ? 0 : 1;
}

int run_reversal(int k, unsigned search_len) {
    emit(json_of(reversal_pair_report(Order(k), search_len)));
    return 0;
}

int run_bench(std::uint64_t len, std::uint64_t seed, int k, unsigned workers) {
    using clock = std::chrono::steady_clock;
    const auto seq = CircularBitSeq::random(len, seed);
    const auto t0 = clock::now();
    const auto fast = count_windows_rolling(seq, Order(k), workers);
    const auto t1 = clock::now();
    const auto slow = count_windows(seq, Order(k));
    const auto t2 = clock::now();
    const double rolling_s = std::chrono::duration<double>(t1 - t0).count();
    const double naive_s = std::chrono::duration<double>(t2 - t1).count();
    const bool equal = fast == slow;
    emit(Json{{"k", k},
              {"len", len},
              {"seed", seed},
              {"workers", workers},
              {"rolling_seconds", rolling_s},
              {"naive_seconds", naive_s},
              {"speedup", naive_s / rolling_s},
              {"rolling_mdigits_per_second", static_cast<double>(len) / 1e6 / rolling_s},
              {"vectors_equal", equal}});
    return equal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circular binary sequence window counts, pair-difference checks, "
                 "reference-table regeneration and invariant discovery"};
    app.require_subcommand(1);

    unsigned workers = default_workers();

    auto* count = app.add_subcommand("count", "count all order-k windows of a sequence");
    std::string count_seq, count_format = "json";
    int count_k = 0;
    count->add_option("--seq", count_seq, "digits or @file")->required();
    count->add_option("--k", count_k, "window length")->required();
    count->add_option("--format", count_format)->check(CLI::IsMember({"json", "tsv"}));
    count->add_option("--workers", workers)->envname("WINDOW_LAB_WORKERS");

    auto* verify = app.add_subcommand("verify", "check the equal-differences property");
    std::string verify_seq;
    bool verify_random = false, verify_exhaustive = false;
    std::uint64_t verify_len = 0, verify_seed = 0;
    int verify_min_n = 0, verify_max_n = 0;
    auto* vs = verify->add_option("--seq", verify_seq, "digits or @file");
    auto* vr = verify->add_flag("--random", verify_random, "verify one seeded random sequence");
    auto* vx = verify->add_flag("--exhaustive", verify_exhaustive,
                                "verify every sequence of every length in a range");
    auto* vlen = verify->add_option("--len", verify_len);
    auto* vseed = verify->add_option("--seed", verify_seed);
    auto* vmin = verify->add_option("--min-n", verify_min_n);
    auto* vmax = verify->add_option("--max-n", verify_max_n);
    vr->needs(vlen)->needs(vseed)->excludes(vs)->excludes(vx);
    vx->needs(vmin)->needs(vmax)->excludes(vs);
    verify->add_option("--workers", workers)->envname("WINDOW_LAB_WORKERS");

    auto* delta = app.add_subcommand("delta", "lost/gained windows for one boundary context");
    std::string delta_context;
    int delta_bit = 0;
    delta->add_option("--context", delta_context, "6 digits: d_{n-3} d_{n-2} d_{n-1} d_0 d_1 d_2")
        ->required();
    delta->add_option("--bit", delta_bit, "appended digit")->required()->check(CLI::Range(0, 1));

    auto* tables = app.add_subcommand("tables", "regenerate the six reference tables");
    std::string tables_out, tables_format = "tsv";
    tables->add_option("--out", tables_out, "output directory")->required();
    tables->add_option("--format", tables_format)->check(CLI::IsMember({"tsv", "md"}));

    auto* discover = app.add_subcommand("discover", "basis of all vanishing count functionals");
    int discover_k = 0;
    std::string discover_method = "constructive";
    unsigned discover_max_len = 0;
    discover->add_option("--k", discover_k, "window length")->required();
    discover->add_option("--method", discover_method)
        ->check(CLI::IsMember({"constructive", "empirical", "both"}));
    discover->add_option("--max-len", discover_max_len,
                         "empirical enumeration length bound (default 2^(k-1))");

    auto* reversal = app.add_subcommand("reversal-report", "classify all reversal pairs");
    int reversal_k = 0;
    unsigned reversal_search = 0;
    reversal->add_option("--k", reversal_k, "window length")->required();
    reversal->add_option("--search-len", reversal_search,
                         "counterexample search bound (default 2^(k-1))");

    auto* bench = app.add_subcommand("bench", "rolling vs reference counter throughput");
    std::uint64_t bench_len = 0, bench_seed = 0;
    int bench_k = 4;
    bench->add_option("--len", bench_len)->required();
    bench->add_option("--seed", bench_seed)->required();
    bench->add_option("--k", bench_k);
    bench->add_option("--workers", workers)->envname("WINDOW_LAB_WORKERS");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(count)) return run_count(count_seq, count_k, count_format, workers);
        if (app.got_subcommand(verify)) {
            if (verify_exhaustive) return run_verify_sweep(verify_min_n, verify_max_n, workers);
            if (verify_random)
                return run_verify_one(CircularBitSeq::random(verify_len, verify_seed));
            if (!verify_seq.empty()) return run_verify_one(load_sequence(verify_seq));
            throw std::invalid_argument("verify needs --seq, --random or --exhaustive");
        }
        if (app.got_subcommand(delta)) return run_delta(delta_context, delta_bit);
        if (app.got_subcommand(tables)) return run_tables(tables_out, tables_format);
        if (app.got_subcommand(discover)) {
            if (discover_max_len == 0)
                discover_max_len = discover_k >= 1 ? (1u << (discover_k - 1)) : 1u;
            return run_discover(discover_k, discover_method, discover_max_len);
        }
        if (app.got_subcommand(reversal)) {
            if (reversal_search == 0)
                reversal_search = reversal_k >= 1 ? (1u << (reversal_k - 1)) : 1u;
            return run_reversal(reversal_k, reversal_search);
        }
        if (app.got_subcommand(bench)) return run_bench(bench_len, bench_seed, bench_k, workers);
    } catch (const std::logic_error& e) {
        // domain contract violations are usage errors; refuted invariants are not
        if (dynamic_cast<const std::invalid_argument*>(&e)) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        std::cerr << "violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
