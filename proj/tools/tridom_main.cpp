// Command-line front end: every subcommand reads the text formats, emits a
// JSON report on stdout (or to -o), and maps verdicts to exit codes:
// 0 = success / property holds, 1 = property fails or a checked bound is
// violated, 2 = usage or input error.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "tridom/construct.hpp"
#include "tridom/digraph.hpp"
#include "tridom/json_io.hpp"
#include "tridom/search.hpp"
#include "tridom/tournament.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFails = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
    bool quiet = false;
    int threads = 1;
    std::string report_path;  // empty = stdout
};

void emit_report(const tridom::Json& report, const CommonOpts& opts) {
    if (opts.quiet) return;
    if (opts.report_path.empty()) {
        std::cout << report.dump(2) << '\n';
    } else {
        std::ofstream out(opts.report_path);
        if (!out) throw tridom::ParseError("cannot open report file: " + opts.report_path);
        out << report.dump(2) << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"3-tournament domination toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // accept --quiet / --threads after the subcommand too

    CommonOpts opts;
    app.add_flag("--quiet", opts.quiet, "suppress report output, keep only the exit code");
    app.add_option("--threads", opts.threads, "worker hint for parallelizable operations")
        ->check(CLI::PositiveNumber);

    std::string in_path, out_path, out_dir;
    int k = 1, b = 1, l = 2, n = 0, n_max = 0, limit = 10, trials = 1000;
    std::uint64_t seed = 0;
    double arc_p = 0.5;
    bool record_map = false, exact_mode = false, greedy_mode = false, random_mode = false;

    auto* cmd_girth = app.add_subcommand("girth", "minimum directed-cycle length of a digraph");
    cmd_girth->add_option("file", in_path, "digraph file")->required();

    auto* cmd_sk = app.add_subcommand("sk", "check property S_k of a digraph");
    cmd_sk->add_option("file", in_path, "digraph file")->required();
    cmd_sk->add_option("-k", k, "set size")->required()->check(CLI::PositiveNumber);
    cmd_sk->add_flag("--record-map", record_map, "include one dominator per k-set");

    auto* cmd_power = app.add_subcommand("power", "b-th power of a digraph");
    cmd_power->add_option("file", in_path, "digraph file")->required();
    cmd_power->add_option("-b", b, "power")->required()->check(CLI::PositiveNumber);
    cmd_power->add_option("-o", out_path, "output digraph file")->required();

    auto* cmd_build = app.add_subcommand(
        "build-td", "build the max-path-tail tournament of a girth >= 4 digraph");
    cmd_build->add_option("file", in_path, "digraph file")->required();
    cmd_build->add_option("-o", out_path, "output tournament file")->required();

    auto* cmd_dom = app.add_subcommand("dominate", "domination number of a 3-tournament");
    cmd_dom->add_option("file", in_path, "tournament file")->required();
    auto* flag_exact = cmd_dom->add_flag("--exact", exact_mode, "exact solver");
    cmd_dom->add_flag("--greedy", greedy_mode, "greedy upper bound")->excludes(flag_exact);

    auto* cmd_pt = app.add_subcommand(
        "pair-tail", "check that every 4 vertices induce two triples with the same tail");
    cmd_pt->add_option("file", in_path, "tournament file")->required();

    auto* cmd_verify = app.add_subcommand(
        "verify", "verify the domination and pair-tail conclusions for a digraph");
    cmd_verify->add_option("file", in_path, "digraph file")->required();
    cmd_verify->add_option("-k", k, "property S_k parameter")->required()
        ->check(CLI::PositiveNumber);

    auto* cmd_search = app.add_subcommand("search", "find digraphs with S_k and girth >= l");
    cmd_search->add_option("-k", k, "property S_k parameter")->required()
        ->check(CLI::PositiveNumber);
    cmd_search->add_option("-l", l, "girth floor")->required()->check(CLI::Range(2, 1 << 20));
    auto* opt_n = cmd_search->add_option("--n", n, "single order to search");
    auto* opt_nmax = cmd_search->add_option("--n-max", n_max, "search orders k+1..n_max");
    opt_n->excludes(opt_nmax);
    cmd_search->add_option("--limit", limit, "stop after this many witnesses")
        ->check(CLI::PositiveNumber);
    cmd_search->add_flag("--random", random_mode, "sample instead of exhausting");
    cmd_search->add_option("--trials", trials, "random mode: number of samples")
        ->check(CLI::PositiveNumber);
    cmd_search->add_option("--seed", seed, "random mode: seed");
    cmd_search->add_option("--p", arc_p, "random mode: arc probability")
        ->check(CLI::Range(0.0, 1.0));
    cmd_search->add_option("--out-dir", out_dir, "write witnesses as digraph files here");

    auto* cmd_gen = app.add_subcommand("gen-random-tournament", "seeded random 3-tournament");
    cmd_gen->add_option("-n", n, "vertex count")->required()->check(CLI::Range(3, 1 << 20));
    cmd_gen->add_option("--seed", seed, "seed")->required();
    cmd_gen->add_option("-o", out_path, "output tournament file")->required();

    auto* cmd_audit = app.add_subcommand(
        "audit-girth-bound", "check the S_2 girth bound 2*ceil(log2 log2 n)");
    cmd_audit->add_option("file", in_path, "digraph file")->required();

    for (auto* cmd : {cmd_girth, cmd_sk, cmd_dom, cmd_pt, cmd_verify, cmd_search, cmd_audit})
        cmd->add_option("-o", opts.report_path, "write the JSON report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (cmd_girth->parsed()) {
            const auto d = tridom::read_digraph_file(in_path);
            emit_report(tridom::to_json(tridom::girth(d)), opts);
            return kExitOk;
        }
        if (cmd_sk->parsed()) {
            const auto d = tridom::read_digraph_file(in_path);
            const auto report = tridom::has_Sk(d, k, record_map, opts.threads);
            emit_report(tridom::to_json(report), opts);
            return report.holds ? kExitOk : kExitPropertyFails;
        }
        if (cmd_power->parsed()) {
            const auto d = tridom::read_digraph_file(in_path);
            const auto p = tridom::power(d, b);
            tridom::write_digraph_file(out_path, p);
            tridom::Json j;
            j["n"] = p.order();
            j["b"] = b;
            j["arcs"] = p.arc_count();
            j["file"] = out_path;
            emit_report(j, opts);
            return kExitOk;
        }
        if (cmd_build->parsed()) {
            const auto d = tridom::read_digraph_file(in_path);
            const auto t = tridom::build_tournament(d, opts.threads);
            tridom::write_tournament_file(out_path, t);
            tridom::Json j;
            j["n"] = t.order();
            j["triples"] = t.triple_count();
            j["file"] = out_path;
            emit_report(j, opts);
            return kExitOk;
        }
        if (cmd_dom->parsed()) {
            if (exact_mode == greedy_mode)
                throw CLI::ValidationError("dominate", "pass exactly one of --exact / --greedy");
            const auto t = tridom::read_tournament_file(in_path);
            if (exact_mode) {
                emit_report(tridom::to_json(tridom::domination_number_exact(t)), opts);
            } else {
                emit_report(tridom::to_json(tridom::greedy_dominating_set(t)), opts);
            }
            return kExitOk;
        }
        if (cmd_pt->parsed()) {
            const auto t = tridom::read_tournament_file(in_path);
            const auto report = tridom::pair_tail_property(t);
            emit_report(tridom::to_json(report), opts);
            return report.holds ? kExitOk : kExitPropertyFails;
        }
        if (cmd_verify->parsed()) {
            const auto d = tridom::read_digraph_file(in_path);
            const auto report = tridom::verify_construction(d, k, opts.threads);
            emit_report(tridom::to_json(report), opts);
            return report.pass() ? kExitOk : kExitPropertyFails;
        }
        if (cmd_search->parsed()) {
            if (opt_n->count() == 0 && opt_nmax->count() == 0)
                throw CLI::ValidationError("search", "pass one of --n / --n-max");
            tridom::SearchReport report;
            if (opt_nmax->count() > 0) {
                if (random_mode)
                    throw CLI::ValidationError("search", "--n-max implies exhaustive mode");
                report = tridom::find_min_order(k, l, n_max, limit);
            } else {
                tridom::SearchParams params;
                params.n = n;
                params.k = k;
                params.l = l;
                params.limit = limit;
                params.mode =
                    random_mode ? tridom::SearchMode::random : tridom::SearchMode::exhaustive;
                params.seed = seed;
                params.trials = trials;
                params.arc_probability = arc_p;
                report = tridom::find_digraphs(params);
            }
            if (!out_dir.empty()) {
                std::filesystem::create_directories(out_dir);
                int index = 0;
                int last_n = -1;
                for (const auto& w : report.witnesses) {
                    if (w.order() != last_n) {
                        last_n = w.order();
                        index = 0;
                    }
                    const auto path = std::filesystem::path(out_dir) /
                                      ("witness-" + std::to_string(w.order()) + "-" +
                                       std::to_string(index++) + ".dg");
                    tridom::write_digraph_file(path.string(), w);
                }
            }
            emit_report(tridom::to_json(report), opts);
            return report.witnesses.empty() ? kExitPropertyFails : kExitOk;
        }
        if (cmd_gen->parsed()) {
            const auto t = tridom::random_tournament3(n, seed);
            tridom::write_tournament_file(out_path, t);
            tridom::Json j;
            j["n"] = n;
            j["seed"] = seed;
            j["file"] = out_path;
            emit_report(j, opts);
            return kExitOk;
        }
        if (cmd_audit->parsed()) {
            const auto d = tridom::read_digraph_file(in_path);
            const auto audit = tridom::girth_bound_audit(d);
            emit_report(tridom::to_json(audit), opts);
            return audit.verdict == tridom::GirthBoundAudit::Verdict::fail ? kExitPropertyFails
                                                                           : kExitOk;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
}
