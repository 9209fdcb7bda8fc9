// sgraph: generate, analyze, verify and search signed graphs.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage error, 3 search budget exhausted.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "sgr/balance.hpp"
#include "sgr/budget.hpp"
#include "sgr/coloring.hpp"
#include "sgr/distances.hpp"
#include "sgr/girth.hpp"
#include "sgr/graph_io.hpp"
#include "sgr/kneser.hpp"
#include "sgr/mycielskian.hpp"
#include "sgr/search.hpp"
#include "sgr/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

json cycle_json(const sgr::NegativeCycle& c) {
    json j;
    j["vertices"] = c.vertices;
    std::string signs;
    for (auto s : c.signs) signs.push_back(sgr::sign_char(s));
    j["signs"] = signs;
    return j;
}

void emit(const json& report, bool as_json) {
    if (as_json) {
        std::cout << report.dump(2) << "\n";
    }
}

int run_gen(const std::string& kind, int n, int k, int p, int order, int levels,
            const std::string& base_path, bool reduce, bool cross_positive, bool apex_negative,
            int threads, const std::string& out_path) {
    sgr::SignedGraph graph;
    if (kind == "kneser" || kind == "schrijver") {
        sgr::KneserLabeling kl = kind == "kneser" ? sgr::kneser_signed(n, k, threads)
                                                  : sgr::schrijver_signed(n, k, threads);
        if (reduce) kl = sgr::reduce_labeled(kl);
        graph = kl.graph;
    } else if (kind == "lowerbound") {
        graph = sgr::max_girth_construction(p, order).graph;
    } else if (kind == "mycielskian") {
        sgr::SignedGraph base = sgr::load_graph_file(base_path).graph;
        sgr::MycielskiConvention convention{!cross_positive,
                                            apex_negative ? sgr::Sign::minus : sgr::Sign::plus};
        graph = sgr::generalized_mycielskian(base, levels, convention);
    } else if (kind == "fig13") {
        graph = sgr::myc13();
    } else if (kind == "negclique") {
        graph = sgr::make_all_negative_clique(2 * p - 1);
    } else if (kind == "negcycle") {
        graph = sgr::make_negative_cycle(k);
    } else {
        std::cerr << "unknown generator kind: " << kind << "\n";
        return kExitUsage;
    }
    sgr::save_graph_file(out_path, graph, nullptr);
    std::cout << "wrote " << out_path << " (" << graph.vertex_count() << " vertices, "
              << graph.edge_count() << " signed edges)\n";
    return kExitOk;
}

int run_analyze(const std::string& path, const std::string& what, std::uint64_t budget,
                int threads, bool as_json) {
    Timer timer;
    sgr::LoadedGraph loaded = sgr::load_graph_file(path);
    const sgr::SignedGraph& g = loaded.graph;

    json report;
    report["command"] = "analyze " + what;
    report["input"] = path;
    report["input_digest"] = sgr::file_digest(path);
    report["order"] = g.vertex_count();
    int exit_code = kExitOk;

    if (what == "balance") {
        sgr::BalanceResult r = sgr::is_balanced(g);
        if (r.balanced()) {
            report["balanced"] = true;
            report["switching"] = *r.switching;
            if (!as_json) {
                std::cout << "balanced; switch " << r.switching->size()
                          << " vertices to make all edges positive\n";
            }
        } else {
            report["balanced"] = false;
            report["negative_cycle"] = cycle_json(*r.cycle);
            if (!as_json) {
                std::cout << "unbalanced; negative cycle of length " << r.cycle->length() << ":";
                for (int v : r.cycle->vertices) std::cout << " " << v;
                std::cout << "\n";
            }
        }
    } else if (what == "girth") {
        sgr::NegativeGirth girth = sgr::negative_girth(g, threads);
        if (girth.finite()) {
            report["negative_girth"] = girth.length();
            report["witness"] = cycle_json(*girth.cycle);
            if (!as_json) std::cout << "negative girth " << girth.length() << "\n";
        } else {
            report["negative_girth"] = "inf";
            if (!as_json) std::cout << "negative girth inf (balanced)\n";
        }
    } else if (what == "chib") {
        sgr::ChiBResult chi = sgr::balanced_chromatic_number(g, {budget});
        report["chi_b"] = chi.value;
        report["complete"] = chi.complete;
        report["lower_bound"] = chi.lower_bound;
        report["nodes"] = chi.nodes;
        report["coloring"] = chi.coloring;
        if (!as_json) {
            if (chi.complete)
                std::cout << "chi_b = " << chi.value << " (exact, " << chi.nodes << " nodes)\n";
            else
                std::cout << "chi_b in [" << chi.lower_bound << ", " << chi.value
                          << "] (budget exhausted after " << chi.nodes << " nodes)\n";
        }
        if (!chi.complete) exit_code = kExitBudget;
    } else if (what == "radius") {
        std::vector<int> all(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
        if (all.empty()) {
            report["radius"] = "undefined";
            if (!as_json) std::cout << "radius undefined (empty graph)\n";
        } else {
            auto radius = sgr::radius_in(g, all);
            if (radius) {
                report["radius"] = *radius;
                if (!as_json) std::cout << "radius " << *radius << "\n";
            } else {
                report["radius"] = "inf";
                if (!as_json) std::cout << "radius inf (disconnected)\n";
            }
        }
    } else {
        std::cerr << "unknown analysis: " << what << "\n";
        return kExitUsage;
    }
    report["timing_ms"] = timer.ms();
    report["budget"] = {{"max_nodes", budget}};
    emit(report, as_json);
    return exit_code;
}

int emit_verify(const sgr::VerifyResult& result, const std::string& which, bool as_json,
                const Timer& timer) {
    json report;
    report["command"] = "verify " + which;
    report["checks"] = json::array();
    for (const auto& line : result.lines) {
        if (!as_json) {
            std::cout << (line.pass ? "[PASS] " : "[FAIL] ") << line.name;
            if (!line.detail.empty()) std::cout << " — " << line.detail;
            std::cout << "\n";
        }
        report["checks"].push_back(
            {{"name", line.name}, {"pass", line.pass}, {"detail", line.detail}});
    }
    report["passed"] = result.passed();
    report["total"] = result.lines.size();
    report["budget_exhausted"] = result.budget_exhausted;
    report["timing_ms"] = timer.ms();
    if (!as_json) {
        std::cout << which << ": " << result.passed() << "/" << result.lines.size()
                  << " checks passed";
        if (result.budget_exhausted) std::cout << " (budget exhausted)";
        std::cout << "\n";
    }
    emit(report, as_json);
    if (!result.all_pass()) return kExitVerifyFail;
    if (result.budget_exhausted) return kExitBudget;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed-graph toolkit: balance, negative girth, balanced colorings,\n"
                 "Kneser/Schrijver generators, girth-bound certificates and extremal search"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker threads for parallel stages");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph file");
    std::string gen_kind, gen_out = "graph.sg", gen_base;
    int gen_n = 0, gen_k = 0, gen_p = 2, gen_order = 0, gen_levels = 3;
    bool gen_reduce = false, gen_cross_positive = false, gen_apex_negative = false;
    gen->add_option("kind", gen_kind,
                    "kneser | schrijver | lowerbound | mycielskian | fig13 | negclique | negcycle")
        ->required();
    gen->add_option("-n", gen_n, "ground set size (kneser/schrijver)");
    gen->add_option("-k", gen_k, "subset size (kneser/schrijver) or cycle length (negcycle)");
    gen->add_option("-p", gen_p, "target balanced chromatic number (lowerbound/negclique)");
    gen->add_option("--order", gen_order, "total vertex count (lowerbound)");
    gen->add_option("-m,--levels", gen_levels, "level count (mycielskian)");
    gen->add_option("--base", gen_base, "base graph file (mycielskian)");
    gen->add_flag("--reduce", gen_reduce, "reduce antitwin pairs (kneser/schrijver)");
    gen->add_flag("--cross-positive", gen_cross_positive,
                  "mycielskian: cross-level edges all positive instead of inherited");
    gen->add_flag("--apex-negative", gen_apex_negative, "mycielskian: negative apex edges");
    gen->add_option("-o,--out", gen_out, "output path");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "analyze a graph file");
    std::string an_path, an_what;
    std::uint64_t an_budget = sgr::SearchBudget{}.max_nodes;
    bool an_json = false;
    analyze->add_option("file", an_path, "graph file")->required();
    analyze->add_option("--what", an_what, "balance | girth | chib | radius")->required();
    analyze->add_option("--budget", an_budget, "search node budget");
    analyze->add_flag("--json", an_json, "machine-readable report");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string ver_which;
    int ver_nmax = 7, ver_exh_n = 4, ver_cases = 500, ver_rand_n = 12;
    std::uint64_t ver_seed = 20240901, ver_budget = sgr::SearchBudget{}.max_nodes;
    bool ver_json = false;
    verify->add_option("which", ver_which, "lemma21 | thm31 | thm41 | bounds | oracles")
        ->required();
    verify->add_option("--nmax", ver_nmax, "parameter sweep limit (lemma21)");
    verify->add_option("--n", ver_exh_n, "exhaustive order (oracles)");
    verify->add_option("--cases", ver_cases, "random cases (oracles)");
    verify->add_option("--rand-n", ver_rand_n, "max random order (oracles)");
    verify->add_option("--seed", ver_seed, "random seed");
    verify->add_option("--budget", ver_budget, "search node budget");
    verify->add_flag("--json", ver_json, "machine-readable report");

    // search
    auto* search = app.add_subcommand("search", "minimum-order search for girth/chi targets");
    int se_girth = 3, se_chi = 3, se_nmax = 5;
    std::uint64_t se_budget = sgr::SearchBudget{}.max_nodes;
    std::string se_checkpoint, se_csv;
    bool se_json = false;
    search->add_option("--girth", se_girth, "minimum negative girth")->required();
    search->add_option("--chi", se_chi, "minimum balanced chromatic number")->required();
    search->add_option("--nmax", se_nmax, "largest order to exhaust")->required();
    search->add_option("--budget", se_budget, "search node budget");
    search->add_option("--checkpoint", se_checkpoint, "frontier checkpoint file");
    search->add_option("--csv", se_csv, "write the report as CSV");
    search->add_flag("--json", se_json, "machine-readable report");

    // harness
    auto* harness = app.add_subcommand("harness", "girth-vs-bounds family sweeps (CSV)");
    std::string ha_family = "lowerbound", ha_csv;
    int ha_p = 2, ha_nmax = 40;
    harness->add_option("--family", ha_family, "lowerbound | negclique | mycielskian");
    harness->add_option("-p", ha_p, "chromatic parameter p");
    harness->add_option("--nmax", ha_nmax, "largest order");
    harness->add_option("--csv", ha_csv, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            return run_gen(gen_kind, gen_n, gen_k, gen_p, gen_order, gen_levels, gen_base,
                           gen_reduce, gen_cross_positive, gen_apex_negative, threads, gen_out);
        }
        if (analyze->parsed()) {
            return run_analyze(an_path, an_what, an_budget, threads, an_json);
        }
        if (verify->parsed()) {
            Timer timer;
            sgr::VerifyResult result;
            if (ver_which == "lemma21") {
                result = sgr::verify_kneser_formula(ver_nmax, threads);
                sgr::VerifyResult shifts = sgr::verify_shift_witnesses(9);
                result.lines.insert(result.lines.end(), shifts.lines.begin(), shifts.lines.end());
                sgr::VerifyResult chib = sgr::verify_reduced_schrijver_chib(15, 15, {ver_budget});
                result.lines.insert(result.lines.end(), chib.lines.begin(), chib.lines.end());
                result.budget_exhausted |= chib.budget_exhausted;
            } else if (ver_which == "thm31") {
                result = sgr::verify_peeling(threads, {ver_budget});
            } else if (ver_which == "thm41") {
                result = sgr::verify_girth_bound_corpus({ver_budget});
            } else if (ver_which == "bounds") {
                result = sgr::verify_extremal_bounds(threads, {ver_budget});
            } else if (ver_which == "oracles") {
                result = sgr::verify_oracle_agreement(ver_exh_n, ver_cases, ver_rand_n, ver_seed);
            } else {
                std::cerr << "unknown verification suite: " << ver_which << "\n";
                return kExitUsage;
            }
            return emit_verify(result, ver_which, ver_json, timer);
        }
        if (search->parsed()) {
            Timer timer;
            sgr::SearchReport report = sgr::minimum_order_search(
                se_girth, se_chi, se_nmax, {se_budget}, threads, se_checkpoint);
            if (!se_csv.empty()) {
                std::ofstream out(se_csv);
                out << report.to_csv();
            }
            if (se_json) {
                json j;
                j["command"] = "search";
                j["girth_min"] = report.girth_min;
                j["chi_min"] = report.chi_min;
                if (report.minimum_order)
                    j["minimum_order"] = *report.minimum_order;
                else
                    j["minimum_order"] = nullptr;
                j["budget_exhausted"] = report.budget_exhausted;
                j["per_n"] = json::array();
                for (const auto& v : report.per_n) {
                    json jv;
                    jv["n"] = v.n;
                    jv["exhaustive"] = v.exhaustive;
                    jv["classes"] = v.classes_visited;
                    jv["witness_classes"] = v.witness_classes;
                    if (v.witness_form) jv["witness_form"] = v.witness_form->text;
                    j["per_n"].push_back(jv);
                }
                j["timing_ms"] = timer.ms();
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& v : report.per_n) {
                    std::cout << "n=" << v.n << ": " << v.classes_visited << " classes, "
                              << v.witness_classes << " witnesses"
                              << (v.exhaustive ? "" : " (partial)") << "\n";
                }
                if (report.minimum_order)
                    std::cout << "minimum order: " << *report.minimum_order << "\n";
                else
                    std::cout << "no witness up to n=" << report.n_max
                              << (report.budget_exhausted ? " (budget exhausted)" : " (exhaustive)")
                              << "\n";
            }
            return report.budget_exhausted ? kExitBudget : kExitOk;
        }
        if (harness->parsed()) {
            sgr::HarnessFamily family;
            if (ha_family == "lowerbound")
                family = sgr::HarnessFamily::extremal_construction;
            else if (ha_family == "negclique")
                family = sgr::HarnessFamily::negative_cliques;
            else if (ha_family == "mycielskian")
                family = sgr::HarnessFamily::mycielskian_iterates;
            else {
                std::cerr << "unknown family: " << ha_family << "\n";
                return kExitUsage;
            }
            std::vector<int> orders;
            for (int n = std::max(2, ha_p); n <= ha_nmax; ++n) orders.push_back(n);
            auto rows = sgr::girth_bounds_sweep(family, ha_p, orders, {}, threads);
            std::string csv = sgr::harness_csv(rows);
            if (ha_csv.empty()) {
                std::cout << csv;
            } else {
                std::ofstream out(ha_csv);
                out << csv;
                std::cout << "wrote " << ha_csv << " (" << rows.size() << " rows)\n";
            }
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitUsage;
}
