#pragma once

// Command-line front end. One static binary, subcommands
//   verify | min-d | exact-d | cn-coeff | cn-solve | solve |
//   solve-exhaustive | bounds | gen | validate
// Exit codes: 0 pass/found, 1 negative verdict, 2 refusal/budget,
// 3 internal or usage error. Reports are JSON lines on stdout. The RD_SEED
// environment variable overrides any configured seed.

#include <cstdlib>
#include <filesystem>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rookdist/bounds.hpp"
#include "rookdist/constructor.hpp"
#include "rookdist/corpus.hpp"
#include "rookdist/exact_dist.hpp"
#include "rookdist/io.hpp"
#include "rookdist/nullstellensatz.hpp"
#include "rookdist/oracle.hpp"
#include "rookdist/validation.hpp"

namespace rookdist::cli {

namespace detail {

inline std::uint64_t effective_seed(std::uint64_t configured) {
    if (const char* env = std::getenv("RD_SEED")) return std::strtoull(env, nullptr, 10);
    return configured;
}

inline std::string strategy_name(AnchorStrategy s) {
    switch (s) {
        case AnchorStrategy::nullstellensatz: return "nullstellensatz";
        case AnchorStrategy::fixed_two_coloring: return "fixed_two_coloring";
        default: return "backtrack";
    }
}

inline Json bound_report_json(const CoefficientBoundReport& rep) {
    return Json{{"n", rep.n},
                {"k", rep.k},
                {"checked", rep.assignments_checked},
                {"max_observed", rep.max_observed.get_str()},
                {"bound", rep.bound_text},
                {"equality_attained", rep.equality_attained},
                {"maximizers", rep.maximizers},
                {"pass", rep.pass}};
}

}  // namespace detail

inline int run(const std::vector<std::string>& args) {
    CLI::App app{"exact distinguishing and list-distinguishing colorings of K_n x K_m grids"};
    app.require_subcommand(1);
    int exit_code = 0;

    // verify
    std::string verify_path;
    bool verify_naive = false;
    std::uint64_t verify_budget = 100'000'000ull;
    auto* verify = app.add_subcommand("verify", "decide whether a coloring is distinguishing");
    verify->add_option("--coloring", verify_path, "coloring JSON file")->required();
    verify->add_flag("--naive", verify_naive, "use the full-enumeration verifier");
    verify->add_option("--budget", verify_budget, "pair budget for --naive");
    verify->callback([&] {
        Coloring c = coloring_from_json(read_json_file(verify_path));
        DistinguishingCertificate cert =
            verify_naive ? naive_is_distinguishing(c, verify_budget) : is_distinguishing(c);
        std::cout << certificate_to_json(cert).dump() << '\n';
        exit_code = cert.verdict ? 0 : 1;
    });

    // min-d
    int md_n = 0, md_m = 0;
    std::uint64_t md_budget = 50'000'000ull;
    auto* mind = app.add_subcommand("min-d", "minimum number of colors that distinguishes");
    mind->add_option("--n", md_n, "rows")->required();
    mind->add_option("--m", md_m, "columns")->required();
    mind->add_option("--budget", md_budget, "search node budget");
    mind->callback([&] {
        MinDistResult res = min_distinguishing_number(GridSpec(md_n, md_m), md_budget);
        std::cout << Json{{"n", md_n},
                          {"m", md_m},
                          {"value", res.value},
                          {"witness", coloring_to_json(res.witness)}}
                         .dump()
                  << '\n';
    });

    // exact-d
    int xd_n = 0;
    long xd_m = 0;
    std::uint64_t xd_budget = 50'000'000ull;
    auto* exactd = app.add_subcommand("exact-d", "closed-form distinguishing number");
    exactd->add_option("--n", xd_n, "rows")->required();
    exactd->add_option("--m", xd_m, "columns")->required();
    exactd->add_option("--budget", xd_budget, "borderline search budget");
    exactd->callback([&] {
        DistNumberResult res = distinguishing_number(xd_n, BigInt(xd_m), xd_budget);
        std::cout << Json{{"k_band", res.k_band},
                          {"value", res.value},
                          {"borderline", res.borderline},
                          {"resolution",
                           res.resolution == DistNumberResult::Resolution::search ? "search"
                                                                                  : "formula"}}
                         .dump()
                  << '\n';
    });

    // cn-coeff
    int cc_n = 0;
    std::size_t cc_budget = kDefaultTermBudget;
    auto* cncoeff = app.add_subcommand("cn-coeff", "off-diagonal coefficient vs factorial product");
    cncoeff->add_option("--n", cc_n, "grid rows (columns = n+1)")->required();
    cncoeff->add_option("--term-budget", cc_budget, "expansion term budget");
    cncoeff->callback([&] {
        BigInt expanded = off_diagonal_coefficient(cc_n, cc_budget);
        BigInt closed = factorial_product(cc_n);
        bool match = expanded == closed;
        std::cout << Json{{"n", cc_n},
                          {"coefficient", expanded.get_str()},
                          {"closed_form", closed.get_str()},
                          {"match", match}}
                         .dump()
                  << '\n';
        exit_code = match ? 0 : 1;
    });

    // cn-solve
    std::string cs_path;
    auto* cnsolve = app.add_subcommand("cn-solve", "two-list coloring via the polynomial method");
    cnsolve->add_option("--lists", cs_path, "list assignment JSON file")->required();
    cnsolve->callback([&] {
        ListAssignment L = list_assignment_from_json(read_json_file(cs_path));
        Coloring c = nullstellensatz_coloring(L);
        DistinguishingCertificate cert = is_distinguishing(c);
        std::cout << Json{{"status", "found"},
                          {"coloring", coloring_to_json(c)},
                          {"form_value_nonzero", sgn(evaluate_form(c)) != 0},
                          {"certificate", certificate_to_json(cert)}}
                         .dump()
                  << '\n';
        exit_code = cert.verdict ? 0 : 1;
    });

    // solve
    std::string sv_path;
    SolveOptions sv_opts;
    bool sv_emit_cert = false;
    long sv_exhaustive = 1'000'000;
    auto* solvecmd = app.add_subcommand("solve", "constructive list-distinguishing solver");
    solvecmd->add_option("--lists", sv_path, "list assignment JSON file")->required();
    solvecmd->add_option("--budget", sv_opts.construct_node_budget, "constructive node budget");
    solvecmd->add_option("--exhaustive-budget", sv_exhaustive, "fallback assignment budget");
    solvecmd->add_flag("--emit-certificate", sv_emit_cert, "re-run the oracle on the output");
    solvecmd->callback([&] {
        ListAssignment L = list_assignment_from_json(read_json_file(sv_path));
        sv_opts.exhaustive_budget = BigInt(sv_exhaustive);
        SolveResult res = solve(L, sv_opts);
        Json out{{"status", res.status == SolveStatus::found        ? "found"
                            : res.status == SolveStatus::nonexistent ? "nonexistent"
                                                                     : "refused"},
                 {"strategy", detail::strategy_name(res.strategy)},
                 {"via_exhaustive", res.via_exhaustive}};
        if (res.coloring) {
            out["coloring"] = coloring_to_json(*res.coloring);
            if (sv_emit_cert) out["certificate"] = certificate_to_json(is_distinguishing(*res.coloring));
        }
        std::cout << out.dump() << '\n';
        exit_code = res.status == SolveStatus::found        ? 0
                    : res.status == SolveStatus::nonexistent ? 1
                                                             : 2;
    });

    // solve-exhaustive
    std::string se_path;
    long se_budget = 1'000'000;
    auto* solveex = app.add_subcommand("solve-exhaustive", "exhaustive list-distinguishing search");
    solveex->add_option("--lists", se_path, "list assignment JSON file")->required();
    solveex->add_option("--budget", se_budget, "assignment budget");
    solveex->callback([&] {
        ListAssignment L = list_assignment_from_json(read_json_file(se_path));
        auto res = list_distinguishing_exhaustive(L, BigInt(se_budget));
        Json out{{"status", res ? "found" : "nonexistent"}};
        if (res) out["coloring"] = coloring_to_json(*res);
        std::cout << out.dump() << '\n';
        exit_code = res ? 0 : 1;
    });

    // bounds
    auto* bounds = app.add_subcommand("bounds", "inequality validators");
    bounds->require_subcommand(1);

    int b4_n = 0, b4_r = 0;
    auto* lemma4 = bounds->add_subcommand("lemma4", "pair-sum coefficient bound");
    lemma4->add_option("--n", b4_n, "factor count")->required();
    lemma4->add_option("--r", b4_r, "variable budget (default 2n)");
    lemma4->callback([&] {
        auto rep = check_pair_coefficient_bound(b4_n, b4_r);
        std::cout << detail::bound_report_json(rep).dump() << '\n';
        exit_code = rep.pass ? 0 : 1;
    });

    int b6_n = 0, b6_k = 3, b6_r = 0;
    auto* lemma6 = bounds->add_subcommand("lemma6", "k-ary coefficient bound");
    lemma6->add_option("--n", b6_n, "factor count")->required();
    lemma6->add_option("--k", b6_k, "summands per factor (>= 3)")->required();
    lemma6->add_option("--r", b6_r, "variable budget (default nk)");
    lemma6->callback([&] {
        auto rep = check_kary_coefficient_bound(b6_n, b6_k, b6_r);
        Json j = detail::bound_report_json(rep);
        j["merge_radius_ok"] = rep.merge_radius_ok;
        std::cout << j.dump() << '\n';
        exit_code = rep.pass ? 0 : 1;
    });

    int cj_n = 0, cj_k = 3, cj_r = 0;
    auto* conjecture = bounds->add_subcommand("conjecture", "balanced multinomial counterexample search");
    conjecture->add_option("--n", cj_n, "factor count")->required();
    conjecture->add_option("--k", cj_k, "summands per factor (>= 3)")->required();
    conjecture->add_option("--r", cj_r, "variable budget (default nk)");
    conjecture->callback([&] {
        auto rep = check_balanced_multinomial_conjecture(cj_n, cj_k, cj_r);
        Json j{{"n", rep.n},
               {"k", rep.k},
               {"checked", rep.assignments_checked},
               {"balanced_bound", rep.balanced_bound.get_str()},
               {"max_observed", rep.max_observed.get_str()},
               {"counterexample_found", rep.counterexample_found}};
        if (rep.counterexample) j["counterexample"] = *rep.counterexample;
        std::cout << j.dump() << '\n';
        exit_code = rep.counterexample_found ? 1 : 0;
    });

    long bn_nmax = 0;
    int bn_grid = 8;
    long bn_prec = Interval::kDefaultPrecision;
    auto* binom = bounds->add_subcommand("binom", "binomial mass inequality sweep");
    binom->add_option("--nmax", bn_nmax, "largest n")->required();
    binom->add_option("--grid", bn_grid, "p-grid density");
    binom->add_option("--prec", bn_prec, "interval precision bits");
    binom->callback([&] {
        auto rep = check_binomial_mass_bound(bn_nmax, bn_grid, bn_prec);
        std::cout << Json{{"n_max", rep.n_max},
                          {"checked", rep.points_checked},
                          {"max_observed", rep.max_peak},
                          {"bound", rep.constant},
                          {"peak_below_constant", rep.peak_below_constant},
                          {"grid_below_constant", rep.grid_below_constant},
                          {"grid_dominated_by_peak", rep.grid_dominated_by_peak},
                          {"row_one_increasing", rep.row_one_increasing},
                          {"pass", rep.pass}}
                         .dump()
                  << '\n';
        exit_code = rep.pass ? 0 : 1;
    });

    // gen
    int g_n = 2, g_m = 3, g_list = 2, g_universe = 5, g_count = 10;
    std::uint64_t g_seed = 1;
    std::string g_out = ".";
    auto* gen = app.add_subcommand("gen", "generate a seeded list-assignment corpus");
    gen->add_option("--n", g_n, "rows")->required();
    gen->add_option("--m", g_m, "columns")->required();
    gen->add_option("--list-size", g_list, "colors per list");
    gen->add_option("--universe", g_universe, "color universe size");
    gen->add_option("--count", g_count, "instances");
    gen->add_option("--seed", g_seed, "seed (RD_SEED overrides)");
    gen->add_option("--out", g_out, "output directory");
    gen->callback([&] {
        std::uint64_t seed = detail::effective_seed(g_seed);
        auto corpus = generate_corpus(g_n, g_m, g_list, g_universe, g_count, seed);
        std::filesystem::create_directories(g_out);
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            char name[32];
            std::snprintf(name, sizeof(name), "lists_%05zu.json", i);
            std::string path = g_out + "/" + name;
            write_json_file(path, list_assignment_to_json(corpus[i]));
            std::cout << Json{{"path", path}, {"n", g_n}, {"m", g_m}, {"seed", seed}}.dump()
                      << '\n';
        }
    });

    // validate
    ValidationOptions v_opts;
    std::vector<int> v_criteria;
    std::string v_module;
    int v_jobs = 1;
    auto* validate = app.add_subcommand("validate", "run the full validation suite");
    validate->add_option("--criterion", v_criteria, "criterion ids (default: all)");
    validate->add_option("--module", v_module, "only this module's criteria");
    validate->add_option("--budget", v_opts.budget_scale, "0 refuses all search-backed checks");
    validate->add_option("--seed", v_opts.seed, "corpus seed (RD_SEED overrides)");
    validate->add_option("--jobs", v_jobs, "criteria evaluated in parallel");
    validate->callback([&] {
        v_opts.seed = detail::effective_seed(v_opts.seed);
        if (!v_module.empty()) v_opts.criteria = criteria_for_module(v_module);
        if (!v_criteria.empty()) v_opts.criteria = v_criteria;

        std::vector<CriterionOutcome> results;
        if (v_jobs <= 1) {
            results = run_full_validation(v_opts);
        } else {
            std::vector<std::future<CriterionOutcome>> futures;
            for (int id : v_opts.criteria) {
                futures.push_back(std::async(std::launch::async, [&, id] {
                    ValidationOptions one = v_opts;
                    one.criteria = {id};
                    return run_full_validation(one).front();
                }));
            }
            for (auto& f : futures) results.push_back(f.get());
        }

        int fails = 0, refusals = 0;
        for (const auto& r : results) {
            const char* status = r.status == CriterionOutcome::Status::pass      ? "pass"
                                 : r.status == CriterionOutcome::Status::refused ? "refused"
                                                                                 : "fail";
            if (r.status == CriterionOutcome::Status::fail) ++fails;
            if (r.status == CriterionOutcome::Status::refused) ++refusals;
            std::cout << Json{{"criterion", r.id},
                              {"name", r.name},
                              {"status", status},
                              {"seconds", r.seconds},
                              {"detail", r.detail}}
                             .dump()
                      << '\n';
        }
        std::cout << Json{{"criteria", results.size()},
                          {"failed", fails},
                          {"refused", refusals},
                          {"pass", fails == 0 && refusals == 0}}
                         .dump()
                  << '\n';
        exit_code = fails > 0 ? 1 : refusals > 0 ? 2 : 0;
    });

    std::vector<const char*> argv;
    argv.push_back("rookdist");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    } catch (const BudgetExceeded& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return exit_code;
}

}  // namespace rookdist::cli
