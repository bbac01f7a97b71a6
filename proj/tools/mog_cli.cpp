// Command-line front end for the multi-objective game efficiency solver.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mog/mog.hpp"

namespace {

// Exit codes, also documented in the README.
constexpr int kExitOk = 0;
constexpr int kExitViolated = 1; // check-ratio: the ratio is not guaranteed
constexpr int kExitLoad = 2;
constexpr int kExitPositivity = 3;
constexpr int kExitResource = 4;
constexpr int kExitUndefined = 5; // MO-CR undefined (no Pareto-Nash equilibria)

mog::OutcomeVector parse_vector(const std::string& text) {
    std::vector<mog::Rational> comps;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) comps.push_back(mog::parse_rational(tok));
    if (comps.empty()) throw mog::input_error("empty vector '" + text + "'");
    return mog::OutcomeVector(std::move(comps));
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw mog::load_error("cannot write '" + path + "'");
    out << text;
}

void print_ratio_set(const mog::RatioSet& rs, int places) {
    for (const auto& rho : rs.ratios) {
        for (std::size_t k = 0; k < rho.dim(); ++k) {
            if (k > 0) std::cout << ",";
            std::cout << mog::to_exact_string(rho[k]);
        }
        std::cout << "  #";
        for (std::size_t k = 0; k < rho.dim(); ++k) {
            std::cout << " " << mog::to_decimal_string(rho[k], places);
        }
        std::cout << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Pareto-Nash equilibria, efficient frontiers and the exact "
                 "multi-objective coordination ratio of normal-form games"};
    app.require_subcommand(1);

    int threads = 0; // 0 = all cores; analysis is deterministic regardless
    app.add_option("--threads", threads, "worker thread count (default: MOG_THREADS or all cores)");
    int places = 6;
    app.add_option("--precision", places, "decimal places in rendered output (default 6)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "full efficiency analysis of a game file");
    std::string game_path, report_path, csv_path;
    bool no_timings = false, clip = false;
    analyze->add_option("game", game_path, "game file (JSON)")->required();
    analyze->add_option("--out", report_path, "report output path (default stdout)");
    analyze->add_option("--csv", csv_path, "also write a flat CSV point list");
    analyze->add_flag("--no-timings", no_timings, "omit timings for byte-stable reports");
    analyze->add_flag("--clip", clip, "clip rendered ratios to [0,1]^d (presentation only)");

    // equilibria
    auto* equilibria = app.add_subcommand("equilibria", "Pareto-Nash profiles and their outcomes");
    std::string eq_game;
    equilibria->add_option("game", eq_game, "game file (JSON)")->required();

    // frontier
    auto* frontier = app.add_subcommand("frontier", "efficient outcomes EFF[u(A)]");
    std::string fr_game;
    bool fr_all = false;
    frontier->add_option("game", fr_game, "game file (JSON)")->required();
    frontier->add_flag("--all", fr_all, "print every outcome instead of the frontier");

    // mocr-from-sets
    auto* from_sets = app.add_subcommand(
        "mocr-from-sets", "ratio frontier from worst-equilibria and frontier outcome-set files");
    std::string worst_path, front_path;
    from_sets->add_option("--worst", worst_path, "worst equilibria outcomes file")->required();
    from_sets->add_option("--frontier", front_path, "efficient outcomes file")->required();

    // check-ratio
    auto* check = app.add_subcommand("check-ratio", "does a ratio bound the inefficiency?");
    std::string ratio_text, ck_eq_path, ck_front_path;
    check->add_option("--ratio", ratio_text, "candidate ratio, comma-separated rationals")
        ->required();
    check->add_option("--equilibria", ck_eq_path, "equilibrium outcomes file")->required();
    check->add_option("--frontier", ck_front_path, "efficient outcomes file")->required();

    // approx
    auto* approx = app.add_subcommand(
        "approx", "approximate ratio frontier from externally supplied cover sets");
    std::string ap_eq_path, ap_front_path, eps1_text{"0"}, eps2_text{"0"};
    bool reduce = false;
    approx->add_option("--equilibria", ap_eq_path, "cover of the equilibrium outcomes")->required();
    approx->add_option("--frontier", ap_front_path, "cover of the efficient outcomes")->required();
    approx->add_option("--eps1", eps1_text, "equilibria cover precision");
    approx->add_option("--eps2", eps2_text, "frontier cover precision");
    approx->add_flag("--reduce", reduce, "first shrink the given sets to grid covers");

    // gen-random
    auto* gen_random = app.add_subcommand("gen-random", "seeded random game");
    std::size_t gr_agents = 2, gr_objectives = 2;
    std::string gr_actions{"2,2"}, gr_out;
    std::uint64_t gr_seed = 0;
    long gr_max = 100;
    gen_random->add_option("--agents", gr_agents, "agent count");
    gen_random->add_option("--actions", gr_actions, "comma-separated action counts per agent");
    gen_random->add_option("--objectives", gr_objectives, "objective count");
    gen_random->add_option("--seed", gr_seed, "RNG seed");
    gen_random->add_option("--max-value", gr_max, "uniform integer payoffs in [0, max]");
    gen_random->add_option("-o,--out", gr_out, "output game file");

    // gen-tobacco
    auto* gen_tobacco = app.add_subcommand("gen-tobacco", "tobacco economy case study");
    long long nu = 1;
    std::string gt_out;
    bool closed_form = false;
    gen_tobacco->add_option("--nu", nu, "number of prospective consumers")->required();
    gen_tobacco->add_option("-o,--out", gt_out, "output game file");
    gen_tobacco->add_flag("--closed-form", closed_form,
                          "print the closed-form analysis instead of a game file");

    // axioms
    auto* axioms = app.add_subcommand("axioms", "ratio-scale axiom checks on given sets");
    std::string ax_eq_path, ax_front_path, ax_scale{"2,3"};
    axioms->add_option("--equilibria", ax_eq_path, "equilibrium outcomes file")->required();
    axioms->add_option("--frontier", ax_front_path, "efficient outcomes file")->required();
    axioms->add_option("--scale", ax_scale, "strictly positive scale vector r");

    CLI11_PARSE(app, argc, argv);

    if (threads == 0) {
        if (const char* env = std::getenv("MOG_THREADS")) threads = std::atoi(env);
    }
    (void)threads; // analysis is single-pass deterministic; accepted for compatibility

    mog::ReportOptions opts;
    opts.decimal_places = places;

    if (*analyze) {
        opts.include_timings = !no_timings;
        opts.clip_ratios_to_unit = clip;
        const mog::MOGame game = mog::load_game(game_path);
        const mog::EfficiencyReport report = mog::full_analysis(game);
        write_text(report_path, mog::report_to_json(report, game, opts).dump(2) + "\n");
        if (!csv_path.empty()) {
            std::ofstream csv(csv_path);
            if (!csv) throw mog::load_error("cannot write '" + csv_path + "'");
            mog::write_plot_points(report, csv, opts);
        }
        return report.mocr_defined ? kExitOk : kExitUndefined;
    }

    if (*equilibria) {
        const mog::MOGame game = mog::load_game(eq_game);
        const mog::EquilibriumSet eq = mog::equilibrium_analysis(game);
        std::cout << "# pareto-nash profiles: " << eq.profiles.size() << "\n";
        for (const auto& p : eq.profiles) {
            const auto labels = game.profile_labels(p);
            std::cout << "# ";
            for (std::size_t i = 0; i < labels.size(); ++i) {
                if (i > 0) std::cout << " / ";
                std::cout << labels[i];
            }
            std::cout << "\n";
        }
        std::cout << "# equilibrium outcomes:\n";
        mog::write_outcome_set(eq.outcomes, std::cout);
        std::cout << "# worst equilibria:\n";
        mog::write_outcome_set(eq.worst, std::cout);
        return kExitOk;
    }

    if (*frontier) {
        const mog::MOGame game = mog::load_game(fr_game);
        const mog::OutcomeSet all = mog::outcome_set(game);
        mog::write_outcome_set(fr_all ? all : mog::efficient_subset(all), std::cout);
        return kExitOk;
    }

    if (*from_sets) {
        const mog::OutcomeSet worst = mog::load_outcome_set(worst_path);
        const mog::OutcomeSet front = mog::load_outcome_set(front_path);
        if (worst.empty() || front.empty()) throw mog::load_error("input sets must be nonempty");
        print_ratio_set(mog::mo_cr(worst, front), places);
        return kExitOk;
    }

    if (*check) {
        const mog::OutcomeVector rho = parse_vector(ratio_text);
        const mog::OutcomeSet E = mog::load_outcome_set(ck_eq_path);
        const mog::OutcomeSet F = mog::load_outcome_set(ck_front_path);
        const mog::RatioCheck result = mog::check_ratio(rho, E, F);
        if (result.guaranteed) {
            for (std::size_t i = 0; i < E.size(); ++i) {
                std::cout << "guaranteed " << E.point(i).to_exact_string() << " via "
                          << F.point(result.witness[i]).to_exact_string() << "\n";
            }
            return kExitOk;
        }
        std::cout << "violated by " << E.point(*result.violating).to_exact_string() << "\n";
        return kExitViolated;
    }

    if (*approx) {
        mog::OutcomeSet E = mog::load_outcome_set(ap_eq_path);
        mog::OutcomeSet F = mog::load_outcome_set(ap_front_path);
        const mog::Rational eps1 = mog::parse_rational(eps1_text);
        const mog::Rational eps2 = mog::parse_rational(eps2_text);
        if (reduce) {
            if (eps1 > 0) E = mog::lower_cover(E, eps1);
            if (eps2 > 0) F = mog::upper_cover(F, eps2);
        }
        const mog::ApproxResult result = mog::approx_mocr(E, F, eps1, eps2);
        std::cout << "# guarantee factor (1+eps1)(1+eps2) = "
                  << mog::to_exact_string(result.guarantee_factor) << "\n";
        print_ratio_set(result.ratios, places);
        return kExitOk;
    }

    if (*gen_random) {
        std::vector<std::size_t> alphas;
        std::stringstream ss(gr_actions);
        std::string tok;
        while (std::getline(ss, tok, ',')) alphas.push_back(std::stoul(tok));
        const mog::MOGame game =
            mog::gen_random(gr_agents, alphas, gr_objectives, gr_seed, gr_max);
        if (gr_out.empty()) {
            std::cout << mog::game_to_json(game).dump(2) << "\n";
        } else {
            mog::save_game(game, gr_out);
        }
        return kExitOk;
    }

    if (*gen_tobacco) {
        if (closed_form) {
            const auto cf = mog::tobacco_closed_form(mog::Rational(nu));
            std::cout << "# worst equilibria:\n";
            mog::write_outcome_set(cf.worst_equilibria, std::cout);
            std::cout << "# frontier:\n";
            mog::write_outcome_set(cf.frontier, std::cout);
            std::cout << "# mocr:\n";
            print_ratio_set(mog::mo_cr(cf.worst_equilibria, cf.frontier), places);
            return kExitOk;
        }
        const mog::MOGame game = mog::gen_tobacco(static_cast<std::size_t>(nu));
        std::vector<std::string> agent_names{"industry"};
        for (long long i = 1; i <= nu; ++i) agent_names.push_back("consumer" + std::to_string(i));
        if (gt_out.empty()) {
            std::cout << mog::game_to_json(game, agent_names).dump(2) << "\n";
        } else {
            mog::save_game(game, gt_out, agent_names);
        }
        return kExitOk;
    }

    if (*axioms) {
        const mog::OutcomeSet E = mog::load_outcome_set(ax_eq_path);
        const mog::OutcomeSet F = mog::load_outcome_set(ax_front_path);
        const mog::OutcomeVector r = parse_vector(ax_scale);
        const mog::AxiomReport report = mog::axiom_suite(E, F, r);
        auto line = [](const char* name, bool ok) {
            std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
        };
        line("nonnegativity", report.nonnegative);
        line("zero-equilibrium", report.zero_equilibrium);
        line("equilibrium-scaling", report.equilibrium_scaling);
        line("frontier-scaling", report.frontier_scaling);
        line("unit-ratio", report.unit_ratio_rule);
        line("equilibrium-monotonicity", report.equilibrium_monotone);
        line("frontier-monotonicity", report.frontier_monotone);
        return report.all() ? kExitOk : kExitViolated;
    }

    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const mog::positivity_error& e) {
        std::cerr << "positivity error: " << e.what() << "\n";
        return kExitPositivity;
    } catch (const mog::resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitResource;
    } catch (const mog::cover_error& e) {
        std::cerr << "cover error: " << e.what() << "\n";
        return kExitLoad;
    } catch (const mog::load_error& e) {
        std::cerr << "load error: " << e.what() << "\n";
        return kExitLoad;
    } catch (const mog::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitLoad;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitLoad;
    }
}
