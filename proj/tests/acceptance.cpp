// End-to-end acceptance checks. Each criterion prints one [PASS]/[FAIL] line;
// the exit status is the number of failed criteria.

#include <chrono>
#include <cstddef>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "mog/mog.hpp"
#include "test_support.hpp"

using namespace mog;

namespace {

using clock_type = std::chrono::steady_clock;

double elapsed_ms(clock_type::time_point start) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

int failures = 0;

void report(int number, const std::string& name, bool ok, double ms) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << name << " ("
              << static_cast<long>(ms) << " ms)\n";
    if (!ok) ++failures;
}

struct RandomInstance {
    std::size_t q = 0;
    std::size_t m = 0;
    std::size_t d = 0;
    std::size_t mocr_size = 0;
};
std::vector<RandomInstance> oracle_instances;

// --- 1: tobacco case study, explicit and closed form -------------------------

bool tobacco_exactness() {
    const OutcomeSet expected_ratio =
        OutcomeSet::from_points({OutcomeVector{Rational(3, 4), Rational(11, 15)}});
    for (std::size_t nu : {1u, 2u, 3u}) {
        const auto rep = full_analysis(gen_tobacco(nu));
        const Rational v(static_cast<long>(nu));
        if (!rep.mocr_defined) return false;
        if (rep.mocr.ratios != expected_ratio) return false;
        if (rep.equilibria.worst != OutcomeSet::from_points({OutcomeVector{v * 36, v * 55}}))
            return false;
        if (rep.frontier != OutcomeSet::from_points({OutcomeVector{v * 48, v * 75}})) return false;
    }
    for (const Rational& nu : {Rational(1000000), Rational(6000000000LL)}) {
        const auto cf = tobacco_closed_form(nu);
        if (cf.worst_equilibria !=
            OutcomeSet::from_points({OutcomeVector{nu * 36, nu * 55}}))
            return false;
        if (cf.frontier != OutcomeSet::from_points({OutcomeVector{nu * 48, nu * 75}}))
            return false;
        if (mo_cr(cf.worst_equilibria, cf.frontier).ratios != expected_ratio) return false;
    }
    return true;
}

// --- 2: layered development equals exhaustive path enumeration ---------------

bool oracle_equivalence() {
    std::mt19937_64 rng(20250801);
    oracle_instances.clear();
    for (int iter = 0; iter < 1000; ++iter) {
        const std::size_t d = 2 + static_cast<std::size_t>(iter % 3);
        std::uniform_int_distribution<std::size_t> count(1, 6);
        OutcomeSet E, F;
        while (E.empty()) E = mog_test::random_positive_set(rng, count(rng), d, 60, 5);
        while (F.empty()) F = mog_test::random_positive_set(rng, count(rng), d, 60, 5);
        OutcomeSet worstE = worst_subset(E);
        OutcomeSet front = efficient_subset(F);
        const RatioSet fast = mo_cr(worstE, front);
        const RatioSet slow = mo_cr_bruteforce(worstE, front);
        if (fast.ratios != slow.ratios) return false;
        oracle_instances.push_back({fast.q, fast.m, d, fast.ratios.size()});
    }
    return true;
}

// --- 3: two-by-two reconstruction from printed summary values ----------------

bool small_reconstruction() {
    const OutcomeSet worstE =
        OutcomeSet::from_points({OutcomeVector{30, 53}, OutcomeVector{40, 38}});
    const OutcomeSet front =
        OutcomeSet::from_points({OutcomeVector{46, 61}, OutcomeVector{69, 31}});
    const RatioSet rs = mo_cr(worstE, front);
    const OutcomeSet expected = OutcomeSet::from_points({
        OutcomeVector{Rational(15, 23), Rational(38, 61)},
        OutcomeVector{Rational(40, 69), Rational(53, 61)},
        OutcomeVector{Rational(10, 23), Rational(38, 31)},
    });
    if (rs.ratios != expected) return false;
    Rational best(0);
    for (const auto& rho : rs.ratios) best = std::max(best, rho[0]);
    return best == Rational(15, 23) && best < Rational(66, 100);
}

// --- 4: frontier size bound on the criterion-2 instances ---------------------

bool size_bound() {
    if (oracle_instances.empty()) return false;
    for (const auto& inst : oracle_instances) {
        std::size_t bound = 1;
        for (std::size_t k = 0; k + 1 < inst.d; ++k) bound *= inst.q * inst.m;
        if (inst.mocr_size > bound) return false;
    }
    return true;
}

// --- 5: ratio-scale axioms ----------------------------------------------------

bool axioms() {
    std::mt19937_64 rng(555);
    std::uniform_int_distribution<long> num(1, 8), den(1, 8);
    std::uniform_int_distribution<std::size_t> count(1, 4);
    for (int iter = 0; iter < 500; ++iter) {
        const std::size_t d = 2 + static_cast<std::size_t>(iter % 2);
        OutcomeSet E, F;
        while (E.empty()) E = mog_test::random_set(rng, count(rng), d, 25, 3);
        while (F.empty()) F = mog_test::random_positive_set(rng, count(rng), d, 25, 3);
        std::vector<Rational> r(d);
        for (auto& x : r) x = Rational(num(rng), den(rng));
        if (!axiom_suite(E, efficient_subset(F), OutcomeVector{r}).all()) return false;
    }

    // unit-ratio rule, both directions on constructed instances
    const OutcomeSet F =
        OutcomeSet::from_points({OutcomeVector{2, 6}, OutcomeVector{6, 2}});
    const OutcomeSet inside = OutcomeSet::from_points({OutcomeVector{2, 6}});
    const OutcomeSet outside =
        OutcomeSet::from_points({OutcomeVector{1, 3}, OutcomeVector{3, 1}});
    const OutcomeVector ones = ones_vector(2);
    if (!contains(mo_cr(worst_subset(inside), F).region, ones)) return false;
    if (!check_ratio(ones, inside, F).guaranteed) return false;
    if (contains(mo_cr(worst_subset(outside), F).region, ones)) return false;
    if (check_ratio(ones, outside, F).guaranteed) return false;
    return true;
}

// --- 6: equilibrium marking and d=2 frontier paths ----------------------------

bool phase1_correctness() {
    std::mt19937_64 rng(616);
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t n = 2 + static_cast<std::size_t>(iter % 3);
        const std::size_t d = 1 + static_cast<std::size_t>(iter % 4);
        std::uniform_int_distribution<std::size_t> act(2, n == 2 ? 6 : 3);
        std::vector<std::size_t> alphas(n);
        std::size_t profiles = 1;
        for (auto& a : alphas) {
            a = act(rng);
            profiles *= a;
        }
        if (profiles > 256) {
            alphas.assign(n, 2);
        }
        const MOGame game = gen_random(n, alphas, d, 100000 + static_cast<std::uint64_t>(iter), 9);

        // naive all-deviations check
        std::vector<ActionProfile> naive;
        for (std::size_t idx = 0; idx < game.profile_count(); ++idx) {
            const ActionProfile p = game.profile_at(idx);
            bool eq = true;
            for (std::size_t i = 0; i < n && eq; ++i) {
                ActionProfile dev = p;
                for (std::size_t b = 0; b < game.action_count(i); ++b) {
                    dev.actions[i] = b;
                    if (dominates(game.evaluate(i, dev), game.evaluate(i, p))) eq = false;
                }
            }
            if (eq) naive.push_back(p);
        }
        if (pareto_nash_profiles(game) != naive) return false;

        const OutcomeSet pts = mog_test::random_set(rng, 30, 2, 50, 5);
        if (efficient_subset_sweep2(pts) != efficient_subset_pairwise(pts)) return false;
    }
    return true;
}

// --- 7: cover-based approximation ----------------------------------------------

bool approximation() {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<std::size_t> count(2, 7);
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t d = 2 + static_cast<std::size_t>(iter % 2);
        OutcomeSet E, F;
        while (E.empty()) E = mog_test::random_positive_set(rng, count(rng), d, 150, 4);
        while (F.empty()) F = mog_test::random_positive_set(rng, count(rng), d, 150, 4);
        const RatioSet exact = mo_cr(worst_subset(E), efficient_subset(F));
        for (const Rational& eps : {Rational(1, 10), Rational(1, 2)}) {
            const OutcomeSet Ec = lower_cover(E, eps);
            const OutcomeSet Fc = upper_cover(F, eps);
            if (!verify_cover(E, Ec, eps, CoverDirection::Lower)) return false;
            if (!verify_cover(F, Fc, eps, CoverDirection::Upper)) return false;
            const ApproxResult approx = approx_mocr(Ec, Fc, eps, eps);
            for (const auto& rho : approx.ratios.ratios) {
                if (!check_ratio(rho, E, F).guaranteed) return false;
            }
            const Rational inv = Rational(1) / approx.guarantee_factor;
            for (const auto& rho : exact.ratios) {
                if (!contains(approx.ratios.region, scale(inv, rho))) return false;
            }
        }
    }
    return true;
}

// --- 8: dominance relations do not sum ------------------------------------------

bool nonsummability() {
    const OutcomeVector a{2, 4}, b{3, 1}, c{1, 2};
    return !dominates(a, b) && !dominates(b, c) && dominates(add(a, b), add(b, c));
}

// --- 9: performance envelopes ----------------------------------------------------

bool performance() {
    auto t0 = clock_type::now();
    const MOGame big = gen_random(4, {5, 5, 5, 5}, 3, 31337);
    const auto rep = full_analysis(big);
    const double full_ms = elapsed_ms(t0);
    std::cout << "       full analysis n=4 alpha=5 d=3: " << static_cast<long>(full_ms)
              << " ms, |PN|=" << rep.equilibria.profiles.size() << "\n";
    if (full_ms >= 10000) return false;

    // a 50-point antichain against a 50-point antichain
    OutcomeSet worstE, front;
    for (long i = 0; i < 50; ++i) {
        worstE.insert(OutcomeVector{Rational(i + 1), Rational(100 - i)});
        front.insert(OutcomeVector{Rational(2 * i + 3), Rational(2 * (100 - i) + 1)});
    }
    t0 = clock_type::now();
    const RatioSet rs = mo_cr(worst_subset(worstE), efficient_subset(front));
    const double dev_ms = elapsed_ms(t0);
    std::cout << "       ratio development q=m=50 d=2: " << static_cast<long>(dev_ms)
              << " ms, |ratios|=" << rs.ratios.size() << "\n";
    return dev_ms < 5000;
}

// --- 10: equilibrium count trend ---------------------------------------------------

bool pn_trend() {
    double prev_mean = -1;
    for (std::size_t n = 2; n <= 8; ++n) {
        std::size_t total = 0;
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const MOGame game =
                gen_random(n, std::vector<std::size_t>(n, 2), 2, 900000 + 1000 * n + seed, 20);
            total += pareto_nash_profiles(game).size();
        }
        const double mean = static_cast<double>(total) / 100.0;
        std::cout << "       n=" << n << ": mean |PN| = " << mean << "\n";
        if (mean < prev_mean) return false;
        prev_mean = mean;
    }
    return true;
}

template <typename Fn>
void run(int number, const std::string& name, double budget_ms, Fn&& fn) {
    const auto t0 = clock_type::now();
    bool ok = false;
    try {
        ok = fn();
    } catch (const std::exception& e) {
        std::cout << "       unexpected error: " << e.what() << "\n";
    }
    const double ms = elapsed_ms(t0);
    if (budget_ms > 0 && ms >= budget_ms) ok = false;
    report(number, name, ok, ms);
}

} // namespace

int main() {
    run(1, "tobacco case study, explicit and closed form", 1000, tobacco_exactness);
    run(2, "layered development equals path enumeration (1000 instances)", 60000,
        oracle_equivalence);
    run(3, "two-by-two ratio reconstruction", 0, small_reconstruction);
    run(4, "ratio frontier size bound (qm)^(d-1)", 0, size_bound);
    run(5, "ratio-scale axioms (500 instances, unit rule both ways)", 0, axioms);
    run(6, "equilibrium marking vs brute force, sweep vs quadratic frontier", 0,
        phase1_correctness);
    run(7, "cover-based approximation soundness and coverage (200 instances)", 0, approximation);
    run(8, "dominance relations do not sum", 0, nonsummability);
    run(9, "performance envelopes", 0, performance);
    run(10, "mean equilibrium count nondecreasing in the agent count", 0, pn_trend);
    return failures;
}
