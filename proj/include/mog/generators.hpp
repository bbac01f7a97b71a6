#ifndef MOG_GENERATORS_HPP
#define MOG_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mog/errors.hpp"
#include "mog/game.hpp"
#include "mog/outcome.hpp"

namespace mog {

/// Game with i.i.d. uniform integer payoff components in [min_value, max_value].
/// The same seed always produces the same game.
inline MOGame gen_random(std::size_t n, const std::vector<std::size_t>& alphas, std::size_t d,
                         std::uint64_t seed, long max_value = 100, long min_value = 0) {
    if (n == 0 || d == 0) throw input_error("need at least one agent and one objective");
    if (alphas.size() != n) throw input_error("one action count per agent required");
    for (std::size_t a : alphas) {
        if (a == 0) throw input_error("every agent needs at least one action");
    }
    if (min_value < 0 || max_value < min_value) throw input_error("invalid payoff value range");

    std::vector<std::vector<std::string>> labels(n);
    std::size_t profiles = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t b = 0; b < alphas[i]; ++b) labels[i].push_back("a" + std::to_string(b));
        profiles *= alphas[i];
    }
    std::vector<std::string> objective_names(d);
    for (std::size_t k = 0; k < d; ++k) objective_names[k] = "obj" + std::to_string(k + 1);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(min_value, max_value);
    std::vector<std::vector<OutcomeVector>> payoffs(n);
    for (std::size_t i = 0; i < n; ++i) {
        payoffs[i].reserve(profiles);
        for (std::size_t p = 0; p < profiles; ++p) {
            std::vector<Rational> comps(d);
            for (std::size_t k = 0; k < d; ++k) comps[k] = dist(rng);
            payoffs[i].emplace_back(std::move(comps));
        }
    }
    return MOGame(std::move(labels), ObjectiveSpace::all_of(std::move(objective_names)),
                  std::move(payoffs));
}

inline constexpr std::size_t kTobaccoMaxExplicitConsumers = 12;

/// The tobacco economy game: one industry agent (not-active / active /
/// advertise&active) and nu consumer agents (not-smoking / smoking), over
/// objectives money, reward, life-expectancy with welfare on money and life.
/// Explicit normal form, so nu is capped.
inline MOGame gen_tobacco(std::size_t nu) {
    if (nu == 0) throw input_error("at least one consumer required");
    if (nu > kTobaccoMaxExplicitConsumers) {
        throw resource_error("explicit tobacco form capped at " +
                             std::to_string(kTobaccoMaxExplicitConsumers) +
                             " consumers; use the closed form for larger populations");
    }
    const std::size_t n = nu + 1;
    std::vector<std::vector<std::string>> labels(n);
    labels[0] = {"not-active", "active", "advertise&active"};
    for (std::size_t i = 1; i < n; ++i) labels[i] = {"not-smoking", "smoking"};

    ObjectiveSpace space =
        ObjectiveSpace::masked({"money", "reward", "life-expectancy"}, {0, 2});

    // consumer rows indexed [own action][industry action]
    const OutcomeVector consumer_table[2][3] = {
        {OutcomeVector{48, 1, 75}, OutcomeVector{48, 1, 75}, OutcomeVector{48, 1, 75}},
        {OutcomeVector{48, 1, 75}, OutcomeVector{12, 3, 65}, OutcomeVector{0, 4, 55}},
    };
    const Rational industry_money_per_smoker[3] = {0, 26, 36};

    std::size_t profiles = 3;
    for (std::size_t i = 1; i < n; ++i) profiles *= 2;

    std::vector<std::vector<OutcomeVector>> payoffs(n);
    for (auto& p : payoffs) p.reserve(profiles);

    // digit order matches MOGame::profile_at: industry first, then consumers
    for (std::size_t idx = 0; idx < profiles; ++idx) {
        std::size_t rest = idx;
        std::vector<std::size_t> digits(n);
        for (std::size_t i = n; i-- > 1;) {
            digits[i] = rest % 2;
            rest /= 2;
        }
        digits[0] = rest;
        std::size_t smokers = 0;
        for (std::size_t i = 1; i < n; ++i) smokers += digits[i];

        payoffs[0].push_back(OutcomeVector{
            industry_money_per_smoker[digits[0]] * Rational(static_cast<long>(smokers)), 0, 0});
        for (std::size_t i = 1; i < n; ++i) {
            payoffs[i].push_back(consumer_table[digits[i]][digits[0]]);
        }
    }
    return MOGame(std::move(labels), std::move(space), std::move(payoffs));
}

/// The tobacco analysis for any population size, without enumerating profiles.
struct TobaccoClosedForm {
    Rational nu;
    OutcomeSet worst_equilibria; // {nu*(36,55)}
    OutcomeSet frontier;         // {nu*(48,75)}
    Rational equilibrium_outcome_count; // nu + 1 distinct welfare vectors

    /// Welfare with theta smokers: theta*(36,55) + (nu-theta)*(48,75).
    OutcomeVector equilibrium_outcome(const Rational& theta) const {
        if (theta < 0 || theta > nu) throw input_error("smoker count out of range");
        return OutcomeVector{theta * 36 + (nu - theta) * 48, theta * 55 + (nu - theta) * 75};
    }
};

inline TobaccoClosedForm tobacco_closed_form(const Rational& nu) {
    if (nu < 1 || denominator(nu) != 1) throw input_error("population must be a positive integer");
    TobaccoClosedForm cf;
    cf.nu = nu;
    cf.worst_equilibria = OutcomeSet::from_points({OutcomeVector{nu * 36, nu * 55}});
    cf.frontier = OutcomeSet::from_points({OutcomeVector{nu * 48, nu * 75}});
    cf.equilibrium_outcome_count = nu + 1;
    return cf;
}

} // namespace mog

#endif // MOG_GENERATORS_HPP
