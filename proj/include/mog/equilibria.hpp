#ifndef MOG_EQUILIBRIA_HPP
#define MOG_EQUILIBRIA_HPP

#include <cstddef>
#include <vector>

#include "mog/game.hpp"
#include "mog/outcome.hpp"
#include "mog/pareto.hpp"

namespace mog {

/// Pareto-Nash profiles with their welfare image and its worst subset.
struct EquilibriumSet {
    std::vector<ActionProfile> profiles; // PN, ascending profile order
    OutcomeSet outcomes;                 // welfare image of PN, back-mapped
    OutcomeSet worst;                    // worst subset of outcomes
};

namespace detail {

// Enumerate adversary assignments for one agent. For each, the caller gets the
// profile indices of every own-action completion.
template <typename Fn>
void for_each_adversary(const MOGame& game, std::size_t agent, Fn&& fn) {
    const std::size_t n = game.agent_count();
    std::vector<std::size_t> digits(n, 0);
    std::vector<std::size_t> completions(game.action_count(agent));
    while (true) {
        for (std::size_t b = 0; b < game.action_count(agent); ++b) {
            digits[agent] = b;
            std::size_t idx = 0;
            for (std::size_t i = 0; i < n; ++i) idx = idx * game.action_count(i) + digits[i];
            completions[b] = idx;
        }
        digits[agent] = 0;
        fn(completions);
        // advance the mixed-radix counter over all agents except `agent`
        std::size_t i = n;
        bool carried = true;
        while (i-- > 0 && carried) {
            if (i == agent) continue;
            if (++digits[i] < game.action_count(i)) {
                carried = false;
            } else {
                digits[i] = 0;
            }
        }
        if (carried) break;
    }
}

} // namespace detail

/// Actions of `agent` whose evaluation is Pareto-efficient among its options
/// against the fixed adversary actions (entry `agent` of `adversary` is ignored).
/// Uses all d objectives, never the efficiency mask.
inline std::vector<std::size_t> best_response_actions(const MOGame& game, std::size_t agent,
                                                      const ActionProfile& adversary) {
    if (agent >= game.agent_count()) throw input_error("agent index out of range");
    ActionProfile p = adversary;
    if (p.size() != game.agent_count()) throw input_error("adversary profile has wrong size");
    std::vector<OutcomeVector> options;
    options.reserve(game.action_count(agent));
    for (std::size_t b = 0; b < game.action_count(agent); ++b) {
        p.actions[agent] = b;
        options.push_back(game.evaluate(agent, p));
    }
    // options may repeat; equal vectors never strictly dominate each other,
    // so the pairwise test works on the raw list
    return detail::extreme_indices_pairwise(options, true);
}

/// Phase-1 marking scheme: per agent and adversary assignment, mark the
/// efficient own-actions; PN are the profiles marked by every agent.
inline std::vector<ActionProfile> pareto_nash_profiles(const MOGame& game) {
    std::vector<bool> candidate(game.profile_count(), true);
    std::vector<OutcomeVector> options;
    for (std::size_t agent = 0; agent < game.agent_count(); ++agent) {
        detail::for_each_adversary(game, agent, [&](const std::vector<std::size_t>& completions) {
            options.clear();
            for (std::size_t idx : completions) {
                options.push_back(game.evaluate_by_index(agent, idx));
            }
            std::vector<bool> efficient(options.size(), true);
            for (std::size_t b = 0; b < options.size(); ++b) {
                for (std::size_t c = 0; c < options.size(); ++c) {
                    if (dominates(options[c], options[b])) {
                        efficient[b] = false;
                        break;
                    }
                }
            }
            for (std::size_t b = 0; b < completions.size(); ++b) {
                if (!efficient[b]) candidate[completions[b]] = false;
            }
        });
    }
    std::vector<ActionProfile> pn;
    for (std::size_t idx = 0; idx < game.profile_count(); ++idx) {
        if (candidate[idx]) pn.push_back(game.profile_at(idx));
    }
    return pn;
}

inline EquilibriumSet equilibrium_analysis(const MOGame& game, const ObjectiveSpace& space) {
    EquilibriumSet eq;
    eq.profiles = pareto_nash_profiles(game);
    for (const auto& p : eq.profiles) eq.outcomes.insert(welfare(game, p, space), p);
    eq.worst = worst_subset(eq.outcomes);
    return eq;
}

inline EquilibriumSet equilibrium_analysis(const MOGame& game) {
    return equilibrium_analysis(game, game.objectives());
}

} // namespace mog

#endif // MOG_EQUILIBRIA_HPP
