#ifndef MOG_GAME_HPP
#define MOG_GAME_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mog/errors.hpp"
#include "mog/outcome.hpp"

namespace mog {

/// The objective axes of a game, plus the subset used for welfare.
/// Equilibrium computation always uses all d objectives; welfare restricts to
/// the efficiency mask (ascending 0-based indices).
struct ObjectiveSpace {
    std::vector<std::string> names;
    std::vector<std::size_t> efficiency_mask;

    std::size_t dim() const { return names.size(); }

    static ObjectiveSpace all_of(std::vector<std::string> names) {
        ObjectiveSpace s;
        s.names = std::move(names);
        s.efficiency_mask.resize(s.names.size());
        for (std::size_t k = 0; k < s.efficiency_mask.size(); ++k) s.efficiency_mask[k] = k;
        s.validate();
        return s;
    }

    static ObjectiveSpace masked(std::vector<std::string> names, std::vector<std::size_t> mask) {
        ObjectiveSpace s;
        s.names = std::move(names);
        s.efficiency_mask = std::move(mask);
        s.validate();
        return s;
    }

    void validate() const {
        if (names.empty()) throw input_error("objective count must be at least 1");
        if (efficiency_mask.empty()) throw input_error("efficiency mask must be nonempty");
        if (!std::is_sorted(efficiency_mask.begin(), efficiency_mask.end()) ||
            std::adjacent_find(efficiency_mask.begin(), efficiency_mask.end()) !=
                efficiency_mask.end()) {
            throw input_error("efficiency mask must be strictly increasing");
        }
        if (efficiency_mask.back() >= names.size()) {
            throw input_error("efficiency mask index out of range");
        }
    }
};

/// A finite multi-objective normal-form game: per-agent action sets and a
/// complete tensor of nonnegative d-dimensional payoff vectors.
/// Immutable after construction.
class MOGame {
public:
    MOGame(std::vector<std::vector<std::string>> action_labels, ObjectiveSpace objectives,
           std::vector<std::vector<OutcomeVector>> payoffs)
        : action_labels_(std::move(action_labels)),
          objectives_(std::move(objectives)),
          payoffs_(std::move(payoffs)) {
        objectives_.validate();
        const std::size_t n = action_labels_.size();
        if (n == 0) throw input_error("at least one agent required");
        profile_count_ = 1;
        for (const auto& labels : action_labels_) {
            if (labels.empty()) throw input_error("every agent needs at least one action");
            profile_count_ *= labels.size();
        }
        if (payoffs_.size() != n) throw input_error("payoff tensor has wrong agent count");
        for (std::size_t i = 0; i < n; ++i) {
            if (payoffs_[i].size() != profile_count_) {
                throw input_error("incomplete payoff tensor for agent " + std::to_string(i + 1));
            }
            for (const auto& v : payoffs_[i]) {
                if (v.dim() != objectives_.dim()) {
                    throw input_error("payoff vector dimension mismatch for agent " +
                                      std::to_string(i + 1));
                }
            }
        }
    }

    std::size_t agent_count() const { return action_labels_.size(); }
    std::size_t action_count(std::size_t agent) const { return action_labels_[agent].size(); }
    std::size_t objective_count() const { return objectives_.dim(); }
    std::size_t profile_count() const { return profile_count_; }
    const ObjectiveSpace& objectives() const { return objectives_; }
    const std::vector<std::vector<std::string>>& action_labels() const { return action_labels_; }

    /// Mixed-radix profile index: agent 0 is the most significant digit.
    std::size_t profile_index(const ActionProfile& p) const {
        if (p.size() != agent_count()) throw input_error("profile has wrong agent count");
        std::size_t idx = 0;
        for (std::size_t i = 0; i < agent_count(); ++i) {
            if (p[i] >= action_count(i)) {
                throw input_error("action index out of range for agent " + std::to_string(i + 1));
            }
            idx = idx * action_count(i) + p[i];
        }
        return idx;
    }

    ActionProfile profile_at(std::size_t idx) const {
        std::vector<std::size_t> actions(agent_count());
        for (std::size_t i = agent_count(); i-- > 0;) {
            actions[i] = idx % action_count(i);
            idx /= action_count(i);
        }
        return ActionProfile(std::move(actions));
    }

    const OutcomeVector& evaluate(std::size_t agent, const ActionProfile& profile) const {
        if (agent >= agent_count()) throw input_error("agent index out of range");
        return payoffs_[agent][profile_index(profile)];
    }

    const OutcomeVector& evaluate_by_index(std::size_t agent, std::size_t profile_idx) const {
        return payoffs_[agent][profile_idx];
    }

    std::vector<std::string> profile_labels(const ActionProfile& p) const {
        std::vector<std::string> labels(agent_count());
        for (std::size_t i = 0; i < agent_count(); ++i) labels[i] = action_labels_[i][p[i]];
        return labels;
    }

private:
    std::vector<std::vector<std::string>> action_labels_;
    ObjectiveSpace objectives_;
    std::vector<std::vector<OutcomeVector>> payoffs_;
    std::size_t profile_count_ = 0;
};

/// Utilitarian welfare: componentwise sum over all agents, restricted to the
/// efficiency mask, in mask order.
inline OutcomeVector welfare(const MOGame& game, const ActionProfile& profile,
                             const ObjectiveSpace& space) {
    const std::size_t idx = game.profile_index(profile);
    std::vector<Rational> total(game.objective_count(), Rational(0));
    for (std::size_t i = 0; i < game.agent_count(); ++i) {
        const OutcomeVector& v = game.evaluate_by_index(i, idx);
        for (std::size_t k = 0; k < total.size(); ++k) total[k] += v[k];
    }
    std::vector<Rational> masked(space.efficiency_mask.size());
    for (std::size_t k = 0; k < masked.size(); ++k) masked[k] = total[space.efficiency_mask[k]];
    return OutcomeVector(std::move(masked));
}

inline OutcomeVector welfare(const MOGame& game, const ActionProfile& profile) {
    return welfare(game, profile, game.objectives());
}

/// The deduplicated outcome set u(A), each vector back-mapped to its profiles.
inline OutcomeSet outcome_set(const MOGame& game, const ObjectiveSpace& space) {
    OutcomeSet out;
    for (std::size_t idx = 0; idx < game.profile_count(); ++idx) {
        const ActionProfile p = game.profile_at(idx);
        out.insert(welfare(game, p, space), p);
    }
    return out;
}

inline OutcomeSet outcome_set(const MOGame& game) { return outcome_set(game, game.objectives()); }

/// L = n * prod(alpha_i) * d.
inline std::size_t representation_length(const MOGame& game) {
    return game.agent_count() * game.profile_count() * game.objective_count();
}

} // namespace mog

#endif // MOG_GAME_HPP
