#ifndef MOG_ANALYSIS_HPP
#define MOG_ANALYSIS_HPP

#include <chrono>
#include <cstddef>

#include "mog/equilibria.hpp"
#include "mog/game.hpp"
#include "mog/mocr.hpp"
#include "mog/pareto.hpp"

namespace mog {

/// Everything the two-phase procedure produces for one game.
struct EfficiencyReport {
    std::size_t agent_count = 0;
    std::size_t objective_count = 0;
    std::size_t representation_length = 0;

    EquilibriumSet equilibria; // PN, E = u(PN), WST[E]
    OutcomeSet all_outcomes;   // A = u(A)
    OutcomeSet frontier;       // F = EFF[A]

    bool mocr_defined = false; // false iff PN is empty
    RatioSet mocr;

    struct Timings {
        double phase1_ms = 0; // outcomes, PN, worst equilibria
        double phase2_ms = 0; // ratio-set development
    } timings;

    std::size_t q() const { return equilibria.worst.size(); }
    std::size_t m() const { return frontier.size(); }
};

/// Phase 1 (outcomes, PN, worst equilibria) followed by Phase 2 (Algorithm-1
/// development of the guaranteed-ratio region). An empty PN set yields a report
/// with the ratio set marked undefined; a frontier outcome with a zero
/// component raises a positivity error.
inline EfficiencyReport full_analysis(const MOGame& game, const ObjectiveSpace& space) {
    using clock = std::chrono::steady_clock;
    EfficiencyReport report;
    report.agent_count = game.agent_count();
    report.objective_count = game.objective_count();
    report.representation_length = representation_length(game);

    const auto t0 = clock::now();
    report.all_outcomes = outcome_set(game, space);
    report.frontier = efficient_subset(report.all_outcomes);
    report.equilibria = equilibrium_analysis(game, space);
    const auto t1 = clock::now();
    report.timings.phase1_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    if (!report.equilibria.profiles.empty()) {
        require_strictly_positive(report.frontier, "frontier");
        report.mocr = mo_cr(report.equilibria.worst, report.frontier);
        report.mocr_defined = true;
    }
    const auto t2 = clock::now();
    report.timings.phase2_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
    return report;
}

inline EfficiencyReport full_analysis(const MOGame& game) {
    return full_analysis(game, game.objectives());
}

} // namespace mog

#endif // MOG_ANALYSIS_HPP
