#ifndef MOG_MOCR_HPP
#define MOG_MOCR_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mog/cone.hpp"
#include "mog/errors.hpp"
#include "mog/outcome.hpp"
#include "mog/pareto.hpp"

namespace mog {

inline void require_strictly_positive(const OutcomeSet& F, const char* role) {
    for (const auto& z : F) {
        for (std::size_t k = 0; k < z.dim(); ++k) {
            if (z[k] == 0) {
                throw positivity_error(std::string(role) + " outcome " + z.to_exact_string() +
                                       " has a zero component " + std::to_string(k + 1));
            }
        }
    }
}

/// Result of testing one candidate ratio against E and F.
struct RatioCheck {
    bool guaranteed = false;
    /// When guaranteed: for the i-th element of E, the index in F of a witness z
    /// with y >= rho*z componentwise.
    std::vector<std::size_t> witness;
    /// When not guaranteed: index in E of a violating y.
    std::optional<std::size_t> violating;
};

/// Does rho bound the inefficiency: for every y in E, some z in F with y >= rho*z?
inline RatioCheck check_ratio(const OutcomeVector& rho, const OutcomeSet& E,
                              const OutcomeSet& F) {
    if (E.empty() || F.empty()) throw input_error("check_ratio requires nonempty sets");
    require_strictly_positive(F, "frontier");
    RatioCheck result;
    result.witness.reserve(E.size());
    for (std::size_t i = 0; i < E.size(); ++i) {
        bool found = false;
        for (std::size_t j = 0; j < F.size() && !found; ++j) {
            if (weak_dominates(E.point(i), scale(rho, F.point(j)))) {
                result.witness.push_back(j);
                found = true;
            }
        }
        if (!found) {
            result.guaranteed = false;
            result.witness.clear();
            result.violating = i;
            return result;
        }
    }
    result.guaranteed = true;
    return result;
}

/// The guaranteed-ratio region and its efficient frontier.
struct RatioSet {
    OutcomeSet ratios; // EFF[R[worstE, F]], canonical order
    ConeUnion region;  // C(ratios)
    /// Per ratio (parallel to ratios): for the t-th worst equilibrium, the index
    /// in F of the matched efficient outcome.
    std::vector<std::vector<std::size_t>> paths;
    std::size_t q = 0;
    std::size_t m = 0;
};

namespace detail {

struct RatioCandidate {
    OutcomeVector value;
    std::vector<std::size_t> path;
};

inline RatioSet make_ratio_set(std::vector<RatioCandidate> candidates, std::size_t q,
                               std::size_t m) {
    std::sort(candidates.begin(), candidates.end(),
              [](const RatioCandidate& a, const RatioCandidate& b) { return a.value < b.value; });
    candidates.erase(std::unique(candidates.begin(), candidates.end(),
                                 [](const RatioCandidate& a, const RatioCandidate& b) {
                                     return a.value == b.value;
                                 }),
                     candidates.end());
    std::vector<OutcomeVector> points;
    points.reserve(candidates.size());
    for (const auto& c : candidates) points.push_back(c.value);
    const std::vector<std::size_t> kept = efficient_indices(points);

    RatioSet rs;
    rs.q = q;
    rs.m = m;
    for (std::size_t i : kept) {
        rs.ratios.insert(candidates[i].value);
        rs.paths.push_back(candidates[i].path);
    }
    rs.region = ConeUnion{rs.ratios};
    return rs;
}

} // namespace detail

/// Layered development of the intersection-of-unions: one layer per worst
/// equilibrium, EFF after every layer to keep the summit set canonical.
/// Runs in O((qm)^(2d-1) d).
inline RatioSet mo_cr(const OutcomeSet& worstE, const OutcomeSet& F) {
    if (worstE.empty() || F.empty()) throw input_error("mo_cr requires nonempty sets");
    require_strictly_positive(F, "frontier");

    std::vector<detail::RatioCandidate> layer;
    for (std::size_t j = 0; j < F.size(); ++j) {
        layer.push_back({ratio(worstE.point(0), F.point(j)), {j}});
    }
    layer = [&] {
        auto rs = detail::make_ratio_set(std::move(layer), 1, F.size());
        std::vector<detail::RatioCandidate> out;
        for (std::size_t i = 0; i < rs.ratios.size(); ++i) {
            out.push_back({rs.ratios.point(i), rs.paths[i]});
        }
        return out;
    }();

    for (std::size_t t = 1; t < worstE.size(); ++t) {
        std::vector<detail::RatioCandidate> next;
        next.reserve(layer.size() * F.size());
        for (const auto& cand : layer) {
            for (std::size_t j = 0; j < F.size(); ++j) {
                detail::RatioCandidate c;
                c.value = meet(cand.value, ratio(worstE.point(t), F.point(j)));
                c.path = cand.path;
                c.path.push_back(j);
                next.push_back(std::move(c));
            }
        }
        auto rs = detail::make_ratio_set(std::move(next), t + 1, F.size());
        layer.clear();
        for (std::size_t i = 0; i < rs.ratios.size(); ++i) {
            layer.push_back({rs.ratios.point(i), rs.paths[i]});
        }
    }
    return detail::make_ratio_set(std::move(layer), worstE.size(), F.size());
}

/// Independent oracle: enumerate every path through the layer graph, take the
/// meet along each path, and return the efficient subset of all meets.
inline RatioSet mo_cr_bruteforce(const OutcomeSet& worstE, const OutcomeSet& F,
                                 std::size_t path_budget = 1000000) {
    if (worstE.empty() || F.empty()) throw input_error("mo_cr_bruteforce requires nonempty sets");
    require_strictly_positive(F, "frontier");
    const std::size_t q = worstE.size();
    const std::size_t m = F.size();
    std::size_t total_paths = 1;
    for (std::size_t t = 0; t < q; ++t) {
        if (total_paths > path_budget / m) {
            throw resource_error("path count m^q exceeds budget of " +
                                 std::to_string(path_budget));
        }
        total_paths *= m;
    }

    // precompute the layer-graph vertices y^t / z^j
    std::vector<std::vector<OutcomeVector>> vertex(q);
    for (std::size_t t = 0; t < q; ++t) {
        for (std::size_t j = 0; j < m; ++j) {
            vertex[t].push_back(ratio(worstE.point(t), F.point(j)));
        }
    }

    std::vector<detail::RatioCandidate> meets;
    meets.reserve(total_paths);
    std::vector<std::size_t> path(q, 0);
    std::vector<OutcomeVector> prefix(q);
    std::size_t t = 0;
    while (true) {
        while (t < q) {
            const OutcomeVector& v = vertex[t][path[t]];
            prefix[t] = (t == 0) ? v : meet(prefix[t - 1], v);
            ++t;
        }
        meets.push_back({prefix[q - 1], path});
        // advance to the next path
        while (t-- > 0) {
            if (++path[t] < m) break;
            path[t] = 0;
        }
        if (t == static_cast<std::size_t>(-1)) break;
    }
    return detail::make_ratio_set(std::move(meets), q, m);
}

/// Per-axiom verdicts on a given (E, F, r) instance.
struct AxiomReport {
    bool nonnegative = false;          // ratios live in R^d_+
    bool zero_equilibrium = false;     // MO-CR[{0},F] = {0}
    bool equilibrium_scaling = false;  // MO-CR[r*E,F] = r*MO-CR[E,F]
    bool frontier_scaling = false;     // MO-CR[E,r*F] = MO-CR[E,F]/r
    bool unit_ratio_rule = false;      // E subset of F  <=>  (1,...,1) in MO-CR
    bool equilibrium_monotone = false; // E dominates E' => MO-CR[E,F] dominates MO-CR[E',F]
    bool frontier_monotone = false;    // F dominates F' => MO-CR[E,F'] dominates MO-CR[E,F]

    bool all() const {
        return nonnegative && zero_equilibrium && equilibrium_scaling && frontier_scaling &&
               unit_ratio_rule && equilibrium_monotone && frontier_monotone;
    }
};

namespace detail {

// X dominates Y in the cone sense: Y is inside C(X).
inline bool set_dominates(const OutcomeSet& X, const OutcomeSet& Y) {
    const ConeUnion cone{efficient_subset(X)};
    for (const auto& y : Y) {
        if (!contains(cone, y)) return false;
    }
    return true;
}

} // namespace detail

/// Ratio-scale axiom checks on one instance; r must be strictly positive.
inline AxiomReport axiom_suite(const OutcomeSet& E, const OutcomeSet& F, const OutcomeVector& r) {
    if (E.empty() || F.empty()) throw input_error("axiom_suite requires nonempty sets");
    require_strictly_positive(F, "frontier");
    for (std::size_t k = 0; k < r.dim(); ++k) {
        if (r[k] == 0) throw positivity_error("scale vector has a zero component");
    }

    AxiomReport report;
    const RatioSet base = mo_cr(worst_subset(E), F);

    // (6) nonnegativity is structural (outcome vectors reject negatives), but
    // re-checked on the produced set
    report.nonnegative = true;
    for (const auto& rho : base.ratios) {
        for (std::size_t k = 0; k < rho.dim(); ++k) {
            if (rho[k] < 0) report.nonnegative = false;
        }
    }

    // (7) zero equilibrium outcome
    {
        const OutcomeSet zero = OutcomeSet::from_points({zero_vector(F.dim())});
        const RatioSet rs = mo_cr(zero, F);
        report.zero_equilibrium = rs.ratios == zero;
    }

    // (8) scaling the equilibria scales the ratios
    {
        const RatioSet lhs = mo_cr(worst_subset(scale(r, E)), F);
        report.equilibrium_scaling = lhs.ratios == scale(r, base.ratios);
    }

    // (9) scaling the frontier divides the ratios
    {
        const RatioSet lhs = mo_cr(worst_subset(E), scale(r, F));
        report.frontier_scaling = lhs.ratios == divide_each(base.ratios, r);
    }

    // (10) unit ratio: region membership of (1,...,1) must agree with
    // check_ratio; E inside F forces membership, and when F is an antichain
    // membership forces E inside F
    {
        const OutcomeVector ones = ones_vector(F.dim());
        const bool in_region = contains(base.region, ones);
        const bool checked = check_ratio(ones, E, F).guaranteed;
        bool ok = (in_region == checked);
        bool e_subset_f = true;
        for (const auto& y : E) {
            if (!F.contains(y)) e_subset_f = false;
        }
        if (e_subset_f && !in_region) ok = false;
        // the converse needs F to be a plausible frontier over E: an antichain
        // no element of E strictly improves on (then y >= z forces y == z)
        bool frontier_like = efficient_subset(F) == F;
        for (const auto& y : E) {
            for (const auto& z : F) {
                if (dominates(y, z)) frontier_like = false;
            }
        }
        if (frontier_like && in_region && !e_subset_f) ok = false;
        report.unit_ratio_rule = ok;
    }

    // monotonicity, against dominated perturbations built from r
    {
        std::vector<Rational> shrink(r.dim());
        for (std::size_t k = 0; k < r.dim(); ++k) shrink[k] = r[k] / (1 + r[k]);
        const OutcomeVector s{shrink};

        const RatioSet worse_eq = mo_cr(worst_subset(scale(s, E)), F);
        report.equilibrium_monotone = detail::set_dominates(base.ratios, worse_eq.ratios);

        const RatioSet worse_frontier = mo_cr(worst_subset(E), scale(s, F));
        report.frontier_monotone = detail::set_dominates(worse_frontier.ratios, base.ratios);
    }
    return report;
}

} // namespace mog

#endif // MOG_MOCR_HPP
