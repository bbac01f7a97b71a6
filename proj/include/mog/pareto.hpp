#ifndef MOG_PARETO_HPP
#define MOG_PARETO_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "mog/outcome.hpp"

namespace mog {

struct DominanceVerdict {
    bool weak = false;   // y weakly dominates x (>= on every component)
    bool strict = false; // additionally > on at least one component
};

/// y >= x on every component.
inline bool weak_dominates(const OutcomeVector& y, const OutcomeVector& x) {
    require_same_dim(y, x);
    for (std::size_t k = 0; k < y.dim(); ++k) {
        if (y[k] < x[k]) return false;
    }
    return true;
}

/// y >= x everywhere and y > x somewhere.
inline bool dominates(const OutcomeVector& y, const OutcomeVector& x) {
    require_same_dim(y, x);
    bool strict = false;
    for (std::size_t k = 0; k < y.dim(); ++k) {
        if (y[k] < x[k]) return false;
        if (y[k] > x[k]) strict = true;
    }
    return strict;
}

inline DominanceVerdict dominance(const OutcomeVector& y, const OutcomeVector& x) {
    DominanceVerdict v;
    v.weak = weak_dominates(y, x);
    v.strict = v.weak && y != x;
    return v;
}

namespace detail {

// Maximal (maximize=true) or minimal elements under the componentwise order,
// by pairwise comparison. Input points are assumed distinct.
inline std::vector<std::size_t> extreme_indices_pairwise(const std::vector<OutcomeVector>& points,
                                                         bool maximize) {
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool beaten = false;
        for (std::size_t j = 0; j < points.size() && !beaten; ++j) {
            if (i == j) continue;
            beaten = maximize ? dominates(points[j], points[i]) : dominates(points[i], points[j]);
        }
        if (!beaten) kept.push_back(i);
    }
    return kept;
}

// d=2 staircase sweep. Sort so the first component improves, then keep points whose
// second component strictly improves on everything seen so far.
inline std::vector<std::size_t> extreme_indices_sweep2(const std::vector<OutcomeVector>& points,
                                                       bool maximize) {
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (points[a][0] != points[b][0])
            return maximize ? points[a][0] > points[b][0] : points[a][0] < points[b][0];
        return maximize ? points[a][1] > points[b][1] : points[a][1] < points[b][1];
    });
    std::vector<std::size_t> kept;
    bool have_best = false;
    Rational best_second;
    for (std::size_t i : order) {
        const Rational& s = points[i][1];
        const bool improves = !have_best || (maximize ? s > best_second : s < best_second);
        if (improves) {
            kept.push_back(i);
            best_second = s;
            have_best = true;
        }
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

// Lexicographic-order filter. A dominating point always precedes the point it
// dominates in this order, so comparing only against already-kept points yields
// exactly the maximal (resp. minimal) elements.
inline std::vector<std::size_t> extreme_indices_sorted_filter(
    const std::vector<OutcomeVector>& points, bool maximize) {
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return maximize ? points[b] < points[a] : points[a] < points[b];
    });
    std::vector<std::size_t> kept;
    for (std::size_t i : order) {
        bool beaten = false;
        for (std::size_t j : kept) {
            if (maximize ? dominates(points[j], points[i]) : dominates(points[i], points[j])) {
                beaten = true;
                break;
            }
        }
        if (!beaten) kept.push_back(i);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

inline std::vector<std::size_t> extreme_indices(const std::vector<OutcomeVector>& points,
                                                bool maximize) {
    if (!points.empty() && points.front().dim() == 2) {
        return extreme_indices_sweep2(points, maximize);
    }
    return extreme_indices_sorted_filter(points, maximize);
}

} // namespace detail

/// Indices of nondominated elements among distinct points.
inline std::vector<std::size_t> efficient_indices(const std::vector<OutcomeVector>& points) {
    return detail::extreme_indices(points, true);
}

inline OutcomeSet efficient_subset(const OutcomeSet& Y) {
    return Y.select(detail::extreme_indices(Y.points(), true));
}

inline OutcomeSet worst_subset(const OutcomeSet& Y) {
    return Y.select(detail::extreme_indices(Y.points(), false));
}

/// Quadratic reference path, kept callable for cross-checking against the sweep.
inline OutcomeSet efficient_subset_pairwise(const OutcomeSet& Y) {
    return Y.select(detail::extreme_indices_pairwise(Y.points(), true));
}

inline OutcomeSet efficient_subset_sweep2(const OutcomeSet& Y) {
    if (Y.dim() != 2) throw input_error("sweep specialization requires d=2");
    return Y.select(detail::extreme_indices_sweep2(Y.points(), true));
}

inline OutcomeSet worst_subset_pairwise(const OutcomeSet& Y) {
    return Y.select(detail::extreme_indices_pairwise(Y.points(), false));
}

} // namespace mog

#endif // MOG_PARETO_HPP
