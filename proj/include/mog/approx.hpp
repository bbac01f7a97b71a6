#ifndef MOG_APPROX_HPP
#define MOG_APPROX_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "mog/errors.hpp"
#include "mog/mocr.hpp"
#include "mog/outcome.hpp"
#include "mog/pareto.hpp"
#include "mog/rational.hpp"

namespace mog {

enum class CoverDirection {
    Lower, // for equilibrium outcomes: cover from below within factor (1+eps)
    Upper, // for efficient outcomes: cover from above within factor (1+eps)
};

/// Exhaustive check of the cover conditions.
/// Lower: cover is a subset, and every y in the original dominates some y' in the
/// cover with (1+eps)y' dominating y back.
/// Upper: cover is a subset, every cover element dominates some original element,
/// and every original z has a cover element z' with (1+eps)z >= z'.
inline bool verify_cover(const OutcomeSet& original, const OutcomeSet& cover, const Rational& eps,
                         CoverDirection direction) {
    if (eps <= 0) throw input_error("epsilon must be positive");
    if (original.dim() != cover.dim() && !cover.empty()) {
        throw input_error("cover dimension mismatch");
    }
    for (const auto& c : cover) {
        if (!original.contains(c)) return false;
    }
    if (cover.empty()) return original.empty();
    const Rational slack = 1 + eps;
    if (direction == CoverDirection::Lower) {
        for (const auto& y : original) {
            bool covered = false;
            for (const auto& yp : cover) {
                if (weak_dominates(y, yp) && weak_dominates(scale(slack, yp), y)) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return false;
        }
    } else {
        for (const auto& zp : cover) {
            bool grounded = false;
            for (const auto& z : original) {
                if (weak_dominates(zp, z)) {
                    grounded = true;
                    break;
                }
            }
            if (!grounded) return false;
        }
        for (const auto& z : original) {
            bool covered = false;
            for (const auto& zp : cover) {
                if (weak_dominates(scale(slack, z), zp)) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return false;
        }
    }
    return true;
}

namespace detail {

// Geometric grid cell: per component, the exponent k with (1+eps)^k <= v.
inline std::map<std::vector<long>, std::vector<std::size_t>> grid_cells(const OutcomeSet& S,
                                                                        const Rational& eps) {
    const Rational base = 1 + eps;
    std::map<std::vector<long>, std::vector<std::size_t>> cells;
    for (std::size_t i = 0; i < S.size(); ++i) {
        const OutcomeVector& v = S.point(i);
        std::vector<long> cell(v.dim());
        for (std::size_t k = 0; k < v.dim(); ++k) {
            if (v[k] == 0) {
                throw positivity_error("cover construction requires strictly positive points, got " +
                                       v.to_exact_string());
            }
            cell[k] = floor_log(v[k], base);
        }
        cells[cell].push_back(i);
    }
    return cells;
}

} // namespace detail

/// Subset cover of S from below: keep the minimal elements of every occupied
/// grid cell. Any two points in one cell are within factor (1+eps) per axis,
/// so each dropped point dominates a kept cell-mate that covers it back.
/// The conditions are re-verified; the identity cover is the fallback.
inline OutcomeSet lower_cover(const OutcomeSet& S, const Rational& eps) {
    if (S.empty()) throw input_error("lower_cover requires a nonempty set");
    if (eps <= 0) throw input_error("epsilon must be positive");
    OutcomeSet cover;
    for (const auto& [cell, indices] : detail::grid_cells(S, eps)) {
        std::vector<OutcomeVector> members;
        for (std::size_t i : indices) members.push_back(S.point(i));
        for (std::size_t j : detail::extreme_indices(members, false)) cover.insert(members[j]);
    }
    if (!verify_cover(S, cover, eps, CoverDirection::Lower)) return S;
    return cover;
}

/// Subset cover of S from above: keep the maximal elements of every occupied cell.
inline OutcomeSet upper_cover(const OutcomeSet& S, const Rational& eps) {
    if (S.empty()) throw input_error("upper_cover requires a nonempty set");
    if (eps <= 0) throw input_error("epsilon must be positive");
    OutcomeSet cover;
    for (const auto& [cell, indices] : detail::grid_cells(S, eps)) {
        std::vector<OutcomeVector> members;
        for (std::size_t i : indices) members.push_back(S.point(i));
        for (std::size_t j : detail::extreme_indices(members, true)) cover.insert(members[j]);
    }
    if (!verify_cover(S, cover, eps, CoverDirection::Upper)) return S;
    return cover;
}

/// Approximate ratio set plus its multiplicative guarantee.
struct ApproxResult {
    RatioSet ratios;
    Rational eps1;
    Rational eps2;
    /// Every exact guaranteed ratio rho has some returned rho' with
    /// guarantee_factor * rho' dominating rho.
    Rational guarantee_factor;
};

/// Runs the layered development on cover sets E of the equilibrium outcomes and
/// F of the efficient outcomes. The returned ratios are sound for the exact
/// sets, and cover the exact ratio frontier within (1+eps1)(1+eps2).
inline ApproxResult approx_mocr(const OutcomeSet& E, const OutcomeSet& F, const Rational& eps1,
                                const Rational& eps2) {
    if (eps1 < 0 || eps2 < 0) throw cover_error("negative epsilon");
    if (E.empty() || F.empty()) throw cover_error("empty cover set");
    require_strictly_positive(F, "frontier cover");
    ApproxResult result;
    result.eps1 = eps1;
    result.eps2 = eps2;
    result.guarantee_factor = (1 + eps1) * (1 + eps2);
    result.ratios = mo_cr(worst_subset(E), efficient_subset(F));
    return result;
}

} // namespace mog

#endif // MOG_APPROX_HPP
