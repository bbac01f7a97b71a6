#ifndef MOG_CONE_HPP
#define MOG_CONE_HPP

#include <cstddef>

#include "mog/outcome.hpp"
#include "mog/pareto.hpp"

namespace mog {

/// Union of lower cones in R^d_+, represented canonically by its Pareto-efficient
/// summits. The empty union (no summits) is the empty region.
struct ConeUnion {
    OutcomeSet summits;

    std::size_t dim() const { return summits.dim(); }
    bool empty() const { return summits.empty(); }

    friend bool operator==(const ConeUnion& a, const ConeUnion& b) {
        return a.summits == b.summits;
    }
};

inline ConeUnion canonicalize(const OutcomeSet& X) { return ConeUnion{efficient_subset(X)}; }

inline ConeUnion cone_of(const OutcomeVector& x) {
    return ConeUnion{OutcomeSet::from_points({x})};
}

inline ConeUnion unite(const ConeUnion& a, const ConeUnion& b) {
    OutcomeSet merged = a.summits;
    for (const auto& s : b.summits) merged.insert(s);
    return canonicalize(merged);
}

/// Intersection via pairwise componentwise minima of the summits.
inline ConeUnion intersect(const ConeUnion& a, const ConeUnion& b) {
    OutcomeSet meets;
    for (const auto& x : a.summits) {
        for (const auto& y : b.summits) meets.insert(meet(x, y));
    }
    return canonicalize(meets);
}

/// x lies in the region iff some summit weakly dominates it.
inline bool contains(const ConeUnion& a, const OutcomeVector& x) {
    for (const auto& s : a.summits) {
        if (weak_dominates(s, x)) return true;
    }
    return false;
}

} // namespace mog

#endif // MOG_CONE_HPP
