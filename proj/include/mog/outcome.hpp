#ifndef MOG_OUTCOME_HPP
#define MOG_OUTCOME_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mog/errors.hpp"
#include "mog/rational.hpp"

namespace mog {

/// One action index per agent.
struct ActionProfile {
    std::vector<std::size_t> actions;

    ActionProfile() = default;
    explicit ActionProfile(std::vector<std::size_t> a) : actions(std::move(a)) {}
    ActionProfile(std::initializer_list<std::size_t> a) : actions(a) {}

    std::size_t size() const { return actions.size(); }
    std::size_t operator[](std::size_t i) const { return actions[i]; }

    friend bool operator==(const ActionProfile&, const ActionProfile&) = default;
    friend bool operator<(const ActionProfile& a, const ActionProfile& b) {
        return std::lexicographical_compare(a.actions.begin(), a.actions.end(),
                                            b.actions.begin(), b.actions.end());
    }
};

/// A point of objective space: exact nonnegative rational components.
class OutcomeVector {
public:
    OutcomeVector() = default;
    explicit OutcomeVector(std::vector<Rational> comps) : comps_(std::move(comps)) { validate(); }
    OutcomeVector(std::initializer_list<Rational> comps) : comps_(comps) { validate(); }

    std::size_t dim() const { return comps_.size(); }
    const Rational& operator[](std::size_t k) const { return comps_[k]; }
    const std::vector<Rational>& components() const { return comps_; }

    auto begin() const { return comps_.begin(); }
    auto end() const { return comps_.end(); }

    friend bool operator==(const OutcomeVector&, const OutcomeVector&) = default;
    friend bool operator<(const OutcomeVector& a, const OutcomeVector& b) {
        return std::lexicographical_compare(a.comps_.begin(), a.comps_.end(), b.comps_.begin(),
                                            b.comps_.end());
    }

    std::string to_exact_string() const {
        std::ostringstream out;
        out << "(";
        for (std::size_t k = 0; k < comps_.size(); ++k) {
            if (k > 0) out << ",";
            out << mog::to_exact_string(comps_[k]);
        }
        out << ")";
        return out.str();
    }

private:
    void validate() const {
        for (const auto& c : comps_) {
            if (c < 0) throw input_error("negative component in outcome vector");
        }
    }

    std::vector<Rational> comps_;
};

inline void require_same_dim(const OutcomeVector& a, const OutcomeVector& b) {
    if (a.dim() != b.dim()) {
        throw input_error("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                          std::to_string(b.dim()));
    }
}

inline OutcomeVector add(const OutcomeVector& a, const OutcomeVector& b) {
    require_same_dim(a, b);
    std::vector<Rational> c(a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) c[k] = a[k] + b[k];
    return OutcomeVector(std::move(c));
}

/// Componentwise minimum.
inline OutcomeVector meet(const OutcomeVector& a, const OutcomeVector& b) {
    require_same_dim(a, b);
    std::vector<Rational> c(a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) c[k] = std::min(a[k], b[k]);
    return OutcomeVector(std::move(c));
}

/// Componentwise quotient y/z; every component of z must be strictly positive.
inline OutcomeVector ratio(const OutcomeVector& y, const OutcomeVector& z) {
    require_same_dim(y, z);
    std::vector<Rational> c(y.dim());
    for (std::size_t k = 0; k < y.dim(); ++k) {
        if (z[k] == 0) {
            throw positivity_error("zero component " + std::to_string(k + 1) +
                                   " in ratio denominator " + z.to_exact_string());
        }
        c[k] = y[k] / z[k];
    }
    return OutcomeVector(std::move(c));
}

/// Componentwise product r*x.
inline OutcomeVector scale(const OutcomeVector& r, const OutcomeVector& x) {
    require_same_dim(r, x);
    std::vector<Rational> c(r.dim());
    for (std::size_t k = 0; k < r.dim(); ++k) c[k] = r[k] * x[k];
    return OutcomeVector(std::move(c));
}

inline OutcomeVector scale(const Rational& s, const OutcomeVector& x) {
    if (s < 0) throw input_error("negative scalar");
    std::vector<Rational> c(x.dim());
    for (std::size_t k = 0; k < x.dim(); ++k) c[k] = s * x[k];
    return OutcomeVector(std::move(c));
}

inline OutcomeVector ones_vector(std::size_t d) {
    return OutcomeVector(std::vector<Rational>(d, Rational(1)));
}

inline OutcomeVector zero_vector(std::size_t d) {
    return OutcomeVector(std::vector<Rational>(d, Rational(0)));
}

/// A deduplicated set of outcome vectors in canonical lexicographic order,
/// each with the list of action profiles that generated it (possibly empty).
class OutcomeSet {
public:
    OutcomeSet() = default;

    static OutcomeSet from_points(std::vector<OutcomeVector> points) {
        OutcomeSet s;
        std::sort(points.begin(), points.end());
        points.erase(std::unique(points.begin(), points.end()), points.end());
        s.points_ = std::move(points);
        s.profiles_.assign(s.points_.size(), {});
        return s;
    }

    static OutcomeSet from_points(std::initializer_list<OutcomeVector> points) {
        return from_points(std::vector<OutcomeVector>(points));
    }

    void insert(const OutcomeVector& v) {
        auto it = std::lower_bound(points_.begin(), points_.end(), v);
        if (it != points_.end() && *it == v) return;
        profiles_.insert(profiles_.begin() + (it - points_.begin()),
                         std::vector<ActionProfile>{});
        points_.insert(it, v);
    }

    void insert(const OutcomeVector& v, const ActionProfile& witness) {
        auto it = std::lower_bound(points_.begin(), points_.end(), v);
        const auto pos = static_cast<std::size_t>(it - points_.begin());
        if (it == points_.end() || *it != v) {
            points_.insert(it, v);
            profiles_.insert(profiles_.begin() + pos, std::vector<ActionProfile>{});
        }
        profiles_[pos].push_back(witness);
    }

    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const OutcomeVector& point(std::size_t i) const { return points_[i]; }
    const std::vector<ActionProfile>& profiles(std::size_t i) const { return profiles_[i]; }
    const std::vector<OutcomeVector>& points() const { return points_; }

    std::size_t dim() const { return points_.empty() ? 0 : points_.front().dim(); }

    std::optional<std::size_t> index_of(const OutcomeVector& v) const {
        auto it = std::lower_bound(points_.begin(), points_.end(), v);
        if (it != points_.end() && *it == v) return static_cast<std::size_t>(it - points_.begin());
        return std::nullopt;
    }

    bool contains(const OutcomeVector& v) const { return index_of(v).has_value(); }

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    friend bool operator==(const OutcomeSet& a, const OutcomeSet& b) {
        return a.points_ == b.points_;
    }

    /// Subset restricted to the given point indices; witnesses carried over.
    OutcomeSet select(const std::vector<std::size_t>& indices) const {
        OutcomeSet s;
        for (std::size_t i : indices) {
            s.points_.push_back(points_[i]);
            s.profiles_.push_back(profiles_[i]);
        }
        // indices are expected ascending, which preserves canonical order
        std::vector<std::size_t> order(s.points_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return s.points_[a] < s.points_[b]; });
        OutcomeSet sorted;
        for (std::size_t i : order) {
            sorted.points_.push_back(std::move(s.points_[i]));
            sorted.profiles_.push_back(std::move(s.profiles_[i]));
        }
        return sorted;
    }

private:
    std::vector<OutcomeVector> points_;
    std::vector<std::vector<ActionProfile>> profiles_;
};

/// Componentwise product r*y applied to every element; witnesses carried over.
inline OutcomeSet scale(const OutcomeVector& r, const OutcomeSet& X) {
    OutcomeSet out;
    for (std::size_t i = 0; i < X.size(); ++i) {
        const OutcomeVector scaled = scale(r, X.point(i));
        for (const auto& w : X.profiles(i)) out.insert(scaled, w);
        out.insert(scaled);
    }
    return out;
}

/// Componentwise quotient y/r applied to every element; r strictly positive.
inline OutcomeSet divide_each(const OutcomeSet& X, const OutcomeVector& r) {
    OutcomeSet out;
    for (const auto& y : X) out.insert(ratio(y, r));
    return out;
}

} // namespace mog

#endif // MOG_OUTCOME_HPP
