#pragma once

// Finite-set geometry: point clouds standing in for attractor slices,
// Hausdorff semi-metric/metric between them, radii and boundedness
// diagnostics of time-indexed families.

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "pullback/errors.hpp"

namespace pullback {

using State = std::vector<double>;

/// Ambient norm shared by every cloud of one experiment:
/// ||x||^2 = weight * sum_i x_i^2.  weight = 1 gives |x| in dimension one,
/// weight = h gives the discrete L2 norm on a grid with spacing h.
struct AmbientNorm {
    double weight = 1.0;

    double norm_sq(const State& x) const {
        double s = 0.0;
        for (double v : x) s += v * v;
        return weight * s;
    }
    double norm(const State& x) const { return std::sqrt(norm_sq(x)); }

    double dist_sq(const State& a, const State& b) const {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double d = a[i] - b[i];
            s += d * d;
        }
        return weight * s;
    }
    double dist(const State& a, const State& b) const { return std::sqrt(dist_sq(a, b)); }

    double inner(const State& a, const State& b) const {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return weight * s;
    }

    bool operator==(const AmbientNorm&) const = default;
};

/// Nonempty finite set of states approximating one attractor slice.
class PointCloud {
public:
    PointCloud(int dim, AmbientNorm norm, std::vector<State> points)
        : dim_(dim), norm_(norm), points_(std::move(points)) {
        if (dim_ <= 0) throw ContractViolation("PointCloud: dim must be positive");
        if (points_.empty()) throw ContractViolation("PointCloud: empty point set");
        for (const State& p : points_) {
            if (static_cast<int>(p.size()) != dim_)
                throw ContractViolation("PointCloud: point of wrong dimension");
            for (double v : p)
                if (!std::isfinite(v))
                    throw ContractViolation("PointCloud: non-finite coordinate");
        }
    }

    static PointCloud singleton(State p, AmbientNorm norm = {}) {
        const int d = static_cast<int>(p.size());
        return PointCloud(d, norm, {std::move(p)});
    }

    int dim() const { return dim_; }
    const AmbientNorm& ambient_norm() const { return norm_; }
    const std::vector<State>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

private:
    int dim_;
    AmbientNorm norm_;
    std::vector<State> points_;
};

namespace detail {
inline void require_comparable(const PointCloud& a, const PointCloud& b) {
    if (a.dim() != b.dim())
        throw ContractViolation("cloud dimension mismatch");
    if (!(a.ambient_norm() == b.ambient_norm()))
        throw ContractViolation("clouds carry different ambient norms");
}
} // namespace detail

/// Hausdorff semi-metric dist(A,B) = max_{a in A} min_{b in B} ||a-b||.
/// A point whose nearest neighbour is already within the running maximum
/// cannot raise it, so its scan is cut short; the result is identical to
/// the exhaustive computation.
inline double semi_dist(const PointCloud& a, const PointCloud& b) {
    detail::require_comparable(a, b);
    const AmbientNorm& nrm = a.ambient_norm();
    double cmax_sq = 0.0;
    for (const State& p : a.points()) {
        double best_sq = std::numeric_limits<double>::infinity();
        for (const State& q : b.points()) {
            const double d_sq = nrm.dist_sq(p, q);
            if (d_sq < best_sq) {
                best_sq = d_sq;
                if (best_sq <= cmax_sq) break;
            }
        }
        if (best_sq > cmax_sq) cmax_sq = best_sq;
    }
    return std::sqrt(cmax_sq);
}

/// Hausdorff metric: max of the two one-sided distances.
inline double hausdorff_dist(const PointCloud& a, const PointCloud& b) {
    return std::max(semi_dist(a, b), semi_dist(b, a));
}

/// Largest ambient norm over the cloud.
inline double radius(const PointCloud& a) {
    double r_sq = 0.0;
    for (const State& p : a.points()) r_sq = std::max(r_sq, a.ambient_norm().norm_sq(p));
    return std::sqrt(r_sq);
}

enum class Direction { forward, backward };

inline std::string to_string(Direction d) {
    return d == Direction::forward ? "forward" : "backward";
}

/// Boundedness diagnostic of a time-indexed family of slices: the numerical
/// surrogate for "there exists a bounded set containing every slice".
struct FamilyDiagnostics {
    double t_min = 0.0;
    double t_max = 0.0;
    double max_radius = 0.0;
    double argmax_t = 0.0;
    bool bounded = false;
};

/// Scans the slices with t >= 0 (forward) or t <= 0 (backward).
inline FamilyDiagnostics family_diagnostics(const std::map<double, PointCloud>& slices,
                                            Direction direction) {
    FamilyDiagnostics diag;
    bool seen = false;
    for (const auto& [t, cloud] : slices) {
        if (direction == Direction::forward ? t < 0.0 : t > 0.0) continue;
        const double r = radius(cloud);
        if (!seen) {
            diag.t_min = diag.t_max = diag.argmax_t = t;
            diag.max_radius = r;
            seen = true;
        } else {
            diag.t_min = std::min(diag.t_min, t);
            diag.t_max = std::max(diag.t_max, t);
            if (r > diag.max_radius) {
                diag.max_radius = r;
                diag.argmax_t = t;
            }
        }
    }
    if (!seen)
        throw ContractViolation("family_diagnostics: no slices in requested direction (" +
                                to_string(direction) + ")");
    diag.bounded = std::isfinite(diag.max_radius);
    return diag;
}

} // namespace pullback
