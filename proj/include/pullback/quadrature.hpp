#pragma once

// Adaptive quadrature helpers built on boost::math. Improper integrals over
// exponentially weighted histories are reduced to finite panels split at the
// integrand's kinks, plus an analytically bounded remainder.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "pullback/errors.hpp"

namespace pullback {

inline constexpr double kQuadTol = 1e-12;

/// Adaptive Gauss-Kronrod on [a, b].
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = kQuadTol) {
    if (a == b) return 0.0;
    using boost::math::quadrature::gauss_kronrod;
    return gauss_kronrod<double, 15>::integrate(f, a, b, 15, tol);
}

/// Same, but the panel is split at interior breakpoints where f loses
/// smoothness (|t| style kinks) so the adaptive rule keeps its order.
inline double integrate_with_kinks(const std::function<double(double)>& f, double a, double b,
                                   const std::vector<double>& kinks, double tol = kQuadTol) {
    std::vector<double> cuts{a};
    for (double k : kinks)
        if (k > a && k < b) cuts.push_back(k);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total += integrate(f, cuts[i], cuts[i + 1], tol);
    return total;
}

///  integral_{-inf}^{t} e^{lambda (s - t)} f(s) ds,  lambda > 0,
/// for f bounded on (-inf, t]. `sup_tail(s0)` must bound sup_{s <= s0} |f(s)|
/// (may return inf, which signals divergence). `kinks` lists breakpoints of f.
inline double exp_weighted_history(const std::function<double(double)>& f, double t,
                                   double lambda, double sup_tail_bound,
                                   const std::vector<double>& kinks,
                                   double tol = 1e-11) {
    if (!(lambda > 0.0))
        throw DomainError("exp_weighted_history: decay rate must be positive");
    if (!std::isfinite(sup_tail_bound))
        throw DomainError("exp_weighted_history: integrand unbounded toward -inf");

    // Truncate where the remainder bound sup * e^{-lambda u} / lambda drops
    // below tol/2, then integrate the finite part.
    double depth = 1.0;
    if (sup_tail_bound > 0.0)
        depth = std::max(1.0, std::log(2.0 * sup_tail_bound / (lambda * tol)) / lambda);
    const double a = t - depth;
    auto weighted = [&](double s) { return std::exp(lambda * (s - t)) * f(s); };
    return integrate_with_kinks(weighted, a, t, kinks, tol / 2.0);
}

} // namespace pullback
