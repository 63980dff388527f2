#pragma once

// Reaction nonlinearities f(u) and the structural checks they must satisfy:
// f(u)u >= 0, f(0) = 0, f'(u) >= -c, |f'(u)| <= c(1 + |u|^p).

#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "pullback/errors.hpp"

namespace pullback {

struct Nonlinearity {
    std::string id;
    std::function<double(double)> f;
    std::function<double(double)> df;
    double c = 1.0; // structural constant in the sign/growth bounds
    double p = 0.0; // growth exponent
};

inline Nonlinearity make_nonlinearity(const std::string& id) {
    if (id == "zero")
        return {"zero", [](double) { return 0.0; }, [](double) { return 0.0; }, 1.0, 0.0};
    if (id == "linear")
        return {"linear", [](double u) { return u; }, [](double) { return 1.0; }, 1.0, 0.0};
    if (id == "cubic")
        return {"cubic", [](double u) { return u * u * u; }, [](double u) { return 3.0 * u * u; },
                3.0, 2.0};
    if (id == "neg_linear") // violates the sign condition; test specimen
        return {"neg_linear", [](double u) { return -u; }, [](double) { return -1.0; }, 1.0, 0.0};
    throw ContractViolation("unknown nonlinearity id: " + id);
}

/// Worst violations of the four structural conditions over a symmetric
/// sample grid; every entry <= 0 means compliant. Report-only.
struct NonlinearityReport {
    double sign_violation = 0.0;       // max of -f(u) u
    double zero_violation = 0.0;       // |f(0)|
    double lower_slope_violation = 0.0; // max of -c - f'(u)
    double growth_violation = 0.0;     // max of |f'(u)| - c(1 + |u|^p)
    bool compliant(double tol = 0.0) const {
        return sign_violation <= tol && zero_violation <= tol &&
               lower_slope_violation <= tol && growth_violation <= tol;
    }
};

inline NonlinearityReport check_nonlinearity(const Nonlinearity& nl, double u_max,
                                             int n_samples = 2001) {
    if (!(u_max > 0.0)) throw ContractViolation("check_nonlinearity: u_max must be positive");
    if (n_samples < 1000) throw ContractViolation("check_nonlinearity: need >= 1000 samples");
    NonlinearityReport rep;
    rep.zero_violation = std::abs(nl.f(0.0));
    rep.sign_violation = -std::numeric_limits<double>::infinity();
    rep.lower_slope_violation = -std::numeric_limits<double>::infinity();
    rep.growth_violation = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_samples; ++i) {
        const double u = -u_max + 2.0 * u_max * i / (n_samples - 1);
        const double fu = nl.f(u);
        const double dfu = nl.df(u);
        rep.sign_violation = std::max(rep.sign_violation, -fu * u);
        rep.lower_slope_violation = std::max(rep.lower_slope_violation, -nl.c - dfu);
        rep.growth_violation =
            std::max(rep.growth_violation,
                     std::abs(dfu) - nl.c * (1.0 + std::pow(std::abs(u), nl.p)));
    }
    return rep;
}

} // namespace pullback
