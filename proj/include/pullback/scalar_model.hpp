#pragma once

// Analytically solvable scalar non-autonomous ODE  u' + lambda u = g(t):
// the oracle instance of the framework. The stepper is an exponential
// integrator whose per-step forcing convolution is evaluated in closed
// form, so numerical pullback runs agree with the variation-of-constants
// solution to rounding accuracy.

#include <cmath>
#include <memory>
#include <string>

#include "pullback/errors.hpp"
#include "pullback/forcing.hpp"
#include "pullback/process.hpp"
#include "pullback/quadrature.hpp"

namespace pullback {

class ScalarLinearModel {
public:
    // lambda = 0 is admitted only to model the non-dissipative adversarial
    // case; every tail-integral operation then refuses with DomainError.
    ScalarLinearModel(double lambda, ForcingSpec forcing, double dt)
        : lambda_(lambda), forcing_(std::move(forcing)), dt_(dt) {
        if (lambda_ < 0.0) throw ContractViolation("ScalarLinearModel: lambda must be >= 0");
        if (!(dt_ > 0.0)) throw ContractViolation("ScalarLinearModel: dt must be positive");
        if (forcing_.dim() != 1)
            throw ContractViolation("ScalarLinearModel: forcing must be one-dimensional");
    }

    double lambda() const { return lambda_; }
    double dt() const { return dt_; }
    const ForcingSpec& forcing() const { return forcing_; }

    /// One exact step of u' + lambda u = g(t) over [t, t+dt].
    void step(State& x, double t) const {
        const double t1 = t + dt_;
        const double decay = std::exp(-lambda_ * dt_);
        const double lin = lambda_ > 0.0 ? -std::expm1(-lambda_ * dt_) / lambda_ : dt_;
        double conv = forcing_.g0()[0] * lin;
        if (!forcing_.autonomous())
            conv += forcing_.phi()[0] * forcing_.amplitude().exp_weighted_integral(t, t1, lambda_, t1);
        x[0] = decay * x[0] + conv;
    }

    /// Time-homogeneous step of the limiting equation u' + lambda u = g0.
    void step_autonomous(State& x) const {
        const double decay = std::exp(-lambda_ * dt_);
        const double lin = lambda_ > 0.0 ? -std::expm1(-lambda_ * dt_) / lambda_ : dt_;
        x[0] = decay * x[0] + forcing_.g0()[0] * lin;
    }

    ProcessModel process(std::string name = "scalar") const {
        auto self = std::make_shared<const ScalarLinearModel>(*this);
        return ProcessModel{1, dt_, [self](State& x, double t) { self->step(x, t); },
                            std::move(name)};
    }

    SemigroupModel semigroup(std::string name = "scalar limit") const {
        auto self = std::make_shared<const ScalarLinearModel>(*this);
        return SemigroupModel{1, dt_, [self](State& x) { self->step_autonomous(x); },
                              std::move(name)};
    }

private:
    double lambda_;
    ForcingSpec forcing_;
    double dt_;
};

/// a(t) = integral_{-inf}^t e^{-lambda (t-s)} g(s) ds — the unique bounded
/// entire solution, i.e. the pullback attractor point at time t. Evaluated
/// from the full-history tail, a different route than the composed stepper.
inline double scalar_exact_pullback(const ScalarLinearModel& model, double t) {
    const double lambda = model.lambda();
    if (!(lambda > 0.0))
        throw DomainError("scalar_exact_pullback: requires lambda > 0 (tempered history)");
    const ForcingSpec& f = model.forcing();
    double a = f.g0()[0] / lambda;
    if (!f.autonomous()) {
        const Amplitude& h = f.amplitude();
        const double sup = h.sup_abs_backward(t);
        if (!std::isfinite(sup))
            throw DomainError("scalar_exact_pullback: forcing history diverges (h = " +
                              h.describe() + ")");
        a += f.phi()[0] * exp_weighted_history([&h](double s) { return h.value(s); }, t, lambda,
                                               sup, h.kinks(), 1e-12);
    }
    return a;
}

} // namespace pullback
