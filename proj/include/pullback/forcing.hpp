#pragma once

// Separable non-autonomous forcing g(x,t) = g0(x) + h(t) phi(x) with a
// declared autonomous limit g0. Separability makes ||g(t)-g0||^2 =
// h(t)^2 ||phi||^2 exact and reduces every weighted history integral to
// closed amplitude tails plus one quadrature cross term.

#include <cmath>
#include <string>
#include <vector>

#include "pullback/amplitude.hpp"
#include "pullback/errors.hpp"
#include "pullback/point_cloud.hpp"
#include "pullback/quadrature.hpp"

namespace pullback {

class ForcingSpec {
public:
    ForcingSpec(State g0, State phi, Amplitude h, AmbientNorm norm)
        : g0_(std::move(g0)), phi_(std::move(phi)), h_(std::move(h)), norm_(norm) {
        if (g0_.empty()) throw ContractViolation("ForcingSpec: empty limit profile");
        if (phi_.size() != g0_.size())
            throw ContractViolation("ForcingSpec: phi/g0 dimension mismatch");
        g0_norm_sq_ = norm_.norm_sq(g0_);
        phi_norm_sq_ = norm_.norm_sq(phi_);
        g0_dot_phi_ = norm_.inner(g0_, phi_);
    }

    int dim() const { return static_cast<int>(g0_.size()); }
    const State& g0() const { return g0_; }
    const State& phi() const { return phi_; }
    const Amplitude& amplitude() const { return h_; }
    const AmbientNorm& norm() const { return norm_; }

    double g0_norm_sq() const { return g0_norm_sq_; }
    double phi_norm_sq() const { return phi_norm_sq_; }
    double g0_dot_phi() const { return g0_dot_phi_; }

    bool autonomous() const { return h_.is_zero() || phi_norm_sq_ == 0.0; }

    State g_at(double t) const {
        const double ht = h_.value(t);
        State out = g0_;
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += ht * phi_[i];
        return out;
    }

    /// ||g(t) - g0||^2, exact by separability.
    double diff_norm_sq(double t) const {
        const double ht = h_.value(t);
        return ht * ht * phi_norm_sq_;
    }

    /// ||g(t)||^2 expanded through the cached inner products.
    double g_norm_sq(double t) const {
        const double ht = h_.value(t);
        return g0_norm_sq_ + 2.0 * ht * g0_dot_phi_ + ht * ht * phi_norm_sq_;
    }

private:
    State g0_;
    State phi_;
    Amplitude h_;
    AmbientNorm norm_;
    double g0_norm_sq_ = 0.0;
    double phi_norm_sq_ = 0.0;
    double g0_dot_phi_ = 0.0;
};

/// integral_{-inf}^t e^{lambda (s-t)} ||g(s)||^2 ds. The separable parts use
/// closed amplitude tails; the g0-phi cross term goes through adaptive
/// quadrature. Divergence raises DomainError naming the offending term.
inline double exp_weighted_g_sq_history(const ForcingSpec& f, double lambda, double t) {
    if (!(lambda > 0.0))
        throw DomainError("weighted forcing history requires lambda > 0");
    double total = f.g0_norm_sq() / lambda;
    if (!f.autonomous()) {
        const Amplitude& h = f.amplitude();
        const double sq_tail = h.exp_weighted_sq_tail(t, lambda);
        if (!std::isfinite(sq_tail))
            throw DomainError(
                "tempered integral diverges: perturbation term e^{lambda s} h(s)^2 "
                "is not integrable toward -inf (h = " + h.describe() + ")");
        total += f.phi_norm_sq() * sq_tail;
        if (f.g0_dot_phi() != 0.0) {
            const double sup = h.sup_abs_backward(t);
            if (!std::isfinite(sup))
                throw DomainError(
                    "tempered integral diverges: cross term e^{lambda s} h(s) is not "
                    "integrable toward -inf (h = " + h.describe() + ")");
            const double cross = exp_weighted_history(
                [&h](double s) { return h.value(s); }, t, lambda, sup, h.kinks(), 1e-11);
            total += 2.0 * f.g0_dot_phi() * cross;
        }
    }
    return total;
}

/// Radius of the pullback absorbing ball at time t:
/// sqrt( (1/lambda) * integral_{-inf}^t e^{lambda(s-t)} ||g||^2 ds + 1 ).
inline double absorbing_radius(const ForcingSpec& f, double lambda, double t) {
    return std::sqrt(exp_weighted_g_sq_history(f, lambda, t) / lambda + 1.0);
}

/// Finite-window weighted forcing energy integral_a^b e^{k (s-tref)} ||g(s)||^2 ds,
/// closed form in the amplitude tails (monitor right-hand sides).
inline double g_sq_exp_weighted_integral(const ForcingSpec& f, double a, double b, double k,
                                         double tref) {
    double total = f.g0_norm_sq() * detail::eint(k, a, b, k * tref);
    if (!f.autonomous()) {
        total += 2.0 * f.g0_dot_phi() * f.amplitude().exp_weighted_integral(a, b, k, tref);
        total += f.phi_norm_sq() * f.amplitude().exp_weighted_sq_integral(a, b, k, tref);
    }
    return total;
}

} // namespace pullback
