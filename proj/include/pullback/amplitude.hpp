#pragma once

// Scalar amplitude profiles h(t) for separable forcings g = g0 + h(t) phi.
// Each shape carries closed-form squared-tail integrals so tempered /
// tail conditions evaluate without sampling; divergent tails come back
// as +infinity and are turned into verdicts or domain errors by callers.

#include <cmath>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "pullback/errors.hpp"
#include "pullback/quadrature.hpp"

namespace pullback {

namespace detail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// integral_a^b e^{k s - shift} ds, stable for both tiny and large k(b-a).
inline double eint(double k, double a, double b, double shift) {
    if (k == 0.0) return std::exp(-shift) * (b - a);
    const double kba = k * (b - a);
    if (std::abs(kba) < 30.0) return std::exp(k * a - shift) * std::expm1(kba) / k;
    return (std::exp(k * b - shift) - std::exp(k * a - shift)) / k;
}

/// integral_{-inf}^b e^{k s - shift} ds; diverges unless k > 0.
inline double eint_history(double k, double b, double shift) {
    if (k <= 0.0) return kInf;
    return std::exp(k * b - shift) / k;
}

} // namespace detail

struct ZeroAmp {
    bool operator==(const ZeroAmp&) const = default;
};

/// h(t) = value (never decays; the hypothesis-violating probe).
struct ConstAmp {
    double value = 1.0;
    bool operator==(const ConstAmp&) const = default;
};

/// h(t) = scale * e^{-alpha |t|}; decays both forward and backward.
struct ExpAbsAmp {
    double alpha = 1.0;
    double scale = 1.0;
    bool operator==(const ExpAbsAmp&) const = default;
};

/// h(t) = scale * e^{rate t}; one-sided decay (backward for rate > 0).
struct ExpAmp {
    double rate = 1.0;
    double scale = 1.0;
    bool operator==(const ExpAmp&) const = default;
};

/// h(t) = (1+t)^{-q} for t >= 0, 1 for t < 0. Square-integrable forward
/// only when q > 1/2; q = 1/4 is the stock divergent-tail specimen.
struct PowerForwardAmp {
    double q = 0.25;
    bool operator==(const PowerForwardAmp&) const = default;
};

class Amplitude {
public:
    using Shape = std::variant<ZeroAmp, ConstAmp, ExpAbsAmp, ExpAmp, PowerForwardAmp>;

    Amplitude() : shape_(ZeroAmp{}) {}
    Amplitude(Shape s) : shape_(std::move(s)) { validate(); }

    static Amplitude zero() { return Amplitude(ZeroAmp{}); }
    static Amplitude constant(double v) { return Amplitude(ConstAmp{v}); }
    static Amplitude exp_abs(double alpha, double scale = 1.0) {
        return Amplitude(ExpAbsAmp{alpha, scale});
    }
    static Amplitude exp(double rate, double scale = 1.0) {
        return Amplitude(ExpAmp{rate, scale});
    }
    static Amplitude power_forward(double q) { return Amplitude(PowerForwardAmp{q}); }

    const Shape& shape() const { return shape_; }
    bool operator==(const Amplitude&) const = default;

    bool is_zero() const {
        if (std::holds_alternative<ZeroAmp>(shape_)) return true;
        if (const auto* c = std::get_if<ConstAmp>(&shape_)) return c->value == 0.0;
        if (const auto* e = std::get_if<ExpAbsAmp>(&shape_)) return e->scale == 0.0;
        if (const auto* e = std::get_if<ExpAmp>(&shape_)) return e->scale == 0.0;
        return false;
    }

    double value(double t) const {
        return std::visit(
            [t](const auto& s) -> double {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, ZeroAmp>) return 0.0;
                else if constexpr (std::is_same_v<T, ConstAmp>) return s.value;
                else if constexpr (std::is_same_v<T, ExpAbsAmp>)
                    return s.scale * std::exp(-s.alpha * std::abs(t));
                else if constexpr (std::is_same_v<T, ExpAmp>)
                    return s.scale * std::exp(s.rate * t);
                else
                    return t >= 0.0 ? std::pow(1.0 + t, -s.q) : 1.0;
            },
            shape_);
    }

    /// Breakpoints where h loses smoothness; quadratures split here.
    std::vector<double> kinks() const {
        if (std::holds_alternative<ExpAbsAmp>(shape_) ||
            std::holds_alternative<PowerForwardAmp>(shape_))
            return {0.0};
        return {};
    }

    /// sup_{s <= t} |h(s)|; +inf when h is unbounded toward the past.
    double sup_abs_backward(double t) const {
        using detail::kInf;
        return std::visit(
            [t](const auto& s) -> double {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, ZeroAmp>) return 0.0;
                else if constexpr (std::is_same_v<T, ConstAmp>) return std::abs(s.value);
                else if constexpr (std::is_same_v<T, ExpAbsAmp>)
                    return t <= 0.0 ? std::abs(s.scale) * std::exp(s.alpha * t)
                                    : std::abs(s.scale);
                else if constexpr (std::is_same_v<T, ExpAmp>) {
                    if (s.scale == 0.0) return 0.0;
                    if (s.rate > 0.0) return std::abs(s.scale) * std::exp(s.rate * t);
                    if (s.rate == 0.0) return std::abs(s.scale);
                    return kInf;
                } else
                    return 1.0;
            },
            shape_);
    }

    /// integral_a^b h(s)^2 ds (finite interval, closed form).
    double sq_integral(double a, double b) const {
        using detail::eint;
        return std::visit(
            [a, b](const auto& s) -> double {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, ZeroAmp>) return 0.0;
                else if constexpr (std::is_same_v<T, ConstAmp>)
                    return s.value * s.value * (b - a);
                else if constexpr (std::is_same_v<T, ExpAbsAmp>) {
                    const double c2 = s.scale * s.scale;
                    double out = 0.0;
                    if (a < 0.0) out += c2 * eint(2.0 * s.alpha, a, std::min(b, 0.0), 0.0);
                    if (b > 0.0) out += c2 * eint(-2.0 * s.alpha, std::max(a, 0.0), b, 0.0);
                    return out;
                } else if constexpr (std::is_same_v<T, ExpAmp>)
                    return s.scale * s.scale * eint(2.0 * s.rate, a, b, 0.0);
                else {
                    double out = 0.0;
                    if (a < 0.0) out += std::min(b, 0.0) - a;
                    if (b > 0.0) {
                        const double lo = std::max(a, 0.0);
                        const double e = 1.0 - 2.0 * s.q;
                        if (e == 0.0)
                            out += std::log1p(b) - std::log1p(lo);
                        else
                            out += (std::pow(1.0 + b, e) - std::pow(1.0 + lo, e)) / e;
                    }
                    return out;
                }
            },
            shape_);
    }

    /// integral_tau^inf h(s)^2 ds; +inf when the tail diverges.
    double sq_tail_forward(double tau) const {
        using detail::kInf;
        return std::visit(
            [tau, this](const auto& s) -> double {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, ZeroAmp>) return 0.0;
                else if constexpr (std::is_same_v<T, ConstAmp>)
                    return s.value == 0.0 ? 0.0 : kInf;
                else if constexpr (std::is_same_v<T, ExpAbsAmp>) {
                    const double c2 = s.scale * s.scale, a2 = 2.0 * s.alpha;
                    if (tau >= 0.0) return c2 * std::exp(-a2 * tau) / a2;
                    return c2 * (2.0 - std::exp(a2 * tau)) / a2;
                } else if constexpr (std::is_same_v<T, ExpAmp>) {
                    if (s.scale == 0.0) return 0.0;
                    if (s.rate >= 0.0) return kInf;
                    return s.scale * s.scale * std::exp(2.0 * s.rate * tau) / (-2.0 * s.rate);
                } else {
                    if (2.0 * s.q <= 1.0) return kInf;
                    const double from0 = 1.0 / (2.0 * s.q - 1.0);
                    if (tau >= 0.0)
                        return std::pow(1.0 + tau, 1.0 - 2.0 * s.q) / (2.0 * s.q - 1.0);
                    return -tau + from0;
                }
            },
            shape_);
    }

    /// integral_{-inf}^tau h(s)^2 ds; +inf when the history diverges.
    double sq_tail_backward(double tau) const {
        using detail::kInf;
        return std::visit(
            [tau](const auto& s) -> double {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, ZeroAmp>) return 0.0;
                else if constexpr (std::is_same_v<T, ConstAmp>)
                    return s.value == 0.0 ? 0.0 : kInf;
                else if constexpr (std::is_same_v<T, ExpAbsAmp>) {
                    const double c2 = s.scale * s.scale, a2 = 2.0 * s.alpha;
                    if (tau <= 0.0) return c2 * std::exp(a2 * tau) / a2;
                    return c2 * (2.0 - std::exp(-a2 * tau)) / a2;
                } else if constexpr (std::is_same_v<T, ExpAmp>) {
                    if (s.scale == 0.0) return 0.0;
                    if (s.rate <= 0.0) return kInf;
                    return s.scale * s.scale * std::exp(2.0 * s.rate * tau) / (2.0 * s.rate);
                } else
                    return kInf;
            },
            shape_);
    }

    /// integral_{-inf}^t e^{lambda (s-t)} h(s)^2 ds; +inf when divergent.
    double exp_weighted_sq_tail(double t, double lambda) const {
        if (!(lambda > 0.0))
            throw DomainError("exp_weighted_sq_tail: lambda must be positive");
        using detail::eint;
        using detail::eint_history;
        using detail::kInf;
        return std::visit(
            [t, lambda](const auto& s) -> double {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, ZeroAmp>) return 0.0;
                else if constexpr (std::is_same_v<T, ConstAmp>)
                    return s.value * s.value / lambda;
                else if constexpr (std::is_same_v<T, ExpAbsAmp>) {
                    const double c2 = s.scale * s.scale, a2 = 2.0 * s.alpha;
                    if (t <= 0.0) return c2 * std::exp(a2 * t) / (lambda + a2);
                    return c2 * (eint_history(lambda + a2, 0.0, lambda * t) +
                                 eint(lambda - a2, 0.0, t, lambda * t));
                } else if constexpr (std::is_same_v<T, ExpAmp>) {
                    if (s.scale == 0.0) return 0.0;
                    const double k = lambda + 2.0 * s.rate;
                    if (k <= 0.0) return kInf;
                    return s.scale * s.scale * std::exp(2.0 * s.rate * t) / k;
                } else {
                    if (t <= 0.0) return 1.0 / lambda;
                    const double past = eint_history(lambda, 0.0, lambda * t);
                    const double q = s.q;
                    const double recent = integrate(
                        [q, lambda, t](double x) {
                            return std::exp(lambda * (x - t)) * std::pow(1.0 + x, -2.0 * q);
                        },
                        0.0, t);
                    return past + recent;
                }
            },
            shape_);
    }

    /// integral_a^b e^{k (s - tref)} h(s) ds, closed form (quadrature for
    /// the power shape). Used by the exponential-integrator stepper.
    double exp_weighted_integral(double a, double b, double k, double tref) const {
        using detail::eint;
        return std::visit(
            [a, b, k, tref](const auto& s) -> double {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, ZeroAmp>) return 0.0;
                else if constexpr (std::is_same_v<T, ConstAmp>)
                    return s.value * eint(k, a, b, k * tref);
                else if constexpr (std::is_same_v<T, ExpAbsAmp>) {
                    double out = 0.0;
                    if (a < 0.0) out += s.scale * eint(k + s.alpha, a, std::min(b, 0.0), k * tref);
                    if (b > 0.0) out += s.scale * eint(k - s.alpha, std::max(a, 0.0), b, k * tref);
                    return out;
                } else if constexpr (std::is_same_v<T, ExpAmp>)
                    return s.scale * eint(k + s.rate, a, b, k * tref);
                else {
                    double out = 0.0;
                    if (a < 0.0) out += eint(k, a, std::min(b, 0.0), k * tref);
                    if (b > 0.0) {
                        const double q = s.q;
                        out += integrate(
                            [q, k, tref](double x) {
                                return std::exp(k * (x - tref)) * std::pow(1.0 + x, -q);
                            },
                            std::max(a, 0.0), b);
                    }
                    return out;
                }
            },
            shape_);
    }

    /// integral_a^b e^{k (s - tref)} h(s)^2 ds (monitor envelopes).
    double exp_weighted_sq_integral(double a, double b, double k, double tref) const {
        using detail::eint;
        return std::visit(
            [a, b, k, tref](const auto& s) -> double {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, ZeroAmp>) return 0.0;
                else if constexpr (std::is_same_v<T, ConstAmp>)
                    return s.value * s.value * eint(k, a, b, k * tref);
                else if constexpr (std::is_same_v<T, ExpAbsAmp>) {
                    const double c2 = s.scale * s.scale;
                    double out = 0.0;
                    if (a < 0.0)
                        out += c2 * eint(k + 2.0 * s.alpha, a, std::min(b, 0.0), k * tref);
                    if (b > 0.0)
                        out += c2 * eint(k - 2.0 * s.alpha, std::max(a, 0.0), b, k * tref);
                    return out;
                } else if constexpr (std::is_same_v<T, ExpAmp>)
                    return s.scale * s.scale * eint(k + 2.0 * s.rate, a, b, k * tref);
                else {
                    double out = 0.0;
                    if (a < 0.0) out += eint(k, a, std::min(b, 0.0), k * tref);
                    if (b > 0.0) {
                        const double q = s.q;
                        out += integrate(
                            [q, k, tref](double x) {
                                return std::exp(k * (x - tref)) * std::pow(1.0 + x, -2.0 * q);
                            },
                            std::max(a, 0.0), b);
                    }
                    return out;
                }
            },
            shape_);
    }

    std::string describe() const {
        return std::visit(
            [](const auto& s) -> std::string {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, ZeroAmp>) return "zero";
                else if constexpr (std::is_same_v<T, ConstAmp>)
                    return "const(" + std::to_string(s.value) + ")";
                else if constexpr (std::is_same_v<T, ExpAbsAmp>)
                    return std::to_string(s.scale) + "*exp(-" + std::to_string(s.alpha) + "|t|)";
                else if constexpr (std::is_same_v<T, ExpAmp>)
                    return std::to_string(s.scale) + "*exp(" + std::to_string(s.rate) + " t)";
                else
                    return "(1+t)^-" + std::to_string(s.q) + " (t>=0)";
            },
            shape_);
    }

private:
    void validate() const {
        if (const auto* e = std::get_if<ExpAbsAmp>(&shape_)) {
            if (!(e->alpha > 0.0))
                throw ContractViolation("exp_abs amplitude: alpha must be positive");
        }
        if (const auto* p = std::get_if<PowerForwardAmp>(&shape_)) {
            if (!(p->q > 0.0))
                throw ContractViolation("power_forward amplitude: q must be positive");
        }
    }

    Shape shape_;
};

} // namespace pullback
