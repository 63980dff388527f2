#pragma once

// Evolution operators: two-parameter processes U(t,tau,x) and one-parameter
// semigroups S(T,x), realized by deterministic single-step maps on a fixed
// time grid. Times are handled as integer step indices internally so that
// identity and cocycle checks are bit-exact, not merely small.

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "pullback/errors.hpp"
#include "pullback/point_cloud.hpp"

namespace pullback {

/// Uniform grid t_start + k dt, k = 0..n_steps.
struct TimeGrid {
    double t_start = 0.0;
    double dt = 1e-3;
    long n_steps = 1;

    TimeGrid(double start, double step, long n) : t_start(start), dt(step), n_steps(n) {
        if (!(dt > 0.0)) throw ContractViolation("TimeGrid: dt must be positive");
        if (n_steps <= 0) throw ContractViolation("TimeGrid: n_steps must be positive");
    }

    std::vector<double> times() const {
        std::vector<double> out(static_cast<std::size_t>(n_steps) + 1);
        for (long k = 0; k <= n_steps; ++k) out[static_cast<std::size_t>(k)] = t_start + k * dt;
        return out;
    }
};

/// Nearest step index of `time` on the grid {k dt}; rejects misaligned times
/// (no interpolation between grid points).
inline long long step_index(double time, double dt) {
    const double r = time / dt;
    const double k = std::round(r);
    if (std::abs(r - k) > 1e-6 * std::max(1.0, std::abs(r)))
        throw ContractViolation("time " + std::to_string(time) +
                                " is not aligned to the dt grid (dt = " + std::to_string(dt) + ")");
    return static_cast<long long>(k);
}

/// Advances x in place from grid time t to t + dt. Must be deterministic:
/// the same (x, t) yields bitwise the same result.
using ProcessStep = std::function<void(State&, double)>;
/// Time-homogeneous step (the time argument is absent by construction).
using SemigroupStep = std::function<void(State&)>;

struct ProcessModel {
    int dim = 1;
    double dt = 1e-3;
    ProcessStep step;
    std::string name;
};

struct SemigroupModel {
    int dim = 1;
    double dt = 1e-3;
    SemigroupStep step;
    std::string name;
};

/// U(t, tau, x): applies the stepper (t - tau)/dt times. Step times are
/// recomputed as k*dt from the integer index, so composed evolutions repeat
/// the exact floating-point operation sequence of a direct one.
inline State evolve_process(const ProcessModel& model, double t, double tau, State x) {
    if (t < tau) throw ContractViolation("evolve_process: t < tau");
    if (static_cast<int>(x.size()) != model.dim)
        throw ContractViolation("evolve_process: state dimension mismatch");
    const long long k0 = step_index(tau, model.dt);
    const long long k1 = step_index(t, model.dt);
    for (long long k = k0; k < k1; ++k) model.step(x, static_cast<double>(k) * model.dt);
    return x;
}

/// S(T, x) for T >= 0 on the grid.
inline State evolve_semigroup(const SemigroupModel& model, double T, State x) {
    if (T < 0.0) throw ContractViolation("evolve_semigroup: negative duration");
    if (static_cast<int>(x.size()) != model.dim)
        throw ContractViolation("evolve_semigroup: state dimension mismatch");
    const long long n = step_index(T, model.dt);
    for (long long k = 0; k < n; ++k) model.step(x);
    return x;
}

/// U_inf(t, s, x) := S(t - s, x); a process that is exactly
/// time-translation invariant.
inline ProcessModel embed_semigroup_as_process(const SemigroupModel& s) {
    ProcessModel p;
    p.dim = s.dim;
    p.dt = s.dt;
    p.name = s.name + " (embedded)";
    p.step = [step = s.step](State& x, double) { step(x); };
    return p;
}

struct AxiomSample {
    double tau;
    double s;
    double t;
    State x;
};

/// Max identity/cocycle defect over the samples, in the max-abs gauge.
/// Deterministic grid-aligned steppers return exactly zero.
inline double check_axioms(const ProcessModel& model, const std::vector<AxiomSample>& samples) {
    double worst = 0.0;
    for (const AxiomSample& smp : samples) {
        if (!(smp.tau <= smp.s && smp.s <= smp.t))
            throw ContractViolation("check_axioms: sample must satisfy tau <= s <= t");
        const State id = evolve_process(model, smp.tau, smp.tau, smp.x);
        for (std::size_t i = 0; i < id.size(); ++i)
            worst = std::max(worst, std::abs(id[i] - smp.x[i]));
        const State direct = evolve_process(model, smp.t, smp.tau, smp.x);
        const State mid = evolve_process(model, smp.s, smp.tau, smp.x);
        const State composed = evolve_process(model, smp.t, smp.s, mid);
        for (std::size_t i = 0; i < direct.size(); ++i)
            worst = std::max(worst, std::abs(direct[i] - composed[i]));
    }
    return worst;
}

inline double check_axioms(const SemigroupModel& model, const std::vector<AxiomSample>& samples) {
    double worst = 0.0;
    for (const AxiomSample& smp : samples) {
        if (!(0.0 <= smp.s && smp.s <= smp.t))
            throw ContractViolation("check_axioms: semigroup sample must satisfy 0 <= s <= t");
        const State id = evolve_semigroup(model, 0.0, smp.x);
        for (std::size_t i = 0; i < id.size(); ++i)
            worst = std::max(worst, std::abs(id[i] - smp.x[i]));
        const State direct = evolve_semigroup(model, smp.t, smp.x);
        const State part = evolve_semigroup(model, smp.s, smp.x);
        const State composed = evolve_semigroup(model, smp.t - smp.s, part);
        for (std::size_t i = 0; i < direct.size(); ++i)
            worst = std::max(worst, std::abs(direct[i] - composed[i]));
    }
    return worst;
}

} // namespace pullback
