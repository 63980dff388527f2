#pragma once

// Reaction-diffusion equation u_t - u_xx + lambda u + f(u) = g(x,t) on the
// truncated interval [-L, L] with homogeneous Dirichlet conditions, standard
// second-difference Laplacian, and first-order IMEX stepping: the constant
// operator I + dt (lambda - Lap_h) is solved implicitly (Thomas algorithm,
// factorized once), f(u) and g(.,t) enter explicitly.

#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "pullback/errors.hpp"
#include "pullback/forcing.hpp"
#include "pullback/nonlinearity.hpp"
#include "pullback/process.hpp"

namespace pullback {

class ReactionDiffusionModel {
public:
    ReactionDiffusionModel(double L, int N, double lambda, Nonlinearity f, ForcingSpec forcing,
                           double dt)
        : L_(L), N_(N), lambda_(lambda), f_(std::move(f)), forcing_(std::move(forcing)), dt_(dt) {
        if (!(L_ > 0.0)) throw ContractViolation("rd: L must be positive");
        if (N_ < 2) throw ContractViolation("rd: need at least two interior points");
        if (!(lambda_ > 0.0)) throw ContractViolation("rd: lambda must be positive");
        if (!(dt_ > 0.0)) throw ContractViolation("rd: dt must be positive");
        if (forcing_.dim() != N_)
            throw ContractViolation("rd: forcing profile does not match the grid");
        h_ = 2.0 * L_ / (N_ + 1);
        if (!(forcing_.norm() == AmbientNorm{h_}))
            throw ContractViolation("rd: forcing norm weight must equal the grid spacing");
        factorize_step_operator();
    }

    double L() const { return L_; }
    int N() const { return N_; }
    double lambda() const { return lambda_; }
    double dt() const { return dt_; }
    double grid_spacing() const { return h_; }
    const Nonlinearity& nonlinearity() const { return f_; }
    const ForcingSpec& forcing() const { return forcing_; }
    AmbientNorm norm() const { return AmbientNorm{h_}; }

    /// Interior grid points x_i = -L + (i+1) h.
    std::vector<double> grid() const {
        std::vector<double> x(static_cast<std::size_t>(N_));
        for (int i = 0; i < N_; ++i) x[static_cast<std::size_t>(i)] = -L_ + (i + 1) * h_;
        return x;
    }

    /// k-th eigenvalue of the discrete Dirichlet Laplacian, k = 1..N.
    double laplacian_eigenvalue(int k) const {
        const double s = std::sin(k * M_PI * h_ / (4.0 * L_));
        return 4.0 * s * s / (h_ * h_);
    }

    /// Corresponding eigenvector sin(k pi (x+L) / (2L)) on the grid.
    State laplacian_eigenvector(int k) const {
        State v(static_cast<std::size_t>(N_));
        for (int i = 0; i < N_; ++i)
            v[static_cast<std::size_t>(i)] = std::sin(k * M_PI * (i + 1) / double(N_ + 1));
        return v;
    }

    /// One IMEX step from grid time t to t + dt.
    void step(State& u, double t) const { step_impl(u, forcing_.g_at(t), t); }

    /// One step of the limiting autonomous equation (g = g0).
    void step_autonomous(State& u) const { step_impl(u, forcing_.g0(), 0.0); }

    ProcessModel process(std::string name = "rd") const {
        auto self = std::make_shared<const ReactionDiffusionModel>(*this);
        return ProcessModel{N_, dt_, [self](State& u, double t) { self->step(u, t); },
                            std::move(name)};
    }

    SemigroupModel semigroup(std::string name = "rd limit") const {
        auto self = std::make_shared<const ReactionDiffusionModel>(*this);
        return SemigroupModel{N_, dt_, [self](State& u) { self->step_autonomous(u); },
                              std::move(name)};
    }

    /// Newton iteration on  -Lap_h u + lambda u + f(u) - g0 = 0  from u = 0.
    /// For monotone f the Jacobian is positive definite and this is the
    /// independent route to the global attractor of the limiting equation.
    State steady_state(double tol = 1e-10, int max_iter = 50) const {
        const AmbientNorm nrm{h_};
        State u(static_cast<std::size_t>(N_), 0.0);
        std::vector<double> residual_history;
        State r(static_cast<std::size_t>(N_));
        for (int it = 0; it < max_iter; ++it) {
            steady_residual(u, r);
            const double rn = nrm.norm(r);
            residual_history.push_back(rn);
            if (rn <= tol) return u;
            // Jacobian: tridiag(-1/h^2, lambda + 2/h^2 + f'(u_i), -1/h^2)
            State diag(static_cast<std::size_t>(N_));
            for (int i = 0; i < N_; ++i)
                diag[static_cast<std::size_t>(i)] =
                    lambda_ + 2.0 / (h_ * h_) + f_.df(u[static_cast<std::size_t>(i)]);
            State delta = r;
            solve_tridiagonal(-1.0 / (h_ * h_), diag, delta);
            for (int i = 0; i < N_; ++i)
                u[static_cast<std::size_t>(i)] -= delta[static_cast<std::size_t>(i)];
            if (residual_history.size() >= 6) {
                const std::size_t n = residual_history.size();
                if (residual_history[n - 1] > 0.9 * residual_history[n - 6])
                    throw SolverError("rd steady state: Newton stagnated",
                                      std::move(residual_history));
            }
        }
        throw SolverError("rd steady state: Newton did not reach tolerance",
                          std::move(residual_history));
    }

private:
    void factorize_step_operator() {
        // I + dt (lambda - Lap_h): diag b = 1 + dt(lambda + 2/h^2), off a = -dt/h^2
        off_ = -dt_ / (h_ * h_);
        const double b = 1.0 + dt_ * (lambda_ + 2.0 / (h_ * h_));
        denom_.assign(static_cast<std::size_t>(N_), 0.0);
        cprime_.assign(static_cast<std::size_t>(N_), 0.0);
        denom_[0] = b;
        cprime_[0] = off_ / b;
        for (int i = 1; i < N_; ++i) {
            denom_[static_cast<std::size_t>(i)] = b - off_ * cprime_[static_cast<std::size_t>(i - 1)];
            cprime_[static_cast<std::size_t>(i)] = off_ / denom_[static_cast<std::size_t>(i)];
        }
    }

    void step_impl(State& u, const State& g, double t) const {
        if (static_cast<int>(u.size()) != N_)
            throw ContractViolation("rd step: state dimension mismatch");
        // rhs = u + dt (g - f(u)), then solve (I + dt(lambda - Lap_h)) u' = rhs
        for (int i = 0; i < N_; ++i) {
            const std::size_t k = static_cast<std::size_t>(i);
            u[k] = u[k] + dt_ * (g[k] - f_.f(u[k]));
        }
        // Thomas with the precomputed factorization, in place.
        u[0] /= denom_[0];
        for (int i = 1; i < N_; ++i) {
            const std::size_t k = static_cast<std::size_t>(i);
            u[k] = (u[k] - off_ * u[k - 1]) / denom_[k];
        }
        for (int i = N_ - 2; i >= 0; --i) {
            const std::size_t k = static_cast<std::size_t>(i);
            u[k] -= cprime_[k] * u[k + 1];
        }
        for (double v : u)
            if (!std::isfinite(v))
                throw NumericalBlowup("rd step: non-finite state after step at t = " +
                                          std::to_string(t + dt_),
                                      t + dt_);
    }

    void steady_residual(const State& u, State& r) const {
        const State& g0 = forcing_.g0();
        const double inv_h2 = 1.0 / (h_ * h_);
        for (int i = 0; i < N_; ++i) {
            const std::size_t k = static_cast<std::size_t>(i);
            const double um = i > 0 ? u[k - 1] : 0.0;
            const double up = i < N_ - 1 ? u[k + 1] : 0.0;
            r[k] = -(um - 2.0 * u[k] + up) * inv_h2 + lambda_ * u[k] + f_.f(u[k]) - g0[k];
        }
    }

    /// Solves tridiag(off, diag, off) x = rhs in place (rhs becomes x).
    static void solve_tridiagonal(double off, const State& diag, State& rhs) {
        const std::size_t n = rhs.size();
        std::vector<double> cp(n);
        cp[0] = off / diag[0];
        rhs[0] /= diag[0];
        for (std::size_t i = 1; i < n; ++i) {
            const double d = diag[i] - off * cp[i - 1];
            cp[i] = off / d;
            rhs[i] = (rhs[i] - off * rhs[i - 1]) / d;
        }
        for (std::size_t i = n - 1; i-- > 0;) rhs[i] -= cp[i] * rhs[i + 1];
    }

    double L_;
    int N_;
    double lambda_;
    Nonlinearity f_;
    ForcingSpec forcing_;
    double dt_;
    double h_ = 0.0;
    double off_ = 0.0;
    std::vector<double> denom_;
    std::vector<double> cprime_;
};

} // namespace pullback
