// open_dynamics.hpp — Lindblad generators, RK4 propagation, and the closed-form
// solution of the damped mechanical oscillator

#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "optomech/fock.hpp"
#include "optomech/hamiltonians.hpp"
#include "optomech/params.hpp"

namespace optomech {

// ---------------------------------------------------------------------------
// Generator
// ---------------------------------------------------------------------------

/// dρ/dt = −i[H,ρ] + Σ rate (2JρJ† − J†Jρ − ρJ†J) + Σ coeff (2AρC − CAρ − ρCA).
/// The tagged cross terms carry the βN + β*N† pieces of the displaced master
/// equation; a Hermiticity-preserving generator needs them in conjugate pairs.
class LindbladGenerator {
public:
    explicit LindbladGenerator(Matrix hamiltonian) : h_(std::move(hamiltonian)) {
        dim_ = static_cast<int>(h_.rows());
        if (h_.cols() != dim_) throw std::invalid_argument("LindbladGenerator: H must be square");
    }

    explicit LindbladGenerator(const OperatorMatrix& hamiltonian)
        : LindbladGenerator(hamiltonian.m) {
        space_ = hamiltonian.space;
    }

    void add_dissipator(double rate, const Matrix& jump) {
        if (rate < 0) throw std::invalid_argument("LindbladGenerator: negative rate");
        check_dim(jump);
        dissipators_.push_back({rate, jump, Matrix(jump.adjoint()), Matrix(jump.adjoint() * jump)});
    }

    void add_dissipator(double rate, const OperatorMatrix& jump) { add_dissipator(rate, jump.m); }

    void add_cross_term(Complex coeff, const Matrix& left, const Matrix& right, std::string tag) {
        check_dim(left);
        check_dim(right);
        cross_terms_.push_back({coeff, left, right, Matrix(right * left), std::move(tag)});
    }

    int dim() const { return dim_; }
    const Matrix& hamiltonian() const { return h_; }
    const std::optional<HilbertSpace>& space() const { return space_; }

    Matrix apply(const Matrix& rho) const {
        Matrix out = -IM * (h_ * rho - rho * h_);
        for (const auto& d : dissipators_) {
            out.noalias() += d.rate * (2.0 * (d.jump * rho * d.jump_dag));
            out.noalias() -= d.rate * (d.jdj * rho);
            out.noalias() -= d.rate * (rho * d.jdj);
        }
        for (const auto& c : cross_terms_) {
            out.noalias() += c.coeff * (2.0 * (c.left * rho * c.right));
            out.noalias() -= c.coeff * (c.right_left * rho);
            out.noalias() -= c.coeff * (rho * c.right_left);
        }
        return out;
    }

private:
    struct Dissipator {
        double rate;
        Matrix jump, jump_dag, jdj;
    };
    struct CrossTerm {
        Complex coeff;
        Matrix left, right, right_left;
        std::string tag;
    };

    void check_dim(const Matrix& m) const {
        if (m.rows() != dim_ || m.cols() != dim_)
            throw std::invalid_argument("LindbladGenerator: dimension mismatch");
    }

    Matrix h_;
    int dim_ = 0;
    std::optional<HilbertSpace> space_;
    std::vector<Dissipator> dissipators_;
    std::vector<CrossTerm> cross_terms_;
};

inline Matrix lindblad_apply(const LindbladGenerator& gen, const Matrix& rho) {
    if (rho.rows() != gen.dim() || rho.cols() != gen.dim())
        throw std::invalid_argument("lindblad_apply: dimension mismatch");
    return gen.apply(rho);
}

// ---------------------------------------------------------------------------
// The concrete generators of the damped optomechanical model
// ---------------------------------------------------------------------------

/// dρ/dt = −i[H_m, ρ] + γ L_b[ρ] in the cavity rotating frame.
inline LindbladGenerator master_generator(const ModelParams& p, const HilbertSpace& space) {
    const auto l = ladder_operators(space);
    LindbladGenerator gen(h_damped_section(p, space));
    gen.add_dissipator(p.gamma, l.b);
    return gen;
}

/// Free damped mechanical oscillator on a bare mode of `dim` levels.
inline LindbladGenerator free_damped_generator(int dim, double omega_m, double gamma) {
    LindbladGenerator gen(Matrix(omega_m * number_matrix(dim)));
    gen.add_dissipator(gamma, annihilation_matrix(dim));
    return gen;
}

/// Displaced master equation with H_D' = ε(a†a)² + ω_m b†b + a†a(μb† + μ*b),
/// dissipators on b and on the photon number, and the βN + β*N† cross pair.
/// By default the photon-number jump is β a†a, which is the form produced by
/// conjugating γL_b with D(β a†a); `printed_form` uses the bare a†a jump for
/// comparison (see the damped-reduction verification suite).
inline LindbladGenerator displaced_master_generator(const ModelParams& p, const HilbertSpace& space,
                                                    bool printed_form = false) {
    if (p.omega_m <= 0) throw std::invalid_argument("displaced_master_generator: omega_m must be > 0");
    const auto l = ladder_operators(space);
    const DampedModelParams d = DampedModelParams::from(p);

    OperatorMatrix h = d.epsilon * (l.n_a * l.n_a) + p.omega_m * l.n_b +
                       l.n_a * (d.mu * l.bdag + std::conj(d.mu) * l.b);
    LindbladGenerator gen(h);
    gen.add_dissipator(p.gamma, l.b);
    if (printed_form)
        gen.add_dissipator(p.gamma, l.n_a);
    else
        gen.add_dissipator(p.gamma, Matrix(d.beta * l.n_a.m));
    gen.add_cross_term(p.gamma * d.beta, l.n_a.m, l.bdag.m, "beta N");
    gen.add_cross_term(p.gamma * std::conj(d.beta), l.b.m, l.n_a.m, "beta* N-dagger");
    return gen;
}

/// Residual between the displaced generator and the free damped oscillator on
/// a product state field ⊗ σ. Vanishes for photon-number-diagonal fields when
/// β = −g/(ω_m − iγ).
inline double reduction_residual(const ModelParams& p, const HilbertSpace& space,
                                 const Matrix& field_density, const Matrix& mech_density,
                                 bool printed_form = false) {
    if (field_density.rows() != space.n_cavity || mech_density.rows() != space.n_mech)
        throw std::invalid_argument("reduction_residual: factor dimension mismatch");
    const Matrix rho = Eigen::kroneckerProduct(field_density, mech_density).eval();
    const auto l = ladder_operators(space);

    const LindbladGenerator displaced = displaced_master_generator(p, space, printed_form);
    LindbladGenerator free_gen(Matrix(p.omega_m * l.n_b.m));
    free_gen.add_dissipator(p.gamma, l.b);

    return (displaced.apply(rho) - free_gen.apply(rho)).cwiseAbs().maxCoeff();
}

inline double thermal_reduction_residual(const ModelParams& p, const HilbertSpace& space,
                                         const Matrix& mech_density) {
    return reduction_residual(p, space, thermal_density_matrix(space.n_cavity, p.nbar),
                              mech_density);
}

// ---------------------------------------------------------------------------
// RK4 propagation of density matrices
// ---------------------------------------------------------------------------

struct TimeSeriesRow {
    double t = 0.0;
    double trace = 0.0;
    double min_eig = 0.0;
    std::vector<Complex> expectations;
    Matrix state; // recorded density (or ket as a column)
};

struct TimeSeries {
    std::vector<std::string> observable_names;
    std::vector<TimeSeriesRow> rows;
    double max_trace_drift = 0.0;
    double max_hermiticity_defect = 0.0;
    double min_eigenvalue = 0.0;
};

struct PropagationOptions {
    int record_every = 10;  // steps between recorded rows
    int eig_every = 10;     // recorded rows between min-eigenvalue samples
    double trace_tol = 1e-6; // abort threshold for trace drift
    bool keep_states = false;
};

/// Classic fixed-step RK4 for dρ/dt = gen(ρ), re-Hermitizing each step.
inline TimeSeries rk4_propagate(const LindbladGenerator& gen, const Matrix& rho0, double t_max,
                                double dt, const std::vector<std::pair<std::string, Matrix>>& observables = {},
                                const PropagationOptions& opts = {}) {
    if (dt <= 0 || t_max < dt) throw std::invalid_argument("rk4_propagate: need 0 < dt <= t_max");
    if (rho0.rows() != gen.dim() || rho0.cols() != gen.dim())
        throw std::invalid_argument("rk4_propagate: state dimension mismatch");

    const double trace0 = rho0.trace().real();
    const int steps = static_cast<int>(std::llround(t_max / dt));

    TimeSeries series;
    for (const auto& [name, op] : observables) series.observable_names.push_back(name);
    series.min_eigenvalue = std::numeric_limits<double>::infinity();

    Matrix rho = rho0;
    int rows_since_eig = 0;
    double last_min_eig = 0.0;
    bool have_eig = false;

    auto record = [&](double t) {
        TimeSeriesRow row;
        row.t = t;
        row.trace = rho.trace().real();
        if (!have_eig || rows_since_eig >= opts.eig_every) {
            Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
            last_min_eig = es.eigenvalues().minCoeff();
            series.min_eigenvalue = std::min(series.min_eigenvalue, last_min_eig);
            rows_since_eig = 0;
            have_eig = true;
        }
        row.min_eig = last_min_eig;
        ++rows_since_eig;
        for (const auto& [name, op] : observables) row.expectations.push_back((op * rho).trace());
        if (opts.keep_states) row.state = rho;
        series.max_trace_drift = std::max(series.max_trace_drift, std::abs(row.trace - trace0));
        series.max_hermiticity_defect = std::max(series.max_hermiticity_defect,
                                                 (rho - rho.adjoint()).cwiseAbs().maxCoeff());
        series.rows.push_back(std::move(row));
    };

    record(0.0);
    for (int step = 1; step <= steps; ++step) {
        const Matrix k1 = gen.apply(rho);
        const Matrix k2 = gen.apply(Matrix(rho + 0.5 * dt * k1));
        const Matrix k3 = gen.apply(Matrix(rho + 0.5 * dt * k2));
        const Matrix k4 = gen.apply(Matrix(rho + dt * k3));
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        rho = 0.5 * (rho + rho.adjoint()).eval();

        const double drift = std::abs(rho.trace().real() - trace0);
        if (drift > opts.trace_tol)
            throw std::runtime_error("rk4_propagate: trace drifted by " + std::to_string(drift) +
                                     "; reduce dt");
        if (step % opts.record_every == 0 || step == steps) record(step * dt);
    }
    return series;
}

// ---------------------------------------------------------------------------
// Closed-form damped oscillator
// ---------------------------------------------------------------------------

enum class SuperopOrdering {
    JThenL, // e^{L̂t} ∘ e^{f(t)Ĵ} ∘ rotation — solves the master equation
    LThenJ  // e^{f(t)Ĵ} ∘ e^{L̂t} ∘ rotation with the same f — kept for arbitration
};

/// ρ(t) for dρ/dt = −i[ω_m b†b, ρ] + γ(2bρb† − b†bρ − ρb†b), composed from
/// the free rotation, the elementwise decay e^{L̂t}: ρ_mn ← e^{−γ(m+n)t} ρ_mn,
/// and the terminating series e^{f(t)Ĵ} with Ĵρ = 2γ bρb† and
/// f(t) = (1 − e^{−2γt})/(2γ). With [L̂, Ĵ] = 2γĴ the Ĵ-exponential must act
/// before the L̂-exponential; the alternate composition is exposed so the RK4
/// oracle can arbitrate the printed form.
inline Matrix closed_form_damped(const Matrix& rho0, double t, double omega_m, double gamma,
                                 SuperopOrdering ordering = SuperopOrdering::JThenL) {
    if (gamma < 0) throw std::invalid_argument("closed_form_damped: gamma must be >= 0");
    const int dim = static_cast<int>(rho0.rows());

    Matrix rho(dim, dim);
    for (int m = 0; m < dim; ++m)
        for (int n = 0; n < dim; ++n)
            rho(m, n) = rho0(m, n) * std::exp(Complex(0.0, -omega_m * (m - n) * t));

    const auto apply_L = [&](Matrix& r) {
        for (int m = 0; m < dim; ++m)
            for (int n = 0; n < dim; ++n) r(m, n) *= std::exp(-gamma * (m + n) * t);
    };
    const auto apply_J_series = [&](Matrix& r) {
        const double f = gamma > 0 ? (1.0 - std::exp(-2.0 * gamma * t)) / (2.0 * gamma) : t;
        const Matrix b = annihilation_matrix(dim);
        Matrix term = r;
        Matrix sum = r;
        for (int k = 1; k <= dim; ++k) {
            term = ((f * 2.0 * gamma / k) * (b * term * b.adjoint())).eval();
            if (term.cwiseAbs().maxCoeff() == 0.0) break;
            sum += term;
        }
        r = sum;
    };

    if (ordering == SuperopOrdering::JThenL) {
        apply_J_series(rho);
        apply_L(rho);
    } else {
        apply_L(rho);
        apply_J_series(rho);
    }
    return rho;
}

/// (1/2) tr |ρ − σ|
inline double trace_distance(const Matrix& rho, const Matrix& sigma) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(rho - sigma), Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

} // namespace optomech
