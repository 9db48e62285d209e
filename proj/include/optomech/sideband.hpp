// sideband.hpp — Fourier extraction of resonant sideband couplings from the
// double-rotating-frame Hamiltonian, and RWA fidelity experiments

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "optomech/displacement.hpp"
#include "optomech/hamiltonians.hpp"
#include "optomech/schrodinger.hpp"

namespace optomech {

/// Resonance selection: detuning δ_p = sign · s · ω_m with α = g/ω_m.
struct SidebandSpec {
    int s = 1;
    int sign = +1;
    double alpha = 0.1;

    SidebandSpec() = default;
    SidebandSpec(int order, int detuning_sign, double a) : s(order), sign(detuning_sign), alpha(a) {
        if (s < 0 || (sign != 1 && sign != -1) || alpha < 0)
            throw std::invalid_argument("SidebandSpec: invalid parameters");
    }
    explicit SidebandSpec(const ModelParams& p) : SidebandSpec(p.s, p.sideband_sign, p.alpha()) {}

    // the derivation assumes α ≪ 1; flag the regime rather than enforce it
    bool within_validity() const { return alpha < 0.3; }
};

/// (1/2π) ∫₀^{2π} D(α e^{iθ}) e^{−ikθ} dθ on a bare mode, by trapezoidal
/// quadrature over M points. The integrand is a trigonometric polynomial, so
/// doubling M must leave the result unchanged; this is checked in place.
inline Matrix displacement_fourier_component_matrix(int dim, double alpha, int k, int quad_points = 64) {
    if (quad_points < 4) throw std::invalid_argument("displacement_fourier_component: too few points");
    const int m2 = 2 * quad_points;
    Matrix sum_all = Matrix::Zero(dim, dim);
    Matrix sum_even = Matrix::Zero(dim, dim);
    for (int j = 0; j < m2; ++j) {
        const double theta = 2.0 * M_PI * j / m2;
        const Complex xi = alpha * std::exp(Complex(0.0, theta));
        const Matrix d =
            displacement_matrix_expm(dim, xi, kAutoPad) * std::exp(Complex(0.0, -k * theta));
        sum_all += d;
        if (j % 2 == 0) sum_even += d;
    }
    sum_all /= double(m2);
    sum_even /= double(quad_points);
    if ((sum_all - sum_even).cwiseAbs().maxCoeff() > 1e-12)
        throw std::runtime_error("displacement_fourier_component: quadrature did not converge");
    return sum_all;
}

inline OperatorMatrix displacement_fourier_component(const HilbertSpace& space, double alpha, int k,
                                                     int quad_points = 64) {
    if (std::abs(k) > space.n_mech)
        throw std::invalid_argument("displacement_fourier_component: |k| exceeds n_mech");
    return embed(displacement_fourier_component_matrix(space.n_mech, alpha, k, quad_points),
                 Subsystem::Mech, space);
}

/// Stationary part of H_cm at δ_p = sign·s·ω_m:
/// −(g²/ω_m)(a†a)² + (Ω/2)[a·C + (a·C)†], where C is the Fourier component of
/// D_b(αe^{iθ}) whose phase cancels e^{−iδ_p t} (k = sign·s).
inline OperatorMatrix h_sideband_fourier(const ModelParams& p, const HilbertSpace& space,
                                         const SidebandSpec& spec) {
    detail::require_no_qubit(space, "h_sideband_fourier");
    const auto l = ladder_operators(space);
    const double g = spec.alpha * p.omega_m;
    const double kerr = g * g / p.omega_m;
    const OperatorMatrix c = displacement_fourier_component(space, spec.alpha, spec.sign * spec.s);
    const OperatorMatrix drive = l.a * c;
    return -kerr * (l.n_a * l.n_a) + (0.5 * p.Omega) * (drive + drive.dag());
}

/// |element| of the mechanical band of the â-partner, indexed by the smaller
/// mechanical index, including the (Ω/2)e^{−α²/2}-type prefactors.
struct BandProfile {
    bool pairs_a_with_raising = false; // true when â is paired with (b†)^s
    std::vector<double> magnitudes;    // by smaller mechanical index
};

inline BandProfile sideband_band_fourier(const ModelParams& p, const HilbertSpace& space,
                                         const SidebandSpec& spec) {
    const Matrix c =
        displacement_fourier_component_matrix(space.n_mech, spec.alpha, spec.sign * spec.s);
    BandProfile prof;
    prof.pairs_a_with_raising = spec.sign * spec.s > 0;
    const int n = space.n_mech - spec.s;
    prof.magnitudes.resize(std::max(n, 0));
    for (int i = 0; i < n; ++i) {
        const Complex el = spec.sign >= 0 ? c(i + spec.s, i) : c(i, i + spec.s);
        prof.magnitudes[i] = 0.5 * p.Omega * std::abs(el);
    }
    return prof;
}

inline BandProfile sideband_band_printed(const ModelParams& p, const HilbertSpace& space,
                                         const SidebandSpec& spec) {
    const double x = spec.alpha * spec.alpha;
    BandProfile prof;
    prof.pairs_a_with_raising = spec.sign < 0; // printed H_− pairs â with (−αb†)^s
    const int n = space.n_mech - spec.s;
    prof.magnitudes.resize(std::max(n, 0));
    for (int i = 0; i < n; ++i) {
        const double weight =
            std::exp(std::lgamma(i + 1.0) - std::lgamma(i + 1.0 + spec.s)) * laguerre(i, spec.s, x);
        const double ladder = std::exp(0.5 * (std::lgamma(i + 1.0 + spec.s) - std::lgamma(i + 1.0)));
        prof.magnitudes[i] = 0.5 * p.Omega * std::exp(-0.5 * x) *
                             std::pow(spec.alpha, spec.s) * ladder * std::abs(weight);
    }
    return prof;
}

// ---------------------------------------------------------------------------
// RWA fidelity
// ---------------------------------------------------------------------------

/// H_cm(t) as a fast action: H(t) = U†(t) [K + (Ω/2)(e^{iδ_p t} M + h.c.)] U(t)
/// with U(t) = e^{−iω_m n̂_b t} diagonal and M = a† D_b†(α) precomputed. This is
/// the same operator h_cm builds, applied in O(dim²) per evaluation.
inline HamiltonianAction h_cm_action(const ModelParams& p, const HilbertSpace& space) {
    detail::require_no_qubit(space, "h_cm_action");
    const auto l = ladder_operators(space);
    const double alpha = p.alpha();
    const double kerr = p.g * p.g / p.omega_m;
    const double delta_p = p.delta_p();
    const double omega_m = p.omega_m;
    const double half_omega = 0.5 * p.Omega;

    Eigen::VectorXd kerr_diag(space.dim());
    Eigen::VectorXd mech_level(space.dim());
    for (int i = 0; i < space.dim(); ++i) {
        const double n_c = space.cavity_of(i);
        kerr_diag(i) = -kerr * n_c * n_c;
        mech_level(i) = space.mech_of(i);
    }
    const Matrix m_op = (l.adag * displacement(space, alpha, Subsystem::Mech).dag()).m;
    const Matrix m_dag = m_op.adjoint();

    return [=](double t, const Vector& psi, Vector& out) {
        const int dim = static_cast<int>(psi.size());
        Vector u(dim);
        for (int i = 0; i < dim; ++i)
            u(i) = psi(i) * std::exp(Complex(0.0, -omega_m * mech_level(i) * t));
        const Complex phase = std::exp(Complex(0.0, delta_p * t));
        Vector w = kerr_diag.cast<Complex>().cwiseProduct(u);
        w.noalias() += (half_omega * phase) * (m_op * u);
        w.noalias() += (half_omega * std::conj(phase)) * (m_dag * u);
        out.resize(dim);
        for (int i = 0; i < dim; ++i)
            out(i) = w(i) * std::exp(Complex(0.0, omega_m * mech_level(i) * t));
    };
}

struct FidelityPoint {
    double t = 0.0;
    double fidelity = 0.0;
};

struct FidelitySeries {
    std::vector<FidelityPoint> points;
    double min_fidelity = 1.0;
    double max_norm_drift = 0.0;
};

/// Propagates ψ₀ under the full time-dependent H_cm and under the static
/// sideband Hamiltonian, returning F(t) = |⟨ψ_full(t)|ψ_RWA(t)⟩|².
inline FidelitySeries rwa_fidelity(const ModelParams& p, const HilbertSpace& space,
                                   const SidebandSpec& spec, const Vector& psi0, double t_max,
                                   double dt, int record_every = 10) {
    if (std::abs(psi0.norm() - 1.0) > 1e-10)
        throw std::invalid_argument("rwa_fidelity: psi0 must be normalized");
    if (std::abs(spec.alpha - p.alpha()) > 1e-12)
        throw std::invalid_argument("rwa_fidelity: spec.alpha must equal g/omega_m");
    if (std::abs(p.delta_p() - spec.sign * spec.s * p.omega_m) > 1e-12)
        throw std::invalid_argument("rwa_fidelity: delta_p must equal sign*s*omega_m");

    KetPropagationOptions opts;
    opts.record_every = record_every;
    opts.keep_states = true;

    const KetSeries full = rk4_schrodinger(h_cm_action(p, space), psi0, t_max, dt, {}, opts);
    const Matrix h_rwa = h_sideband_fourier(p, space, spec).m;
    const KetSeries rwa = rk4_schrodinger(dense_action(h_rwa), psi0, t_max, dt, {}, opts);

    FidelitySeries series;
    series.max_norm_drift = std::max(full.max_norm_drift, rwa.max_norm_drift);
    for (size_t i = 0; i < full.rows.size(); ++i) {
        FidelityPoint pt;
        pt.t = full.rows[i].t;
        pt.fidelity = std::norm(full.rows[i].state.dot(rwa.rows[i].state));
        series.min_fidelity = std::min(series.min_fidelity, pt.fidelity);
        series.points.push_back(pt);
    }
    return series;
}

} // namespace optomech
