// displacement.hpp — Mode displacement operators, plain and photon-number-conditioned

#pragma once

#include <cmath>

#include "optomech/expm.hpp"
#include "optomech/fock.hpp"
#include "optomech/laguerre.hpp"

namespace optomech {

enum class DisplacementMethod { Expm, Laguerre };

/// Working-truncation control for the expm route. `kUnitary` exponentiates the
/// bare truncated generator, which is exactly unitary and the right object for
/// frame changes. `kAutoPad` grows the truncation until the requested window
/// converges, so the elements match the untruncated operator.
constexpr int kUnitary = 0;
constexpr int kAutoPad = -1;

/// D(α) = e^{αa† − α*a} on a single truncated mode via the matrix exponential,
/// evaluated with `pad` extra working levels and cut back to `dim`.
inline Matrix displacement_matrix_expm(int dim, Complex alpha, int pad = kUnitary) {
    const auto at_pad = [&](int extra) {
        const Matrix a = annihilation_matrix(dim + extra);
        const Matrix full = expm(Matrix(alpha * a.adjoint() - std::conj(alpha) * a));
        return Matrix(full.block(0, 0, dim, dim));
    };
    if (pad >= 0) return at_pad(pad);
    // auto mode: double the pad until the window stops moving
    Matrix current = at_pad(8);
    for (int extra = 16; extra <= 16 * dim; extra *= 2) {
        const Matrix next = at_pad(extra);
        if ((next - current).cwiseAbs().maxCoeff() < 1e-13) return next;
        current = next;
    }
    throw std::runtime_error("displacement_matrix_expm: auto padding did not converge");
}

/// Fock matrix elements via generalized Laguerre polynomials:
///   ⟨m|D(α)|n⟩ = √(n!/m!) α^{m−n} e^{−|α|²/2} L_n^{(m−n)}(|α|²)   for m ≥ n,
/// and the mirrored form with (−α*)^{n−m} for m < n. Factorial ratios go
/// through log-gamma so deep truncations do not overflow.
inline Matrix displacement_matrix_laguerre(int dim, Complex alpha) {
    const double x = std::norm(alpha);
    const double gauss = std::exp(-0.5 * x);
    Matrix d(dim, dim);
    for (int m = 0; m < dim; ++m) {
        for (int n = 0; n < dim; ++n) {
            const int lo = std::min(m, n);
            const int hi = std::max(m, n);
            const double ratio = std::exp(0.5 * (std::lgamma(lo + 1.0) - std::lgamma(hi + 1.0)));
            const Complex base = (m >= n) ? alpha : -std::conj(alpha);
            const Complex phase = (hi == lo) ? Complex(1.0) : std::pow(base, hi - lo);
            d(m, n) = ratio * phase * gauss * laguerre(lo, hi - lo, x);
        }
    }
    return d;
}

inline Matrix displacement_matrix(int dim, Complex alpha,
                                  DisplacementMethod method = DisplacementMethod::Expm,
                                  int pad = kUnitary) {
    return method == DisplacementMethod::Expm ? displacement_matrix_expm(dim, alpha, pad)
                                              : displacement_matrix_laguerre(dim, alpha);
}

/// Displacement of one mode embedded into the full space.
inline OperatorMatrix displacement(const HilbertSpace& space, Complex alpha, Subsystem mode,
                                   DisplacementMethod method = DisplacementMethod::Expm,
                                   int pad = kUnitary) {
    if (mode == Subsystem::Qubit)
        throw std::invalid_argument("displacement: mode must be cavity or mech");
    return embed(displacement_matrix(space.subsystem_dim(mode), alpha, method, pad), mode, space);
}

/// D̂_b(ξ(n̂_a − offset)): block-diagonal in cavity photon number, displacing the
/// mechanical mode by ξ(k − offset) on the photon-number-k block. offset = 0
/// gives D̂_b(ξ n̂_a); offset = 1/2 the hybrid-model variant.
inline OperatorMatrix displacement_conditioned(const HilbertSpace& space, Complex xi_coeff,
                                               double offset = 0.0,
                                               DisplacementMethod method = DisplacementMethod::Expm,
                                               int pad = kUnitary) {
    Matrix blocks = Matrix::Zero(space.n_cavity * space.n_mech, space.n_cavity * space.n_mech);
    for (int k = 0; k < space.n_cavity; ++k) {
        const Matrix dk = displacement_matrix(space.n_mech, xi_coeff * (k - offset), method, pad);
        blocks.block(k * space.n_mech, k * space.n_mech, space.n_mech, space.n_mech) = dk;
    }
    if (space.has_qubit)
        blocks = Eigen::kroneckerProduct(Matrix::Identity(2, 2), blocks).eval();
    return {space, std::move(blocks)};
}

/// Coherent state D(α)|0⟩ of one mode (other factors in their ground state).
inline QuantumState coherent_state(const HilbertSpace& space, Complex alpha, Subsystem mode) {
    const OperatorMatrix d = displacement(space, alpha, mode, DisplacementMethod::Expm);
    Vector vac = fock_state(space, 0, 0, 0).as_ket();
    return QuantumState::ket(space, d.m * vac);
}

} // namespace optomech
