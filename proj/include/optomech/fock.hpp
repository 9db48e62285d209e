// fock.hpp — Subsystem operators, tensor embedding, and standard states

#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

#include "optomech/operator_matrix.hpp"

namespace optomech {

// ---------------------------------------------------------------------------
// Single-mode factor matrices
// ---------------------------------------------------------------------------

/// Truncated annihilation operator: a|n⟩ = √n |n−1⟩.
inline Matrix annihilation_matrix(int dim) {
    Matrix a = Matrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

inline Matrix number_matrix(int dim) {
    Matrix n = Matrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) n(k, k) = static_cast<double>(k);
    return n;
}

/// Susskind-Glogower lowering shift: V|n⟩ = |n−1⟩, V|0⟩ = 0.
inline Matrix sg_lowering_matrix(int dim) {
    Matrix v = Matrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) v(n - 1, n) = 1.0;
    return v;
}

/// diag(f(0), …, f(dim−1)) — operator functions of a number operator.
inline Matrix diagonal_of_number(int dim, const std::function<double(int)>& f) {
    Matrix d = Matrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) d(k, k) = f(k);
    return d;
}

inline Matrix fock_projector_matrix(int dim, int level) {
    if (level < 0 || level >= dim) throw std::out_of_range("fock_projector_matrix: level out of range");
    Matrix p = Matrix::Zero(dim, dim);
    p(level, level) = 1.0;
    return p;
}

// ---------------------------------------------------------------------------
// Tensor embedding
// ---------------------------------------------------------------------------

/// Kronecker-embeds a single-subsystem matrix into the full space, respecting
/// the fixed ordering qubit ⊗ cavity ⊗ mechanical.
inline OperatorMatrix embed(const Matrix& op, Subsystem which, const HilbertSpace& space) {
    const int d = space.subsystem_dim(which);
    if (op.rows() != d || op.cols() != d)
        throw std::invalid_argument("embed: operator does not match subsystem dimension");

    Matrix full;
    const Matrix i_cav = Matrix::Identity(space.n_cavity, space.n_cavity);
    const Matrix i_mech = Matrix::Identity(space.n_mech, space.n_mech);
    switch (which) {
    case Subsystem::Qubit:
        full = Eigen::kroneckerProduct(op, Eigen::kroneckerProduct(i_cav, i_mech).eval()).eval();
        break;
    case Subsystem::Cavity:
        full = Eigen::kroneckerProduct(op, i_mech).eval();
        if (space.has_qubit)
            full = Eigen::kroneckerProduct(Matrix::Identity(2, 2), full).eval();
        break;
    case Subsystem::Mech:
        full = Eigen::kroneckerProduct(i_cav, op).eval();
        if (space.has_qubit)
            full = Eigen::kroneckerProduct(Matrix::Identity(2, 2), full).eval();
        break;
    }
    return {space, std::move(full)};
}

/// Product operator qubit_part ⊗ cavity_part ⊗ mech_part on the full space.
inline OperatorMatrix embed_product(const HilbertSpace& space, const Matrix& cavity_part,
                                    const Matrix& mech_part) {
    Matrix full = Eigen::kroneckerProduct(cavity_part, mech_part).eval();
    if (space.has_qubit) full = Eigen::kroneckerProduct(Matrix::Identity(2, 2), full).eval();
    return {space, std::move(full)};
}

// ---------------------------------------------------------------------------
// Ladder, Pauli and Susskind-Glogower operators on the full space
// ---------------------------------------------------------------------------

struct LadderOperators {
    OperatorMatrix a, adag, b, bdag, n_a, n_b;
};

inline LadderOperators ladder_operators(const HilbertSpace& space) {
    LadderOperators ops;
    const Matrix ac = annihilation_matrix(space.n_cavity);
    const Matrix am = annihilation_matrix(space.n_mech);
    ops.a = embed(ac, Subsystem::Cavity, space);
    ops.adag = ops.a.dag();
    ops.b = embed(am, Subsystem::Mech, space);
    ops.bdag = ops.b.dag();
    ops.n_a = ops.adag * ops.a;
    ops.n_b = ops.bdag * ops.b;
    return ops;
}

struct PauliOperators {
    OperatorMatrix sz, sx, sy, sp, sm;
};

/// Qubit basis is fixed as |e⟩ = (1,0)ᵀ, |g⟩ = (0,1)ᵀ, so σ₊ = |e⟩⟨g|.
inline PauliOperators pauli_operators(const HilbertSpace& space) {
    if (!space.has_qubit)
        throw std::invalid_argument("pauli_operators: space has no qubit factor");
    Matrix sp = Matrix::Zero(2, 2);
    sp(0, 1) = 1.0;
    Matrix sz = Matrix::Zero(2, 2);
    sz(0, 0) = 1.0;
    sz(1, 1) = -1.0;
    PauliOperators ops;
    ops.sp = embed(sp, Subsystem::Qubit, space);
    ops.sm = ops.sp.dag();
    ops.sz = embed(sz, Subsystem::Qubit, space);
    ops.sx = ops.sp + ops.sm;
    ops.sy = -IM * (ops.sp - ops.sm);
    return ops;
}

struct SusskindGlogowerOperators {
    OperatorMatrix V, Vdag;
};

/// V|n⟩ = |n−1⟩ with V|0⟩ = 0; the conjugate loses the top level to truncation.
inline SusskindGlogowerOperators susskind_glogower(const HilbertSpace& space) {
    SusskindGlogowerOperators ops;
    ops.V = embed(sg_lowering_matrix(space.n_cavity), Subsystem::Cavity, space);
    ops.Vdag = ops.V.dag();
    return ops;
}

// ---------------------------------------------------------------------------
// States
// ---------------------------------------------------------------------------

inline QuantumState fock_state(const HilbertSpace& space, int k_qubit, int k_cavity, int k_mech) {
    Vector psi = Vector::Zero(space.dim());
    psi(space.index(k_qubit, k_cavity, k_mech)) = 1.0;
    return QuantumState::ket(space, std::move(psi));
}

inline QuantumState fock_state(const HilbertSpace& space, int k_cavity, int k_mech) {
    return fock_state(space, 0, k_cavity, k_mech);
}

inline Vector fock_ket(int dim, int level) {
    if (level < 0 || level >= dim) throw std::out_of_range("fock_ket: level out of range");
    Vector psi = Vector::Zero(dim);
    psi(level) = 1.0;
    return psi;
}

/// Geometric thermal weights n̄^k/(1+n̄)^{k+1}, renormalized over the kept levels.
inline Matrix thermal_density_matrix(int dim, double nbar) {
    if (nbar < 0) throw std::invalid_argument("thermal_density_matrix: nbar must be >= 0");
    Matrix rho = Matrix::Zero(dim, dim);
    double total = 0.0;
    for (int k = 0; k < dim; ++k) {
        const double w = std::pow(nbar, k) / std::pow(1.0 + nbar, k + 1);
        rho(k, k) = w;
        total += w;
    }
    rho /= total;
    return rho;
}

/// Product density cavity_part ⊗ mech_part, with the qubit (if any) in |g⟩.
inline QuantumState product_density(const HilbertSpace& space, const Matrix& cavity_part,
                                    const Matrix& mech_part) {
    Matrix rho = Eigen::kroneckerProduct(cavity_part, mech_part).eval();
    if (space.has_qubit) {
        Matrix q = Matrix::Zero(2, 2);
        q(1, 1) = 1.0;
        rho = Eigen::kroneckerProduct(q, rho).eval();
    }
    return QuantumState::density(space, std::move(rho));
}

inline QuantumState thermal_state(const HilbertSpace& space, double nbar, Subsystem mode) {
    const Matrix rho_mode = thermal_density_matrix(space.subsystem_dim(mode), nbar);
    const int d_other = (mode == Subsystem::Cavity) ? space.n_mech : space.n_cavity;
    Matrix ground = Matrix::Zero(d_other, d_other);
    ground(0, 0) = 1.0;
    return (mode == Subsystem::Cavity) ? product_density(space, rho_mode, ground)
                                       : product_density(space, ground, rho_mode);
}

} // namespace optomech
