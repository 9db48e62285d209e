// expm.hpp — Dense matrix exponential

#pragma once

#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "optomech/operator_matrix.hpp"

namespace optomech {

/// Matrix exponential (Padé scaling-and-squaring). Rejects non-finite input
/// and reports overflow instead of silently saturating.
inline Matrix expm(const Matrix& a) {
    if (!a.allFinite()) throw std::invalid_argument("expm: non-finite entries in input");
    Matrix e = a.exp();
    if (!e.allFinite()) throw std::overflow_error("expm: result overflowed (input norm too large)");
    return e;
}

inline OperatorMatrix expm(const OperatorMatrix& a) { return {a.space, expm(a.m)}; }

/// e^{−iHt} for Hermitian H via eigendecomposition; exactly unitary and cheap
/// to re-evaluate at many times.
class HermitianPropagator {
public:
    explicit HermitianPropagator(const Matrix& hamiltonian) {
        if ((hamiltonian - hamiltonian.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
            throw std::invalid_argument("HermitianPropagator: generator is not Hermitian");
        Eigen::SelfAdjointEigenSolver<Matrix> es(hamiltonian);
        if (es.info() != Eigen::Success)
            throw std::runtime_error("HermitianPropagator: eigendecomposition failed");
        vectors_ = es.eigenvectors();
        values_ = es.eigenvalues();
    }

    Matrix at(double t) const {
        Vector phases(values_.size());
        for (Eigen::Index k = 0; k < values_.size(); ++k)
            phases(k) = std::exp(Complex(0.0, -values_(k) * t));
        return vectors_ * phases.asDiagonal() * vectors_.adjoint();
    }

private:
    Matrix vectors_;
    Eigen::VectorXd values_;
};

} // namespace optomech
