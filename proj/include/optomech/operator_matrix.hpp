// operator_matrix.hpp — Dense complex operators and states tagged with their space

#pragma once

#include <complex>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>

#include "optomech/hilbert.hpp"

namespace optomech {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

constexpr Complex IM{0.0, 1.0};

/// Square complex matrix acting on a HilbertSpace. Arithmetic checks that the
/// spaces agree, which catches most tensor-ordering mistakes at run time.
struct OperatorMatrix {
    HilbertSpace space;
    Matrix m;

    OperatorMatrix() = default;
    OperatorMatrix(const HilbertSpace& s, Matrix entries) : space(s), m(std::move(entries)) {
        if (m.rows() != space.dim() || m.cols() != space.dim())
            throw std::invalid_argument("OperatorMatrix: entries do not match space dimension");
    }

    int dim() const { return static_cast<int>(m.rows()); }

    OperatorMatrix dag() const { return {space, m.adjoint()}; }
    Complex trace() const { return m.trace(); }
    double max_abs() const { return m.cwiseAbs().maxCoeff(); }
    double hermiticity_defect() const { return (m - m.adjoint()).cwiseAbs().maxCoeff(); }
    bool is_hermitian(double tol = 1e-12) const { return hermiticity_defect() < tol; }

    OperatorMatrix& operator+=(const OperatorMatrix& o) {
        check_same(o);
        m += o.m;
        return *this;
    }
    OperatorMatrix& operator-=(const OperatorMatrix& o) {
        check_same(o);
        m -= o.m;
        return *this;
    }
    OperatorMatrix& operator*=(Complex c) {
        m *= c;
        return *this;
    }

    void check_same(const OperatorMatrix& o) const {
        if (space != o.space)
            throw std::invalid_argument("OperatorMatrix: spaces do not match");
    }
};

inline OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) { return a += b; }
inline OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b) { return a -= b; }
inline OperatorMatrix operator-(const OperatorMatrix& a) { return {a.space, -a.m}; }
inline OperatorMatrix operator*(Complex c, OperatorMatrix a) { return a *= c; }
inline OperatorMatrix operator*(double c, OperatorMatrix a) { return a *= Complex(c, 0.0); }
inline OperatorMatrix operator*(OperatorMatrix a, Complex c) { return a *= c; }
inline OperatorMatrix operator*(OperatorMatrix a, double c) { return a *= Complex(c, 0.0); }

inline OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    a.check_same(b);
    return {a.space, a.m * b.m};
}

inline OperatorMatrix dag(const OperatorMatrix& a) { return a.dag(); }

inline OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
    a.check_same(b);
    return {a.space, a.m * b.m - b.m * a.m};
}

inline OperatorMatrix identity_op(const HilbertSpace& space) {
    return {space, Matrix::Identity(space.dim(), space.dim())};
}

inline OperatorMatrix zero_op(const HilbertSpace& space) {
    return {space, Matrix::Zero(space.dim(), space.dim())};
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

/// Ket or density matrix with its space. Kets are stored as d×1 columns.
struct QuantumState {
    enum class Kind { Ket, Density };

    HilbertSpace space;
    Kind kind = Kind::Ket;
    Matrix data;

    static QuantumState ket(const HilbertSpace& s, Vector psi) {
        if (psi.size() != s.dim())
            throw std::invalid_argument("QuantumState: ket dimension mismatch");
        QuantumState q;
        q.space = s;
        q.kind = Kind::Ket;
        q.data = std::move(psi);
        return q;
    }

    static QuantumState density(const HilbertSpace& s, Matrix rho) {
        if (rho.rows() != s.dim() || rho.cols() != s.dim())
            throw std::invalid_argument("QuantumState: density dimension mismatch");
        QuantumState q;
        q.space = s;
        q.kind = Kind::Density;
        q.data = std::move(rho);
        return q;
    }

    bool is_ket() const { return kind == Kind::Ket; }

    Vector as_ket() const {
        if (!is_ket()) throw std::logic_error("QuantumState: not a ket");
        return data.col(0);
    }

    Matrix as_density() const {
        if (is_ket()) return data * data.adjoint();
        return data;
    }

    /// Throws unless the normalization/positivity invariants hold.
    void validate(double tol_norm = 1e-12, double tol_eig = 1e-10) const {
        if (is_ket()) {
            if (std::abs(data.col(0).norm() - 1.0) > tol_norm)
                throw std::runtime_error("QuantumState: ket is not normalized");
            return;
        }
        if (std::abs(data.trace().real() - 1.0) > tol_norm || std::abs(data.trace().imag()) > tol_norm)
            throw std::runtime_error("QuantumState: density trace is not 1");
        if ((data - data.adjoint()).cwiseAbs().maxCoeff() > tol_norm)
            throw std::runtime_error("QuantumState: density is not Hermitian");
        Eigen::SelfAdjointEigenSolver<Matrix> es(data, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -tol_eig)
            throw std::runtime_error("QuantumState: density has a negative eigenvalue");
    }
};

} // namespace optomech
