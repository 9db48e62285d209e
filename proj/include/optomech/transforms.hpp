// transforms.hpp — Frame changes, similarity transformations, and identity checks

#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <string>

#include "optomech/expm.hpp"
#include "optomech/fock.hpp"
#include "optomech/report.hpp"

namespace optomech {

/// U† H U
inline OperatorMatrix conjugate(const OperatorMatrix& u, const OperatorMatrix& h) {
    u.check_same(h);
    return {h.space, u.m.adjoint() * h.m * u.m};
}

/// Hermitian generator G of a rotating frame U(t) = e^{−iGt}. The spectral
/// decomposition is cached so U(t) is exactly unitary at every t.
class FrameGenerator {
public:
    FrameGenerator(OperatorMatrix generator, std::string description = {})
        : generator_(std::move(generator)), description_(std::move(description)),
          propagator_(std::make_shared<HermitianPropagator>(generator_.m)) {
        if (generator_.hermiticity_defect() > 1e-12)
            throw std::invalid_argument("FrameGenerator: generator must be Hermitian");
    }

    const OperatorMatrix& generator() const { return generator_; }
    const std::string& description() const { return description_; }

    OperatorMatrix unitary(double t) const { return {generator_.space, propagator_->at(t)}; }

private:
    OperatorMatrix generator_;
    std::string description_;
    std::shared_ptr<HermitianPropagator> propagator_;
};

/// U†(t) (H(t) − G) U(t): the exact generator of dynamics in the frame of G.
inline OperatorMatrix rotating_frame_residual(const FrameGenerator& frame,
                                              const std::function<OperatorMatrix(double)>& h_of_t,
                                              double t) {
    const OperatorMatrix h = h_of_t(t);
    return conjugate(frame.unitary(t), h - frame.generator());
}

/// R_y(θ) = e^{−iθσ_y} = cos θ · I − i sin θ · σ_y (embedded).
/// R_y(π/4) conjugation maps σ_z → +σ_x and σ_x → −σ_z.
inline OperatorMatrix ry_rotation(double theta, const HilbertSpace& space) {
    if (!space.has_qubit) throw std::invalid_argument("ry_rotation: space has no qubit");
    const auto s = pauli_operators(space);
    Matrix r = std::cos(theta) * Matrix::Identity(space.dim(), space.dim()) -
               IM * std::sin(theta) * s.sy.m;
    return {space, std::move(r)};
}

/// Right-unitary pair T = diag(V, 1) over the qubit basis with its defect
/// projector P = |e⟩⟨e| ⊗ |0⟩⟨0|_cavity ⊗ I: T T† = 1 (away from the cavity
/// truncation edge) while T† T = 1 − P exactly.
struct RightUnitaryPair {
    OperatorMatrix T;
    OperatorMatrix Tdag;
    OperatorMatrix defect_projector;
};

inline RightUnitaryPair right_unitary_T(const HilbertSpace& space) {
    if (!space.has_qubit) throw std::invalid_argument("right_unitary_T: space has no qubit");
    const int block = space.n_cavity * space.n_mech;
    const Matrix v_block = Eigen::kroneckerProduct(sg_lowering_matrix(space.n_cavity),
                                                   Matrix::Identity(space.n_mech, space.n_mech))
                               .eval();
    Matrix t = Matrix::Zero(2 * block, 2 * block);
    t.block(0, 0, block, block) = v_block;
    t.block(block, block, block, block) = Matrix::Identity(block, block);

    Matrix p = Matrix::Zero(2 * block, 2 * block);
    p.block(0, 0, block, block) =
        Eigen::kroneckerProduct(fock_projector_matrix(space.n_cavity, 0),
                                Matrix::Identity(space.n_mech, space.n_mech))
            .eval();

    RightUnitaryPair pair;
    pair.T = {space, t};
    pair.Tdag = pair.T.dag();
    pair.defect_projector = {space, std::move(p)};
    return pair;
}

// ---------------------------------------------------------------------------
// Buffered-interior verification
// ---------------------------------------------------------------------------

/// 0/1 mask of the interior subspace: cavity index ≤ n_cavity−1−buffer_cav and
/// mechanical index ≤ n_mech−1−buffer_mech. The qubit is never buffered.
inline Eigen::VectorXd interior_mask(const HilbertSpace& space, int buffer_cav, int buffer_mech) {
    if (buffer_cav < 0 || buffer_mech < 0)
        throw std::invalid_argument("interior_mask: buffers must be >= 0");
    if (buffer_cav >= space.n_cavity || buffer_mech >= space.n_mech)
        throw std::invalid_argument("interior_mask: buffer exceeds mode dimension");
    Eigen::VectorXd mask(space.dim());
    for (int i = 0; i < space.dim(); ++i) {
        const bool inside = space.cavity_of(i) <= space.n_cavity - 1 - buffer_cav &&
                            space.mech_of(i) <= space.n_mech - 1 - buffer_mech;
        mask(i) = inside ? 1.0 : 0.0;
    }
    return mask;
}

inline double buffered_max_abs_diff(const OperatorMatrix& lhs, const OperatorMatrix& rhs,
                                    int buffer_cav, int buffer_mech) {
    lhs.check_same(rhs);
    const Eigen::VectorXd mask = interior_mask(lhs.space, buffer_cav, buffer_mech);
    double dev = 0.0;
    for (int i = 0; i < lhs.dim(); ++i) {
        if (mask(i) == 0.0) continue;
        for (int j = 0; j < lhs.dim(); ++j) {
            if (mask(j) == 0.0) continue;
            dev = std::max(dev, std::abs(lhs.m(i, j) - rhs.m(i, j)));
        }
    }
    return dev;
}

/// Projects both sides onto the buffered interior and reports the largest
/// absolute entry of the difference.
inline DeviationReport verify_identity(const OperatorMatrix& lhs, const OperatorMatrix& rhs,
                                       int buffer_cav, int buffer_mech, double tol,
                                       std::string label = "identity", std::string notes = {}) {
    const double dev = buffered_max_abs_diff(lhs, rhs, buffer_cav, buffer_mech);
    return DeviationReport::make(std::move(label), dev, tol, buffer_cav, buffer_mech,
                                 std::move(notes));
}

} // namespace optomech
