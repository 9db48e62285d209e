// util.hpp — Deterministic random states and sampling helpers

#pragma once

#include <random>

#include "optomech/operator_matrix.hpp"

namespace optomech {

using Rng = std::mt19937_64;

/// Ginibre-style random density matrix supported on the lowest `support` levels.
inline Matrix random_density(int dim, int support, Rng& rng) {
    if (support <= 0 || support > dim)
        throw std::invalid_argument("random_density: bad support size");
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix g = Matrix::Zero(dim, support);
    for (int i = 0; i < support; ++i)
        for (int j = 0; j < support; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return rho;
}

inline Vector random_ket(int dim, int support, Rng& rng) {
    if (support <= 0 || support > dim) throw std::invalid_argument("random_ket: bad support size");
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector psi = Vector::Zero(dim);
    for (int i = 0; i < support; ++i) psi(i) = Complex(gauss(rng), gauss(rng));
    psi.normalize();
    return psi;
}

/// Diagonal density with random nonnegative weights on the lowest levels.
inline Matrix random_diagonal_density(int dim, int support, Rng& rng) {
    std::uniform_real_distribution<double> uni(0.1, 1.0);
    Matrix rho = Matrix::Zero(dim, dim);
    double total = 0.0;
    for (int i = 0; i < support; ++i) {
        rho(i, i) = uni(rng);
        total += rho(i, i).real();
    }
    rho /= total;
    return rho;
}

inline std::vector<double> sampled_times(int count, double t_max, Rng& rng) {
    std::uniform_real_distribution<double> uni(0.0, t_max);
    std::vector<double> ts(count);
    for (auto& t : ts) t = uni(rng);
    return ts;
}

} // namespace optomech
