// schrodinger.hpp — RK4 ket propagation for time-dependent Hamiltonians

#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "optomech/operator_matrix.hpp"

namespace optomech {

/// Computes out = H(t)ψ. Implementations may exploit structure; the generic
/// adapter below multiplies by a rebuilt dense matrix.
using HamiltonianAction = std::function<void(double t, const Vector& psi, Vector& out)>;

inline HamiltonianAction dense_action(const Matrix& h) {
    return [h](double, const Vector& psi, Vector& out) { out.noalias() = h * psi; };
}

struct KetSeriesRow {
    double t = 0.0;
    double norm = 0.0;
    std::vector<Complex> expectations;
    Vector state;
};

struct KetSeries {
    std::vector<std::string> observable_names;
    std::vector<KetSeriesRow> rows;
    double max_norm_drift = 0.0;
};

struct KetPropagationOptions {
    int record_every = 10;
    double norm_tol = 1e-6;
    bool keep_states = false;
};

/// Classic RK4 for iψ' = H(t)ψ with midpoint Hamiltonian evaluations.
inline KetSeries rk4_schrodinger(const HamiltonianAction& h_action, const Vector& psi0,
                                 double t_max, double dt,
                                 const std::vector<std::pair<std::string, Matrix>>& observables = {},
                                 const KetPropagationOptions& opts = {}) {
    if (dt <= 0 || t_max < dt) throw std::invalid_argument("rk4_schrodinger: need 0 < dt <= t_max");
    const int steps = static_cast<int>(std::llround(t_max / dt));
    const int dim = static_cast<int>(psi0.size());

    KetSeries series;
    for (const auto& [name, op] : observables) series.observable_names.push_back(name);

    Vector psi = psi0;
    Vector k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);
    const Complex minus_i(0.0, -1.0);

    auto record = [&](double t) {
        KetSeriesRow row;
        row.t = t;
        row.norm = psi.norm();
        for (const auto& [name, op] : observables) row.expectations.push_back(psi.dot(op * psi));
        if (opts.keep_states) row.state = psi;
        series.max_norm_drift = std::max(series.max_norm_drift, std::abs(row.norm - 1.0));
        series.rows.push_back(std::move(row));
    };

    record(0.0);
    for (int step = 1; step <= steps; ++step) {
        const double t = (step - 1) * dt;
        h_action(t, psi, tmp);
        k1 = minus_i * tmp;
        h_action(t + 0.5 * dt, Vector(psi + 0.5 * dt * k1), tmp);
        k2 = minus_i * tmp;
        h_action(t + 0.5 * dt, Vector(psi + 0.5 * dt * k2), tmp);
        k3 = minus_i * tmp;
        h_action(t + dt, Vector(psi + dt * k3), tmp);
        k4 = minus_i * tmp;
        psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        if (std::abs(psi.norm() - 1.0) > opts.norm_tol)
            throw std::runtime_error("rk4_schrodinger: norm drifted beyond tolerance; reduce dt");
        if (step % opts.record_every == 0 || step == steps) record(step * dt);
    }
    return series;
}

} // namespace optomech
