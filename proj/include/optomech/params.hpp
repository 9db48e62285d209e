// params.hpp — Physical model parameters and derived quantities

#pragma once

#include <complex>
#include <stdexcept>

namespace optomech {

/// All physical symbols of the model family. Frequencies are in units of an
/// arbitrary reference; the defaults put ω_m = 1 and satisfy α = g/ω_m ≪ 1.
struct ModelParams {
    double omega_c = 100.0; // cavity frequency
    double omega_m = 1.0;   // mechanical frequency
    double g = 0.1;         // optomechanical coupling
    double Omega = 0.2;     // pump strength
    double omega_p = 99.0;  // pump frequency
    double omega_0 = 101.0; // qubit transition frequency
    double lambda = 0.1;    // atom-field coupling
    double gamma = 0.05;    // mechanical decay rate
    double nbar = 1.0;      // thermal mean photon number
    int s = 1;              // sideband index
    int sideband_sign = +1; // detuning sign in δ_p = ±s ω_m

    double delta_p() const { return omega_c - omega_p; } // pump-cavity detuning
    double delta() const { return omega_0 - omega_c; }   // qubit-cavity detuning

    double alpha() const {
        if (omega_m <= 0.0) throw std::invalid_argument("ModelParams: alpha needs omega_m > 0");
        return g / omega_m;
    }

    void validate() const {
        if (gamma < 0.0) throw std::invalid_argument("ModelParams: gamma must be >= 0");
        if (nbar < 0.0) throw std::invalid_argument("ModelParams: nbar must be >= 0");
        if (s < 0) throw std::invalid_argument("ModelParams: s must be >= 0");
        if (sideband_sign != 1 && sideband_sign != -1)
            throw std::invalid_argument("ModelParams: sideband_sign must be +1 or -1");
    }
};

/// Derived parameters of the damped, displaced model.
/// β = −g/(ω_m − iγ) cancels the mechanical drive for photon-diagonal fields;
/// μ and ε follow with ω read as ω_m.
struct DampedModelParams {
    std::complex<double> beta;
    std::complex<double> mu;
    double epsilon;

    static DampedModelParams from(const ModelParams& p) {
        DampedModelParams d;
        d.beta = -p.g / std::complex<double>(p.omega_m, -p.gamma);
        d.mu = p.g + p.omega_m * d.beta;
        d.epsilon = 2.0 * p.g * d.beta.real() + p.omega_m * std::norm(d.beta);
        return d;
    }
};

} // namespace optomech
