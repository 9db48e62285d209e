// config.hpp — Run configuration shared by the CLI commands

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "optomech/hilbert.hpp"
#include "optomech/params.hpp"

namespace optomech {

inline const std::vector<std::string>& observable_catalog() {
    static const std::vector<std::string> names = {"n_a", "n_b", "sz", "x_b"};
    return names;
}

/// Flat-key JSON configuration; keys are the transliterated model symbols plus
/// dimensions, buffers, integration controls, and observables.
struct RunConfig {
    ModelParams params;
    int n_cavity = 8;
    int n_mech = 24;
    bool has_qubit = false;
    int buffer_cav = 2;
    int buffer_mech = 12;
    double t_max = 10.0 * 2.0 * M_PI;
    double dt = 2.0 * M_PI / 1000.0; // 1e-3 of a mechanical period at ω_m = 1
    int record_every = 10;
    int eig_every = 10;
    std::vector<std::string> observables = {"n_b"};
    std::uint64_t seed = 12345;

    HilbertSpace space(bool qubit) const { return HilbertSpace(qubit, n_cavity, n_mech); }

    void validate() const {
        params.validate();
        if (n_cavity < 2 || n_mech < 2)
            throw std::invalid_argument("config: dimensions must be >= 2");
        if (dt <= 0.0) throw std::invalid_argument("config: dt must be > 0");
        if (t_max < dt) throw std::invalid_argument("config: t_max must be >= dt");
        for (const auto& name : observables) {
            const auto& cat = observable_catalog();
            if (std::find(cat.begin(), cat.end(), name) == cat.end())
                throw std::invalid_argument("config: unknown observable '" + name + "'");
        }
    }

    static RunConfig from_json(const nlohmann::json& j) {
        RunConfig c;
        auto get = [&](const char* key, auto& target) {
            if (j.contains(key)) target = j.at(key).get<std::decay_t<decltype(target)>>();
        };
        get("omega_c", c.params.omega_c);
        get("omega_m", c.params.omega_m);
        get("g", c.params.g);
        get("Omega", c.params.Omega);
        get("omega_p", c.params.omega_p);
        get("omega_0", c.params.omega_0);
        get("lambda", c.params.lambda);
        get("gamma", c.params.gamma);
        get("nbar", c.params.nbar);
        get("s", c.params.s);
        get("sideband_sign", c.params.sideband_sign);
        get("n_cavity", c.n_cavity);
        get("n_mech", c.n_mech);
        get("has_qubit", c.has_qubit);
        get("buffer_cav", c.buffer_cav);
        get("buffer_mech", c.buffer_mech);
        get("t_max", c.t_max);
        get("dt", c.dt);
        get("record_every", c.record_every);
        get("eig_every", c.eig_every);
        get("observables", c.observables);
        get("seed", c.seed);
        c.validate();
        return c;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["omega_c"] = params.omega_c;
        j["omega_m"] = params.omega_m;
        j["g"] = params.g;
        j["Omega"] = params.Omega;
        j["omega_p"] = params.omega_p;
        j["omega_0"] = params.omega_0;
        j["lambda"] = params.lambda;
        j["gamma"] = params.gamma;
        j["nbar"] = params.nbar;
        j["s"] = params.s;
        j["sideband_sign"] = params.sideband_sign;
        j["n_cavity"] = n_cavity;
        j["n_mech"] = n_mech;
        j["has_qubit"] = has_qubit;
        j["buffer_cav"] = buffer_cav;
        j["buffer_mech"] = buffer_mech;
        j["t_max"] = t_max;
        j["dt"] = dt;
        j["record_every"] = record_every;
        j["eig_every"] = eig_every;
        j["observables"] = observables;
        j["seed"] = seed;
        return j;
    }
};

} // namespace optomech
