// hilbert.hpp — Truncated composite Hilbert space: qubit ⊗ cavity ⊗ mechanical

#pragma once

#include <stdexcept>
#include <string>

namespace optomech {

enum class Subsystem { Qubit, Cavity, Mech };

/// Dimensions and tensor ordering of the truncated model space.
/// The ordering is fixed as qubit ⊗ cavity ⊗ mechanical; the qubit factor is
/// omitted when absent. Basis index = ((q * n_cavity) + c) * n_mech + m.
struct HilbertSpace {
    bool has_qubit = false;
    int n_cavity = 8;
    int n_mech = 24;

    HilbertSpace() = default;
    HilbertSpace(bool qubit, int cavity_levels, int mech_levels)
        : has_qubit(qubit), n_cavity(cavity_levels), n_mech(mech_levels) {
        if (n_cavity < 2 || n_mech < 2)
            throw std::invalid_argument("HilbertSpace: need at least 2 levels per mode");
    }

    int dim() const { return (has_qubit ? 2 : 1) * n_cavity * n_mech; }

    int subsystem_dim(Subsystem s) const {
        switch (s) {
        case Subsystem::Qubit:
            if (!has_qubit) throw std::invalid_argument("HilbertSpace: no qubit factor");
            return 2;
        case Subsystem::Cavity: return n_cavity;
        case Subsystem::Mech: return n_mech;
        }
        throw std::invalid_argument("HilbertSpace: unknown subsystem");
    }

    /// Flat basis index of |q⟩|c⟩|m⟩ (q ignored when there is no qubit).
    int index(int q, int c, int m) const {
        if (c < 0 || c >= n_cavity || m < 0 || m >= n_mech)
            throw std::out_of_range("HilbertSpace::index: mode index out of range");
        if (has_qubit) {
            if (q < 0 || q > 1) throw std::out_of_range("HilbertSpace::index: qubit index out of range");
            return (q * n_cavity + c) * n_mech + m;
        }
        if (q != 0) throw std::out_of_range("HilbertSpace::index: qubit index on qubit-free space");
        return c * n_mech + m;
    }

    int cavity_of(int idx) const { return (idx / n_mech) % n_cavity; }
    int mech_of(int idx) const { return idx % n_mech; }
    int qubit_of(int idx) const { return has_qubit ? idx / (n_cavity * n_mech) : 0; }

    bool operator==(const HilbertSpace& o) const {
        return has_qubit == o.has_qubit && n_cavity == o.n_cavity && n_mech == o.n_mech;
    }
    bool operator!=(const HilbertSpace& o) const { return !(*this == o); }

    std::string describe() const {
        return (has_qubit ? "qubit x " : "") + std::to_string(n_cavity) + " cavity x " +
               std::to_string(n_mech) + " mech levels";
    }
};

} // namespace optomech
