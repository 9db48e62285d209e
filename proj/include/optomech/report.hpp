// report.hpp — Result record for one verified operator identity

#pragma once

#include <limits>
#include <string>
#include <vector>

namespace optomech {

/// Outcome of a single identity check on the buffered interior subspace.
/// passed ⇔ max_abs_deviation < tolerance. Informational entries use an
/// infinite tolerance and explain themselves in `notes`.
struct DeviationReport {
    std::string label;
    double max_abs_deviation = 0.0;
    double tolerance = 0.0;
    int buffer_cav = 0;
    int buffer_mech = 0;
    bool passed = false;
    std::string notes;

    static DeviationReport make(std::string label, double deviation, double tol,
                                int buf_cav = 0, int buf_mech = 0, std::string notes = {}) {
        DeviationReport r;
        r.label = std::move(label);
        r.max_abs_deviation = deviation;
        r.tolerance = tol;
        r.buffer_cav = buf_cav;
        r.buffer_mech = buf_mech;
        r.passed = deviation < tol;
        r.notes = std::move(notes);
        return r;
    }

    static DeviationReport informational(std::string label, double deviation, std::string notes) {
        return make(std::move(label), deviation, std::numeric_limits<double>::infinity(), 0, 0,
                    std::move(notes));
    }
};

inline bool all_passed(const std::vector<DeviationReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed) return false;
    return true;
}

} // namespace optomech
