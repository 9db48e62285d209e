// io.hpp — Deterministic JSON/CSV serialization and atomic file writes

#pragma once

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "optomech/open_dynamics.hpp"
#include "optomech/report.hpp"
#include "optomech/schrodinger.hpp"
#include "optomech/sideband.hpp"

namespace optomech {

using Json = nlohmann::json;

/// IEEE-754 double with 17 significant digits; round-trips bit-exactly.
inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

/// Writes content to path via a temp file and rename so readers never see a
/// partial file.
inline void write_file_atomic(const std::string& path, const std::string& content) {
    const std::filesystem::path target(path);
    if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
    const std::filesystem::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write to " + tmp.string());
        out << content;
    }
    std::filesystem::rename(tmp, target);
}

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

inline Json matrix_to_json(const OperatorMatrix& op) {
    Json j;
    Json dims = Json::array();
    if (op.space.has_qubit) dims.push_back(2);
    dims.push_back(op.space.n_cavity);
    dims.push_back(op.space.n_mech);
    j["dims"] = dims;
    Json entries = Json::array();
    for (int i = 0; i < op.dim(); ++i)
        for (int k = 0; k < op.dim(); ++k)
            entries.push_back(Json::array({op.m(i, k).real(), op.m(i, k).imag()}));
    j["entries"] = entries;
    return j;
}

inline OperatorMatrix matrix_from_json(const Json& j) {
    const auto dims = j.at("dims");
    bool has_qubit = false;
    int n_cavity = 0, n_mech = 0;
    if (dims.size() == 3) {
        has_qubit = true;
        n_cavity = dims[1].get<int>();
        n_mech = dims[2].get<int>();
    } else if (dims.size() == 2) {
        n_cavity = dims[0].get<int>();
        n_mech = dims[1].get<int>();
    } else {
        throw std::runtime_error("matrix_from_json: unexpected dims");
    }
    const HilbertSpace space(has_qubit, n_cavity, n_mech);
    Matrix m(space.dim(), space.dim());
    const auto& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != space.dim() * space.dim())
        throw std::runtime_error("matrix_from_json: entry count mismatch");
    int idx = 0;
    for (int i = 0; i < space.dim(); ++i)
        for (int k = 0; k < space.dim(); ++k, ++idx)
            m(i, k) = Complex(entries[idx][0].get<double>(), entries[idx][1].get<double>());
    return {space, std::move(m)};
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline Json report_to_json(const DeviationReport& r) {
    Json j;
    j["label"] = r.label;
    j["max_abs_deviation"] = r.max_abs_deviation;
    j["tolerance"] = std::isinf(r.tolerance) ? Json("informational") : Json(r.tolerance);
    j["passed"] = r.passed;
    j["notes"] = r.notes;
    return j;
}

inline Json suite_report_to_json(const std::string& suite,
                                 const std::vector<DeviationReport>& reports) {
    Json j;
    j["suite"] = suite;
    Json checks = Json::array();
    for (const auto& r : reports) checks.push_back(report_to_json(r));
    j["checks"] = checks;
    j["passed"] = all_passed(reports);
    return j;
}

// ---------------------------------------------------------------------------
// Time series CSV
// ---------------------------------------------------------------------------

inline std::string time_series_csv(const TimeSeries& series) {
    std::ostringstream out;
    out << "t,trace,min_eig";
    for (const auto& name : series.observable_names) out << ',' << name << "_re," << name << "_im";
    out << '\n';
    for (const auto& row : series.rows) {
        out << format_double(row.t) << ',' << format_double(row.trace) << ','
            << format_double(row.min_eig);
        for (const auto& e : row.expectations)
            out << ',' << format_double(e.real()) << ',' << format_double(e.imag());
        out << '\n';
    }
    return out.str();
}

inline std::string ket_series_csv(const KetSeries& series) {
    std::ostringstream out;
    out << "t,norm";
    for (const auto& name : series.observable_names) out << ',' << name << "_re," << name << "_im";
    out << '\n';
    for (const auto& row : series.rows) {
        out << format_double(row.t) << ',' << format_double(row.norm);
        for (const auto& e : row.expectations)
            out << ',' << format_double(e.real()) << ',' << format_double(e.imag());
        out << '\n';
    }
    return out.str();
}

inline std::string fidelity_csv(const FidelitySeries& series) {
    std::ostringstream out;
    out << "t,fidelity\n";
    for (const auto& pt : series.points)
        out << format_double(pt.t) << ',' << format_double(pt.fidelity) << '\n';
    return out.str();
}

} // namespace optomech
