// optomech_cli.cpp — Batch front-end: build models, run verification suites,
// propagate dynamics, and emit machine-readable reports.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "optomech/optomech.hpp"

namespace om = optomech;

namespace {

constexpr const char* kToolVersion = "0.1.0";

// exit codes: 0 pass, 2 verification failure, 1 usage/runtime error
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitVerifyFailed = 2;

std::string join(const std::vector<std::string>& items, const std::string& sep = ", ") {
    std::string out;
    for (size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

om::RunConfig load_config(const std::string& path) {
    if (path.empty()) return om::RunConfig{};
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file " + path);
    om::Json j = om::Json::parse(in);
    return om::RunConfig::from_json(j);
}

void apply_seed_env(om::RunConfig& config) {
    if (const char* env = std::getenv("OPTOMECH_SEED")) config.seed = std::stoull(env);
}

struct Sweep {
    std::string key;
    double start = 0.0, stop = 0.0;
    int count = 1;
};

std::optional<Sweep> parse_sweep(const std::string& text) {
    if (text.empty()) return std::nullopt;
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw std::runtime_error("--sweep expects KEY=START:STOP:N");
    Sweep s;
    s.key = text.substr(0, eq);
    const std::string rest = text.substr(eq + 1);
    const auto c1 = rest.find(':');
    const auto c2 = rest.find(':', c1 == std::string::npos ? 0 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::runtime_error("--sweep expects KEY=START:STOP:N");
    s.start = std::stod(rest.substr(0, c1));
    s.stop = std::stod(rest.substr(c1 + 1, c2 - c1 - 1));
    s.count = std::stoi(rest.substr(c2 + 1));
    if (s.count < 1) throw std::runtime_error("--sweep needs N >= 1");
    return s;
}

om::RunConfig config_with(const om::RunConfig& base, const std::string& key, double value) {
    om::Json j = base.to_json();
    if (!j.contains(key)) throw std::runtime_error("--sweep: unknown config key '" + key + "'");
    if (j.at(key).is_number_integer())
        j[key] = static_cast<long long>(std::llround(value));
    else
        j[key] = value;
    return om::RunConfig::from_json(j);
}

std::string sweep_out_path(const std::string& base, int index) {
    const auto dot = base.rfind('.');
    if (dot == std::string::npos) return base + "." + std::to_string(index);
    return base.substr(0, dot) + "." + std::to_string(index) + base.substr(dot);
}

std::string swap_extension(const std::string& path, const std::string& ext) {
    const auto dot = path.rfind('.');
    if (dot == std::string::npos) return path + ext;
    return path.substr(0, dot) + ext;
}

// ---------------------------------------------------------------------------
// Initial states
// ---------------------------------------------------------------------------

struct ModeSpec {
    enum class Kind { Fock, Coherent, Thermal } kind = Kind::Fock;
    int level = 0;
    om::Complex alpha{0.0, 0.0};
    double nbar = 0.0;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

ModeSpec parse_mode_spec(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::runtime_error("state spec part '" + text + "' needs kind:args");
    const std::string kind = text.substr(0, colon);
    const auto args = split(text.substr(colon + 1), ',');
    ModeSpec spec;
    if (kind == "fock") {
        spec.kind = ModeSpec::Kind::Fock;
        spec.level = std::stoi(args.at(0));
    } else if (kind == "coherent") {
        spec.kind = ModeSpec::Kind::Coherent;
        spec.alpha = om::Complex(std::stod(args.at(0)), args.size() > 1 ? std::stod(args.at(1)) : 0.0);
    } else if (kind == "thermal") {
        spec.kind = ModeSpec::Kind::Thermal;
        spec.nbar = std::stod(args.at(0));
    } else {
        throw std::runtime_error("unknown state kind '" + kind + "' (use fock|coherent|thermal)");
    }
    return spec;
}

/// Parses `--state`: per-mode constructors joined by ';' in mode order, or the
/// shorthand "fock:kc,km" for a two-mode Fock ket.
std::vector<ModeSpec> parse_state_spec(const std::string& text, int n_modes) {
    std::vector<ModeSpec> specs;
    if (text.rfind("fock:", 0) == 0 && text.find(';') == std::string::npos) {
        const auto args = split(text.substr(5), ',');
        if (static_cast<int>(args.size()) == n_modes) {
            for (const auto& a : args) {
                ModeSpec s;
                s.kind = ModeSpec::Kind::Fock;
                s.level = std::stoi(a);
                specs.push_back(s);
            }
            return specs;
        }
    }
    for (const auto& part : split(text, ';')) specs.push_back(parse_mode_spec(part));
    if (static_cast<int>(specs.size()) != n_modes)
        throw std::runtime_error("state spec has " + std::to_string(specs.size()) +
                                 " mode(s), expected " + std::to_string(n_modes));
    return specs;
}

bool any_thermal(const std::vector<ModeSpec>& specs) {
    for (const auto& s : specs)
        if (s.kind == ModeSpec::Kind::Thermal) return true;
    return false;
}

om::Vector mode_ket(const ModeSpec& spec, int dim) {
    switch (spec.kind) {
    case ModeSpec::Kind::Fock: return om::fock_ket(dim, spec.level);
    case ModeSpec::Kind::Coherent:
        return om::displacement_matrix_expm(dim, spec.alpha) * om::fock_ket(dim, 0);
    case ModeSpec::Kind::Thermal: break;
    }
    throw std::runtime_error("thermal state is not a ket");
}

om::Matrix mode_density(const ModeSpec& spec, int dim) {
    if (spec.kind == ModeSpec::Kind::Thermal) return om::thermal_density_matrix(dim, spec.nbar);
    const om::Vector psi = mode_ket(spec, dim);
    return psi * psi.adjoint();
}

om::Vector product_ket(const std::vector<ModeSpec>& specs, const std::vector<int>& dims) {
    om::Vector psi = mode_ket(specs[0], dims[0]);
    for (size_t k = 1; k < specs.size(); ++k)
        psi = Eigen::kroneckerProduct(psi, mode_ket(specs[k], dims[k])).eval();
    return psi;
}

om::Matrix product_density(const std::vector<ModeSpec>& specs, const std::vector<int>& dims) {
    om::Matrix rho = mode_density(specs[0], dims[0]);
    for (size_t k = 1; k < specs.size(); ++k)
        rho = Eigen::kroneckerProduct(rho, mode_density(specs[k], dims[k])).eval();
    return rho;
}

// ---------------------------------------------------------------------------
// Observables
// ---------------------------------------------------------------------------

std::vector<std::pair<std::string, om::Matrix>> observables_on_space(const om::RunConfig& config,
                                                                     const om::HilbertSpace& space) {
    const auto l = om::ladder_operators(space);
    std::vector<std::pair<std::string, om::Matrix>> obs;
    for (const auto& name : config.observables) {
        if (name == "n_a") obs.emplace_back(name, l.n_a.m);
        else if (name == "n_b") obs.emplace_back(name, l.n_b.m);
        else if (name == "x_b") obs.emplace_back(name, (l.b + l.bdag).m);
        else if (name == "sz") obs.emplace_back(name, om::pauli_operators(space).sz.m);
    }
    return obs;
}

std::vector<std::pair<std::string, om::Matrix>> observables_on_mode(const om::RunConfig& config,
                                                                    int dim) {
    std::vector<std::pair<std::string, om::Matrix>> obs;
    const om::Matrix b = om::annihilation_matrix(dim);
    for (const auto& name : config.observables) {
        if (name == "n_b") obs.emplace_back(name, om::number_matrix(dim));
        else if (name == "x_b") obs.emplace_back(name, om::Matrix(b + b.adjoint()));
        else throw std::runtime_error("observable '" + name + "' needs a cavity factor (inconsistent dims)");
    }
    return obs;
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

int cmd_build(const om::RunConfig& config, const std::string& model, const std::string& out) {
    const auto& catalog = om::model_catalog();
    if (std::find(catalog.begin(), catalog.end(), model) == catalog.end()) {
        std::cerr << "unknown model '" << model << "'; valid models: " << join(catalog) << "\n";
        return kExitError;
    }
    const om::HilbertSpace space = config.space(om::model_needs_qubit(model));
    const om::OperatorMatrix h = om::build_model(model, config.params, space, 0.0);
    om::Json j = om::matrix_to_json(h);
    j["model"] = model;
    j["params"] = config.to_json();
    j["tool_version"] = kToolVersion;
    if (om::model_is_time_dependent(model)) j["evaluated_at_t"] = 0.0;
    om::write_file_atomic(out, j.dump(2) + "\n");
    std::cout << "wrote " << out << "\n";
    return kExitOk;
}

int cmd_verify(const om::RunConfig& config, const std::string& suite, const std::string& out) {
    const auto& catalog = om::suite_catalog();
    if (std::find(catalog.begin(), catalog.end(), suite) == catalog.end()) {
        std::cerr << "unknown suite '" << suite << "'; valid suites: " << join(catalog) << "\n";
        return kExitError;
    }
    om::SuiteOptions opts;
    opts.buffer_cav = config.buffer_cav;
    opts.buffer_mech = config.buffer_mech;
    opts.seed = config.seed;
    const auto reports = om::verify_suite(suite, config.params, config.space(false), opts);
    const om::Json j = om::suite_report_to_json(suite, reports);
    std::cout << j.dump(2) << "\n";
    if (!out.empty()) om::write_file_atomic(out, j.dump(2) + "\n");
    return om::all_passed(reports) ? kExitOk : kExitVerifyFailed;
}

bool is_generator_id(const std::string& id) {
    return id == "damped" || id == "master" || id == "displaced-master";
}

int cmd_evolve(const om::RunConfig& config, const std::string& id, const std::string& state_spec,
               const std::string& out) {
    om::PropagationOptions popts;
    popts.record_every = config.record_every;
    popts.eig_every = config.eig_every;

    if (id == "damped") {
        // free damped mechanical oscillator on the bare mechanical mode
        const auto specs = parse_state_spec(state_spec, 1);
        const om::Matrix rho0 = mode_density(specs[0], config.n_mech);
        const auto gen =
            om::free_damped_generator(config.n_mech, config.params.omega_m, config.params.gamma);
        const auto series = om::rk4_propagate(gen, rho0, config.t_max, config.dt,
                                              observables_on_mode(config, config.n_mech), popts);
        om::write_file_atomic(out, om::time_series_csv(series));
        std::cout << "wrote " << out << "\n";
        return kExitOk;
    }

    if (is_generator_id(id)) {
        const om::HilbertSpace space = config.space(false);
        const auto specs = parse_state_spec(state_spec, 2);
        const om::Matrix rho0 = product_density(specs, {space.n_cavity, space.n_mech});
        const om::LindbladGenerator gen = (id == "master")
                                              ? om::master_generator(config.params, space)
                                              : om::displaced_master_generator(config.params, space);
        const auto series = om::rk4_propagate(gen, rho0, config.t_max, config.dt,
                                              observables_on_space(config, space), popts);
        om::write_file_atomic(out, om::time_series_csv(series));
        std::cout << "wrote " << out << "\n";
        return kExitOk;
    }

    const auto& catalog = om::model_catalog();
    if (std::find(catalog.begin(), catalog.end(), id) == catalog.end()) {
        std::cerr << "unknown model/generator '" << id
                  << "'; valid: " << join(catalog) << ", damped, master, displaced-master\n";
        return kExitError;
    }

    const om::HilbertSpace space = config.space(om::model_needs_qubit(id));
    const int n_modes = space.has_qubit ? 3 : 2;
    const auto specs = parse_state_spec(state_spec, n_modes);
    if (any_thermal(specs))
        throw std::runtime_error("Hamiltonian evolution needs a pure state (no thermal modes)");
    std::vector<int> dims;
    if (space.has_qubit) dims.push_back(2);
    dims.push_back(space.n_cavity);
    dims.push_back(space.n_mech);
    om::Vector psi0 = product_ket(specs, dims);
    psi0.normalize();

    om::HamiltonianAction action;
    const om::ModelParams p = config.params;
    if (id == "cm") {
        action = om::h_cm_action(p, space);
    } else if (id == "pumped") {
        const om::Matrix h0 = om::h_standard(p, space).m;
        const auto l = om::ladder_operators(space);
        const om::Matrix v = (l.adag + l.a).m;
        action = [p, h0, v](double t, const om::Vector& psi, om::Vector& out_v) {
            out_v.noalias() = h0 * psi;
            out_v.noalias() += (p.Omega * std::cos(p.omega_p * t)) * (v * psi);
        };
    } else if (id == "pump-frame") {
        const om::Matrix h0 = om::h_c(p, space).m;
        const om::Matrix adag = om::ladder_operators(space).adag.m;
        action = [p, h0, adag](double t, const om::Vector& psi, om::Vector& out_v) {
            const om::Complex phase = 0.5 * p.Omega * std::exp(om::Complex(0.0, 2.0 * p.omega_p * t));
            out_v.noalias() = h0 * psi;
            out_v.noalias() += phase * (adag * psi);
            out_v.noalias() += std::conj(phase) * (adag.adjoint() * psi);
        };
    } else {
        action = om::dense_action(om::build_model(id, p, space).m);
    }

    om::KetPropagationOptions kopts;
    kopts.record_every = config.record_every;
    const auto series = om::rk4_schrodinger(action, psi0, config.t_max, config.dt,
                                            observables_on_space(config, space), kopts);
    om::write_file_atomic(out, om::ket_series_csv(series));
    std::cout << "wrote " << out << "\n";
    return kExitOk;
}

int cmd_sidebands(const om::RunConfig& config, const std::string& out) {
    const om::HilbertSpace space = config.space(false);
    const double alpha = config.params.alpha();
    const int s_max = std::max(config.params.s, 2);

    std::ostringstream csv;
    csv << "alpha,s,sign,band,coupling_magnitude\n";
    om::Json comparisons = om::Json::array();

    for (int s = 0; s <= s_max; ++s) {
        for (int sign : {+1, -1}) {
            om::ModelParams p = config.params;
            p.s = s;
            p.sideband_sign = sign;
            p.omega_p = p.omega_c - sign * s * p.omega_m;
            const om::SidebandSpec spec(p);
            const auto fourier = om::sideband_band_fourier(p, space, spec);
            for (size_t band = 0; band < fourier.magnitudes.size(); ++band)
                csv << om::format_double(alpha) << ',' << s << ',' << sign << ',' << band << ','
                    << om::format_double(fourier.magnitudes[band]) << '\n';

            const auto printed = om::sideband_band_printed(p, space, spec);
            double max_dev = 0.0;
            const int keep = space.n_mech - s - config.buffer_mech;
            for (int i = 0; i < keep; ++i)
                max_dev = std::max(max_dev,
                                   std::abs(fourier.magnitudes[i] - printed.magnitudes[i]));
            om::Json entry;
            entry["s"] = s;
            entry["sign"] = sign;
            entry["fourier_pairs_a_with"] = fourier.pairs_a_with_raising ? "raising" : "lowering";
            entry["printed_pairs_a_with"] = printed.pairs_a_with_raising ? "raising" : "lowering";
            entry["orientation_match"] =
                fourier.pairs_a_with_raising == printed.pairs_a_with_raising;
            entry["max_band_magnitude_deviation"] = max_dev;
            comparisons.push_back(entry);
            if (s == 0) break; // both signs coincide at s = 0
        }
    }

    om::Json report;
    report["alpha"] = alpha;
    report["Omega"] = config.params.Omega;
    report["comparisons"] = comparisons;
    report["tool_version"] = kToolVersion;

    om::write_file_atomic(out, csv.str());
    om::write_file_atomic(swap_extension(out, ".json"), report.dump(2) + "\n");
    std::cout << "wrote " << out << " and " << swap_extension(out, ".json") << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"optomech — truncated-Fock-space optomechanics toolkit"};
    app.require_subcommand(1);

    std::string config_path, model, suite, state_spec = "fock:0,0", out_path, sweep_text;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON config file");
        cmd->add_option("--out", out_path, "output path");
        cmd->add_option("--sweep", sweep_text, "KEY=START:STOP:N parameter sweep");
    };

    CLI::App* build = app.add_subcommand("build", "build a model matrix and write it as JSON");
    add_common(build);
    build->add_option("--model", model, "model id")->required();

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--config", config_path, "JSON config file");
    verify->add_option("--out", out_path, "optional JSON report path");
    verify->add_option("--suite", suite, "suite id")->required();

    CLI::App* evolve = app.add_subcommand("evolve", "propagate dynamics and write a CSV series");
    add_common(evolve);
    evolve->add_option("--model", model, "model or generator id")->required();
    evolve->add_option("--state", state_spec, "initial state spec");

    CLI::App* sidebands = app.add_subcommand("sidebands", "sideband coupling grid and orientation report");
    add_common(sidebands);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitError;
    }

    try {
        om::RunConfig config = load_config(config_path);
        apply_seed_env(config);

        const auto sweep = parse_sweep(sweep_text);
        auto run_once = [&](const om::RunConfig& c, const std::string& out) -> int {
            if (build->parsed()) return cmd_build(c, model, out.empty() ? "model.json" : out);
            if (verify->parsed()) return cmd_verify(c, suite, out);
            if (evolve->parsed()) return cmd_evolve(c, model, state_spec, out.empty() ? "evolve.csv" : out);
            if (sidebands->parsed()) return cmd_sidebands(c, out.empty() ? "sidebands.csv" : out);
            return kExitError;
        };

        if (!sweep) return run_once(config, out_path);
        if (verify->parsed()) {
            std::cerr << "--sweep is not supported for verify\n";
            return kExitError;
        }
        int worst = kExitOk;
        for (int k = 0; k < sweep->count; ++k) {
            const double value =
                sweep->count == 1
                    ? sweep->start
                    : sweep->start + (sweep->stop - sweep->start) * k / (sweep->count - 1);
            const om::RunConfig c = config_with(config, sweep->key, value);
            const std::string base = out_path.empty() ? "sweep-out" : out_path;
            worst = std::max(worst, run_once(c, sweep_out_path(base, k)));
        }
        return worst;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
