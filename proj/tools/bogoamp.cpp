// bogoamp: command-line front end for the Bogoliubov-amplifier toolkit.
//
// Subcommands build models from flags or a key=value config file, run
// frequency/power sweeps, and emit deterministic CSV or JSON artifacts:
// identical configs produce byte-identical files.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bogoamp/analysis.hpp"
#include "bogoamp/closed_forms.hpp"
#include "bogoamp/depletion.hpp"
#include "bogoamp/models.hpp"
#include "bogoamp/sweep.hpp"
#include "bogoamp/verification.hpp"

namespace {

using bogoamp::QuadraticModel;
using bogoamp::Selector;
using json = nlohmann::ordered_json;
namespace cf = bogoamp::closed_forms;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

// 12 significant digits, C locale; the one formatting used everywhere.
std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Table cell: a number or a not-applicable marker.
struct Cell {
    std::optional<double> value;
    Cell() = default;
    Cell(double v) : value(v) {}
    static Cell na() { return Cell(); }
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, std::string>> extras;  // comment lines
};

// Key=value echo of the normalized configuration, sorted for determinism.
std::string config_echo(const std::map<std::string, std::string>& cfg) {
    std::string line;
    for (const auto& [k, v] : cfg) {
        if (!line.empty()) line += " ";
        line += k + "=" + v;
    }
    return line;
}

void write_table(const Table& table, const std::map<std::string, std::string>& cfg,
                 const std::string& format, const std::string& out_path) {
    std::ostringstream body;
    if (format == "csv") {
        body << "# config: " << config_echo(cfg) << "\n";
        for (const auto& [k, v] : table.extras) body << "# " << k << ": " << v << "\n";
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            body << (c ? "," : "") << table.columns[c];
        }
        body << "\n";
        for (const auto& row : table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                body << (c ? "," : "") << (row[c].value ? fmt(*row[c].value) : "na");
            }
            body << "\n";
        }
    } else {
        json doc;
        doc["config"] = json::object();
        for (const auto& [k, v] : cfg) doc["config"][k] = v;
        for (const auto& [k, v] : table.extras) doc[k] = v;
        doc["data"] = json::array();
        for (const auto& row : table.rows) {
            json rec = json::object();
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (row[c].value) {
                    rec[table.columns[c]] = json::parse(fmt(*row[c].value));
                } else {
                    rec[table.columns[c]] = nullptr;
                }
            }
            doc["data"].push_back(std::move(rec));
        }
        body << doc.dump(2) << "\n";
    }
    if (out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw bogoamp::StructuralError("cannot open output file: " + out_path);
        file << body.str();
    }
}

// ---------------------------------------------------------------------------
// model construction shared by gain-sweep and model-dump

struct ModelOptions {
    std::string model = "odba";
    double gain_db = 20.0;
    double kappa1 = 1.0;
    double kappa2 = 1.0;
    std::string match = "impedance";
    // explicit couplings (used when gain_db is not given)
    double nu = -1.0, delta = -1.0, g = -1.0, g1 = -1.0, g2 = -1.0;
    bool gain_db_set = false;
    std::string units = "kappa";

    // All rates are normalized to kappa1 = 1 internally; in MHz mode the
    // frequency axis is scaled back on output.
    double unit_scale() const { return units == "MHz" ? kappa1 : 1.0; }
};

void add_model_options(CLI::App* cmd, ModelOptions& opt) {
    cmd->add_option("--model", opt.model, "Amplifier family")
        ->check(CLI::IsMember({"dpa", "odba", "oiba", "qnd", "detuned2"}));
    cmd->add_option("--gain-db", opt.gain_db, "Target zero-frequency power gain (dB)");
    cmd->add_option("--kappa1", opt.kappa1, "Decay rate of port 1");
    cmd->add_option("--kappa2", opt.kappa2, "Decay rate of port 2");
    cmd->add_option("--match", opt.match, "Asymmetric-decay matching condition")
        ->check(CLI::IsMember({"impedance", "imbalance"}));
    cmd->add_option("--nu", opt.nu, "Parametric drive amplitude (dpa)");
    cmd->add_option("--delta", opt.delta, "Detuning (dpa, detuned2)");
    cmd->add_option("--g", opt.g, "Coupling rate (qnd, detuned2)");
    cmd->add_option("--g1", opt.g1, "Squeezing coupling (oiba)");
    cmd->add_option("--g2", opt.g2, "Conversion coupling (oiba)");
    cmd->add_option("--units", opt.units, "Unit of input rates")
        ->check(CLI::IsMember({"kappa", "MHz"}));
}

struct BuiltModel {
    QuadraticModel model;
    Selector channel;     // canonical amplified channel
    double g0_nominal;    // for --compare dpa
};

BuiltModel build_model(const CLI::App* cmd, ModelOptions& opt) {
    opt.gain_db_set = cmd->count("--gain-db") > 0;
    const double scale = opt.unit_scale();
    if (!(opt.kappa1 > 0.0)) throw bogoamp::StructuralError("kappa1 must be positive");
    const double k1 = opt.kappa1 / scale;
    const double k2 = opt.kappa2 / scale;
    auto scaled = [&](double v) { return v / scale; };

    const Selector refl_q{{0, -M_PI / 4.0}, {0, -M_PI / 4.0}};
    const Selector refl_xp{{0, 0.0}, {0, M_PI / 2.0}};
    const Selector trans_21{{1, 0.0}, {0, M_PI / 2.0}};
    const Selector trans_12{{0, 0.0}, {1, M_PI / 2.0}};

    if (opt.model == "dpa") {
        double nu = opt.nu >= 0.0 ? scaled(opt.nu)
                                  : cf::dpa_drive_for_gain(
                                        std::pow(10.0, opt.gain_db / 10.0), k1);
        const double delta = opt.delta >= 0.0 ? scaled(opt.delta) : 0.0;
        QuadraticModel m = bogoamp::make_dpa({delta, nu, k1});
        const double amp = (0.5 * k1 + nu) / (0.5 * k1 - nu);
        return {std::move(m), refl_q, amp * amp};
    }
    if (opt.model == "odba") {
        const auto sol = bogoamp::make_odba_for_gain(k1, opt.gain_db);
        return {bogoamp::make_dpa(sol.params), refl_xp,
                std::pow(10.0, opt.gain_db / 10.0)};
    }
    if (opt.model == "oiba") {
        if (opt.g1 >= 0.0 && opt.g2 >= 0.0 && !opt.gain_db_set) {
            QuadraticModel m =
                bogoamp::make_oiba({scaled(opt.g1), scaled(opt.g2), k1, k2});
            const double g0 = std::norm(transfer_element(m, trans_21, 0.0));
            return {std::move(m), trans_21, g0};
        }
        const auto cond = opt.match == "impedance"
                              ? bogoamp::MatchCondition::impedance
                              : bogoamp::MatchCondition::imbalance;
        const auto sol = bogoamp::make_oiba_for_gain(k1, k2, opt.gain_db, cond);
        return {bogoamp::make_oiba(sol.params), trans_21,
                std::exp(4.0 * sol.squeeze_r)};
    }
    if (opt.model == "qnd") {
        const double g = opt.g >= 0.0
                             ? scaled(opt.g)
                             : (k1 / 8.0) * std::pow(10.0, opt.gain_db / 20.0);
        QuadraticModel m = bogoamp::make_qnd(g, k1);
        return {std::move(m), trans_12, std::pow(8.0 * g / k1, 2.0)};
    }
    if (opt.model == "detuned2") {
        double delta, g;
        if (opt.delta >= 0.0 && opt.g >= 0.0 && !opt.gain_db_set) {
            delta = scaled(opt.delta);
            g = scaled(opt.g);
        } else {
            // matched mode energy kappa/2; reflection power gain cosh^2 2r
            const double r =
                std::acosh(std::pow(10.0, opt.gain_db / 20.0)) / 2.0;
            delta = 0.5 * k1 * std::cosh(2.0 * r);
            g = 0.5 * k1 * std::sinh(2.0 * r);
        }
        QuadraticModel m = bogoamp::make_detuned_two_mode(delta, g, k1);
        const double g0 = std::norm(transfer_element(m, refl_xp, 0.0));
        return {std::move(m), refl_xp, g0};
    }
    throw bogoamp::StructuralError("unknown model: " + opt.model);
}

std::map<std::string, std::string> model_config(const ModelOptions& opt) {
    std::map<std::string, std::string> cfg;
    cfg["model"] = opt.model;
    cfg["kappa1"] = fmt(opt.kappa1);
    cfg["kappa2"] = fmt(opt.kappa2);
    cfg["units"] = opt.units;
    if (opt.model == "oiba") cfg["match"] = opt.match;
    if (opt.nu >= 0.0) cfg["nu"] = fmt(opt.nu);
    if (opt.delta >= 0.0) cfg["delta"] = fmt(opt.delta);
    if (opt.g >= 0.0) cfg["g"] = fmt(opt.g);
    if (opt.g1 >= 0.0) cfg["g1"] = fmt(opt.g1);
    if (opt.g2 >= 0.0) cfg["g2"] = fmt(opt.g2);
    if (opt.gain_db_set || (opt.nu < 0 && opt.g < 0 && opt.g1 < 0)) {
        cfg["gain_db"] = fmt(opt.gain_db);
    }
    return cfg;
}

// ---------------------------------------------------------------------------
// gain-sweep

struct GainSweepOptions {
    ModelOptions model;
    double omega_min = -5.0, omega_max = 5.0;
    int omega_points = 2001;
    std::string compare;
    std::string format = "csv";
    std::string out;
};

int cmd_gain_sweep(const CLI::App* cmd, GainSweepOptions& opt) {
    if (opt.omega_points < 2 || !(opt.omega_min < opt.omega_max)) {
        throw bogoamp::StructuralError("empty sweep range");
    }
    BuiltModel built = build_model(cmd, opt.model);
    const double scale = opt.model.unit_scale();
    std::vector<double> grid(opt.omega_points);
    for (int i = 0; i < opt.omega_points; ++i) {
        grid[i] = (opt.omega_min +
                   (opt.omega_max - opt.omega_min) * i / (opt.omega_points - 1)) /
                  scale;
    }
    const bogoamp::GainProfile profile =
        bogoamp::gain_profile(built.model, built.channel, grid);

    Table table;
    table.columns = {"omega", "gain_db", "gain_linear"};
    std::optional<bogoamp::GainProfile> ref;
    if (opt.compare == "dpa") {
        const double k1 = opt.model.kappa1 / scale;
        QuadraticModel dpa = bogoamp::make_dpa(
            {0.0, cf::dpa_drive_for_gain(built.g0_nominal, k1), k1});
        ref = bogoamp::gain_profile(dpa, {{0, -M_PI / 4.0}, {0, -M_PI / 4.0}}, grid);
        table.columns.push_back("dpa_gain_db");
        table.columns.push_back("dpa_gain_linear");
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::vector<Cell> row{grid[i] * scale, 10.0 * std::log10(profile.gains[i]),
                              profile.gains[i]};
        if (ref) {
            row.emplace_back(10.0 * std::log10(ref->gains[i]));
            row.emplace_back(ref->gains[i]);
        }
        table.rows.push_back(std::move(row));
    }

    auto cfg = model_config(opt.model);
    cfg["omega_min"] = fmt(opt.omega_min);
    cfg["omega_max"] = fmt(opt.omega_max);
    cfg["omega_points"] = fmt(opt.omega_points);
    cfg["format"] = opt.format;
    if (!opt.compare.empty()) cfg["compare"] = opt.compare;
    write_table(table, cfg, opt.format, opt.out);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// squeeze-sweep: amplification bandwidth, squeezing bandwidth and the
// single-mode reference bandwidth versus gain.

struct SqueezeSweepOptions {
    double kappa1 = 1.0;
    std::string units = "kappa";
    double gain_min_db = 0.0, gain_max_db = 30.0;
    int gain_points = 31;
    std::string format = "csv";
    std::string out;
};

int cmd_squeeze_sweep(SqueezeSweepOptions& opt) {
    if (opt.gain_points < 1 || !(opt.gain_min_db <= opt.gain_max_db)) {
        throw bogoamp::StructuralError("empty sweep range");
    }
    if (!(opt.kappa1 > 0.0)) throw bogoamp::StructuralError("kappa1 must be positive");
    const double scale = opt.units == "MHz" ? opt.kappa1 : 1.0;
    const double k1 = opt.kappa1 / scale;

    Table table;
    table.columns = {"gain_db", "g0", "d_amp", "d_sq", "d_single"};
    for (int i = 0; i < opt.gain_points; ++i) {
        const double db =
            opt.gain_points == 1
                ? opt.gain_min_db
                : opt.gain_min_db +
                      (opt.gain_max_db - opt.gain_min_db) * i / (opt.gain_points - 1);
        const double g0 = std::pow(10.0, db / 10.0);
        std::vector<Cell> row{db, g0};
        if (db <= 0.0) {
            row.push_back(Cell::na());
            row.push_back(Cell::na());
            row.push_back(Cell::na());
        } else {
            const QuadraticModel oiba =
                bogoamp::make_oiba(bogoamp::make_oiba_for_gain(k1, k1, db).params);
            const auto grid = bogoamp::default_omega_grid(k1);
            const auto bw = bogoamp::fwhm_bandwidth(
                bogoamp::gain_profile(oiba, {{1, 0.0}, {0, M_PI / 2.0}}, grid));
            row.emplace_back(bw.fwhm * scale);
            if (g0 > 2.0) {
                row.emplace_back(
                    bogoamp::squeezing_bandwidth(bogoamp::squeezing_spectrum(oiba, grid)) *
                    scale);
            } else {
                row.push_back(Cell::na());
            }
            const QuadraticModel dpa =
                bogoamp::make_dpa({0.0, cf::dpa_drive_for_gain(g0, k1), k1});
            const auto dpa_bw = bogoamp::fwhm_bandwidth(bogoamp::gain_profile(
                dpa, {{0, -M_PI / 4.0}, {0, -M_PI / 4.0}}, grid));
            row.emplace_back(dpa_bw.fwhm * scale);
        }
        table.rows.push_back(std::move(row));
    }

    std::map<std::string, std::string> cfg;
    cfg["kappa1"] = fmt(opt.kappa1);
    cfg["units"] = opt.units;
    cfg["gain_min_db"] = fmt(opt.gain_min_db);
    cfg["gain_max_db"] = fmt(opt.gain_max_db);
    cfg["gain_points"] = fmt(opt.gain_points);
    cfg["format"] = opt.format;
    write_table(table, cfg, opt.format, opt.out);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// depletion / compression

struct DepletionOptions {
    double gamma1 = 12.0, gamma2 = 12.0;
    double g1 = 0.014, g2 = 0.014;
    double kappa1 = 1.0;
    double gain_db = 20.0;
    std::string input_port = "cavity2";
    std::string units = "kappa";
    double power_min = 1e-5, power_max = 10.0;
    int power_points = 60;
    std::string format = "csv";
    std::string out;
};

bogoamp::PumpParams pump_params(const DepletionOptions& opt) {
    const double scale = opt.units == "MHz" ? opt.kappa1 : 1.0;
    return {opt.gamma1 / scale, opt.gamma2 / scale, opt.g1 / scale,
            opt.g2 / scale,     opt.kappa1 / scale, opt.gain_db};
}

bogoamp::InputPort parse_port(const std::string& name) {
    return name == "cavity1" ? bogoamp::InputPort::cavity1
                             : bogoamp::InputPort::cavity2;
}

std::map<std::string, std::string> depletion_config(const DepletionOptions& opt) {
    std::map<std::string, std::string> cfg;
    cfg["gamma1"] = fmt(opt.gamma1);
    cfg["gamma2"] = fmt(opt.gamma2);
    cfg["g1"] = fmt(opt.g1);
    cfg["g2"] = fmt(opt.g2);
    cfg["kappa1"] = fmt(opt.kappa1);
    cfg["gain_db"] = fmt(opt.gain_db);
    cfg["input_port"] = opt.input_port;
    cfg["units"] = opt.units;
    cfg["format"] = opt.format;
    return cfg;
}

int cmd_depletion(DepletionOptions& opt) {
    if (opt.power_points < 2 || !(opt.power_min < opt.power_max) ||
        !(opt.power_min > 0.0)) {
        throw bogoamp::StructuralError("empty power sweep range");
    }
    const bogoamp::PumpParams pump = pump_params(opt);
    const bogoamp::InputPort port = parse_port(opt.input_port);
    const auto two_pump = bogoamp::derive_drive(pump, bogoamp::DriveScheme::two_pump);
    const auto one_pump = bogoamp::derive_drive(pump, bogoamp::DriveScheme::single_pump);

    Table table;
    table.columns = {"input_power_rel", "oiba_gbar1", "oiba_gbar2", "oiba_delta_c",
                     "oiba_gain_db",    "oiba_converged", "pa_gbar1", "pa_gain_db",
                     "pa_converged"};
    int converged = 0;
    for (int i = 0; i < opt.power_points; ++i) {
        const double x = opt.power_min *
                         std::pow(opt.power_max / opt.power_min,
                                  static_cast<double>(i) / (opt.power_points - 1));
        const bogoamp::SignalInput s_oiba{
            std::sqrt(x * two_pump.pump_photons.first), 0.0, port};
        const bogoamp::SignalInput s_pa{
            std::sqrt(x * one_pump.pump_photons.first), 0.0, port};
        const auto oiba =
            bogoamp::solve_selfconsistent(pump, s_oiba, bogoamp::DriveScheme::two_pump);
        const auto pa =
            bogoamp::solve_selfconsistent(pump, s_pa, bogoamp::DriveScheme::single_pump);
        converged += (oiba.converged && pa.converged) ? 1 : 0;
        table.rows.push_back({x, oiba.gamma_eff.first / pump.gamma1,
                              oiba.gamma_eff.second / pump.gamma2, oiba.delta_c,
                              oiba.g_eff_db, oiba.converged ? 1.0 : 0.0,
                              pa.gamma_eff.first / pump.gamma1, pa.g_eff_db,
                              pa.converged ? 1.0 : 0.0});
    }
    const auto comp_oiba = bogoamp::compression_point(
        pump, {1.0, 0.0, port}, bogoamp::DriveScheme::two_pump);
    const auto comp_pa = bogoamp::compression_point(
        pump, {1.0, 0.0, port}, bogoamp::DriveScheme::single_pump);
    table.extras.emplace_back("compression_oiba_rel", fmt(comp_oiba.input_power_rel));
    table.extras.emplace_back("compression_oiba_abs", fmt(comp_oiba.input_power_abs));
    table.extras.emplace_back("compression_pa_rel", fmt(comp_pa.input_power_rel));
    table.extras.emplace_back("compression_pa_abs", fmt(comp_pa.input_power_abs));

    auto cfg = depletion_config(opt);
    cfg["power_min"] = fmt(opt.power_min);
    cfg["power_max"] = fmt(opt.power_max);
    cfg["power_points"] = fmt(opt.power_points);
    write_table(table, cfg, opt.format, opt.out);
    // non-converged rows are flagged in the table; fail only if widespread
    return 10 * converged >= 9 * opt.power_points ? kExitOk : kExitNumerical;
}

int cmd_compression(DepletionOptions& opt) {
    const bogoamp::PumpParams pump = pump_params(opt);
    const bogoamp::InputPort port = parse_port(opt.input_port);
    Table table;
    table.columns = {"amplifier", "input_power_rel", "input_power_abs", "gain_db"};
    const auto oiba = bogoamp::compression_point(pump, {1.0, 0.0, port},
                                                 bogoamp::DriveScheme::two_pump);
    const auto pa = bogoamp::compression_point(pump, {1.0, 0.0, port},
                                               bogoamp::DriveScheme::single_pump);
    // amplifier column encoded in extras to keep cells numeric
    table.columns = {"input_power_rel", "input_power_abs", "gain_db"};
    table.extras.emplace_back("row_order", "oiba,pa");
    table.rows.push_back({oiba.input_power_rel, oiba.input_power_abs, oiba.gain_db});
    table.rows.push_back({pa.input_power_rel, pa.input_power_abs, pa.gain_db});
    write_table(table, depletion_config(opt), opt.format, opt.out);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify / model-dump

int cmd_verify(bool perturb) {
    bogoamp::verification::Options vo;
    vo.perturb_convention = perturb || std::getenv("BOGOAMP_VERIFY_PERTURB");
    const auto results = bogoamp::verification::run_all(vo);
    const bool all = bogoamp::verification::report(results, std::cout);
    return all ? kExitOk : 1;
}

json complex_matrix_json(const bogoamp::Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back({json::parse(fmt(m(i, j).real())),
                           json::parse(fmt(m(i, j).imag()))});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

int cmd_model_dump(const CLI::App* cmd, ModelOptions& opt, const std::string& out) {
    BuiltModel built = build_model(cmd, opt);
    json doc;
    doc["config"] = json::object();
    for (const auto& [k, v] : model_config(opt)) doc["config"][k] = v;
    doc["h_matrix"] = complex_matrix_json(built.model.h_matrix());
    const auto dyn = bogoamp::build_dynamical_matrix(built.model);
    doc["a_matrix"] = complex_matrix_json(dyn.a_matrix);
    const auto report = bogoamp::stability(built.model);
    json eig = json::array();
    for (const auto& ev : report.eigenvalues) {
        eig.push_back({json::parse(fmt(ev.real())), json::parse(fmt(ev.imag()))});
    }
    doc["eigenvalues"] = eig;
    doc["stability"] = {{"max_real_part", json::parse(fmt(report.max_real_part))},
                        {"stable", report.stable},
                        {"hamiltonian_diagonalizable",
                         report.hamiltonian_diagonalizable}};
    try {
        const auto form = bogoamp::bogoliubov_diagonalize(built.model);
        const char* kind = form.kind == bogoamp::BogoliubovKind::single_mode_detuned
                               ? "single_mode_detuned"
                               : form.kind == bogoamp::BogoliubovKind::two_mode_detuned
                                     ? "two_mode_detuned"
                                     : "imbalanced_hopping";
        doc["bogoliubov_form"] = {{"squeeze_r", json::parse(fmt(form.squeeze_r))},
                                  {"mode_energy", json::parse(fmt(form.mode_energy))},
                                  {"kind", kind}};
    } catch (const bogoamp::Error& e) {
        doc["bogoliubov_form"] = {{"error", e.what()}};
    }
    const std::string body = doc.dump(2) + "\n";
    if (out.empty()) {
        std::cout << body;
    } else {
        std::ofstream file(out, std::ios::binary);
        if (!file) throw bogoamp::StructuralError("cannot open output file: " + out);
        file << body;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum-limited parametric amplifier toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a key=value config file");
    app.allow_config_extras(false);

    GainSweepOptions gain_opt;
    CLI::App* gain_cmd = app.add_subcommand(
        "gain-sweep", "Power gain versus signal frequency");
    add_model_options(gain_cmd, gain_opt.model);
    gain_cmd->add_option("--omega-min", gain_opt.omega_min, "Sweep start");
    gain_cmd->add_option("--omega-max", gain_opt.omega_max, "Sweep end");
    gain_cmd->add_option("--omega-points", gain_opt.omega_points, "Grid size");
    gain_cmd->add_option("--compare", gain_opt.compare,
                         "Add a reference curve at equal gain")
        ->check(CLI::IsMember({"dpa"}));
    gain_cmd->add_option("--format", gain_opt.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    gain_cmd->add_option("--out", gain_opt.out, "Output path (default stdout)");

    SqueezeSweepOptions squeeze_opt;
    CLI::App* squeeze_cmd = app.add_subcommand(
        "squeeze-sweep", "Amplification and squeezing bandwidths versus gain");
    squeeze_cmd->add_option("--kappa1", squeeze_opt.kappa1, "Decay rate");
    squeeze_cmd->add_option("--units", squeeze_opt.units, "Unit of input rates")
        ->check(CLI::IsMember({"kappa", "MHz"}));
    squeeze_cmd->add_option("--gain-min-db", squeeze_opt.gain_min_db, "Grid start");
    squeeze_cmd->add_option("--gain-max-db", squeeze_opt.gain_max_db, "Grid end");
    squeeze_cmd->add_option("--gain-points", squeeze_opt.gain_points, "Grid size");
    squeeze_cmd->add_option("--format", squeeze_opt.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    squeeze_cmd->add_option("--out", squeeze_opt.out, "Output path (default stdout)");

    DepletionOptions dep_opt;
    CLI::App* dep_cmd = app.add_subcommand(
        "depletion", "Self-consistent pump depletion versus input power");
    CLI::App* comp_cmd = app.add_subcommand(
        "compression", "1 dB compression points of both amplifier schemes");
    for (CLI::App* cmd : {dep_cmd, comp_cmd}) {
        cmd->add_option("--gamma1", dep_opt.gamma1, "Pump-1 damping");
        cmd->add_option("--gamma2", dep_opt.gamma2, "Pump-2 damping");
        cmd->add_option("--g1", dep_opt.g1, "3-wave gain coupling");
        cmd->add_option("--g2", dep_opt.g2, "3-wave conversion coupling");
        cmd->add_option("--kappa1", dep_opt.kappa1, "Signal/idler decay");
        cmd->add_option("--gain-db", dep_opt.gain_db, "Target gain (dB)");
        cmd->add_option("--input-port", dep_opt.input_port, "Signal input cavity")
            ->check(CLI::IsMember({"cavity1", "cavity2"}));
        cmd->add_option("--units", dep_opt.units, "Unit of input rates")
            ->check(CLI::IsMember({"kappa", "MHz"}));
        cmd->add_option("--format", dep_opt.format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", dep_opt.out, "Output path (default stdout)");
    }
    dep_cmd->add_option("--power-min", dep_opt.power_min, "Sweep start (X^2/n_in)");
    dep_cmd->add_option("--power-max", dep_opt.power_max, "Sweep end (X^2/n_in)");
    dep_cmd->add_option("--power-points", dep_opt.power_points, "Grid size");

    bool perturb = false;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "Run the cross-module invariant suite");
    verify_cmd->add_flag("--perturb-convention", perturb,
                         "Negative control: perturb one analytic reference")
        ->group("");

    ModelOptions dump_opt;
    std::string dump_out;
    CLI::App* dump_cmd = app.add_subcommand(
        "model-dump", "Print matrices, eigenvalues and normal form as JSON");
    add_model_options(dump_cmd, dump_opt);
    dump_cmd->add_option("--out", dump_out, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (gain_cmd->parsed()) return cmd_gain_sweep(gain_cmd, gain_opt);
        if (squeeze_cmd->parsed()) return cmd_squeeze_sweep(squeeze_opt);
        if (dep_cmd->parsed()) return cmd_depletion(dep_opt);
        if (comp_cmd->parsed()) return cmd_compression(dep_opt);
        if (verify_cmd->parsed()) return cmd_verify(perturb);
        if (dump_cmd->parsed()) return cmd_model_dump(dump_cmd, dump_opt, dump_out);
    } catch (const bogoamp::StructuralError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const bogoamp::Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}
