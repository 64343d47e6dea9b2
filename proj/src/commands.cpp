#include "hcg/commands.hpp"
#include "hcg/continuum.hpp"
#include "hcg/csv.hpp"
#include "hcg/decoherence.hpp"
#include "hcg/ensemble.hpp"
#include "hcg/errors.hpp"
#include "hcg/parallel.hpp"
#include "hcg/sweeps.hpp"
#include "hcg/verify.hpp"

#include <CLI11.hpp>
#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

namespace hcg {

namespace {

const std::set<std::string> commands{"fig3", "fig4", "ensemble", "wave", "verify", "report"};

RunConfig defaults_for(const std::string& command)
{
    RunConfig c;
    c.command = command;
    if (command == "ensemble") {
        c.groups = 16;
        c.group_size = 8;
        c.clump_size = 8;
        c.L = {2};
        c.cutoff = 4;
    } else if (command == "verify") {
        c.groups = 16;
        c.L = {1, 2, 4};
    } else if (command == "report") {
        c.units = Units::si;
        c.groups = 1000;
        c.group_size = 1000000;
        c.L = {10};
        c.d = {1, 10, 100, 1000, 10000, 100000, 1000000};
    }
    return c;
}

template <class T>
std::string join(const std::vector<T>& v)
{
    std::ostringstream os;
    os.precision(17);
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

} // namespace

void RunConfig::validate() const
{
    if (!commands.count(command)) throw config_error("unknown command '" + command + "'");
    if (L.empty()) throw config_error("L list is empty");
    if (samples < 1) throw config_error("sample count must be at least 1");
    if (realizations < 0) throw config_error("realization count must be non-negative");
    if (d_max < 1 || d_points < 1) throw config_error("d grid must be nonempty");
    for (long x : d)
        if (x < 1) throw config_error("d values must be positive");
    for (long x : L)
        if (x < 0 || 2 * x > groups) throw config_error("L = " + std::to_string(x) + " outside [0, M/2]");
    if (groups <= 0 || groups % 2) throw config_error("number of groups must be positive and even");
    if (!(mass > 0 && omega > 0 && spacing > 0 && temperature > 0)) throw config_error("physical constants must be positive");
    if (time_average != "as_written" && time_average != "unit_factor" && time_average != "exact")
        throw config_error("time_average must be as_written, unit_factor or exact");
    if (wave_route != "chain" && wave_route != "lattice") throw config_error("wave route must be chain or lattice");
    if (units == Units::si && command != "report")
        throw config_error("SI units are only available for the report command");
    if (wave_groups.size() < 2 && command == "wave") throw config_error("wave needs at least two group counts");
}

std::vector<long> RunConfig::d_grid() const
{
    if (!d.empty()) {
        std::vector<long> g = d;
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end()), g.end());
        return g;
    }
    std::vector<long> g;
    const double top = std::log10(double(d_max));
    for (long i = 0; i < d_points; ++i) {
        const double e = d_points == 1 ? top : top * double(i) / double(d_points - 1);
        g.push_back(std::max(1L, std::lround(std::pow(10.0, e))));
    }
    g.push_back(2);
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

std::vector<std::string> RunConfig::echo() const
{
    std::vector<std::string> e;
    e.push_back("command: " + command);
    if (!config_path.empty()) e.push_back("config: " + config_path);
    e.push_back("seed: " + std::to_string(seed) + "  workers: " + std::to_string(workers));
    e.push_back(std::string("units: ") + (units == Units::si ? "si" : "natural (mu = omega = k_B T = 1)"));
    e.push_back("geometry: groups=" + std::to_string(groups) + " group_size=" + std::to_string(group_size) +
                " clump_size=" + std::to_string(clump_size) + " mass=" + CsvWriter::num(mass) +
                " omega=" + CsvWriter::num(omega) + " spacing=" + CsvWriter::num(spacing) +
                " temperature=" + CsvWriter::num(temperature));
    e.push_back("L: " + join(L));
    if (command == "fig3" || command == "fig4") {
        e.push_back("d: " + (d.empty() ? "log-spaced 1.." + std::to_string(d_max) + " (" + std::to_string(d_points) + " points)" : join(d)));
        e.push_back("time_average: " + time_average + (report_both ? " (unit_factor also reported)" : ""));
    }
    if (command == "ensemble")
        e.push_back("samples: " + std::to_string(samples) + " lags: " + join(lags) + " cutoff: " + std::to_string(cutoff) +
                    " langevin_time: " + CsvWriter::num(langevin_time) + " langevin_step: " + CsvWriter::num(langevin_step));
    if (command == "verify")
        e.push_back("realizations: " + std::to_string(realizations) + (corrupt != 0.0 ? " corrupt: " + CsvWriter::num(corrupt) : ""));
    if (command == "wave")
        e.push_back("wave: groups " + join(wave_groups) + " group_size " + std::to_string(wave_group_size) + " route " + wave_route);
    if (command == "report")
        e.push_back("report: range_width=" + CsvWriter::num(range_width) + " excitation=" + CsvWriter::num(excitation) +
                    " horizon=" + CsvWriter::num(horizon) + " mass_amu=" + CsvWriter::num(mass_amu) +
                    " temperature_K=" + CsvWriter::num(temperature_K) + " omega_si=" + CsvWriter::num(omega_si) +
                    " d: " + join(d));
    return e;
}

// ---------------------------------------------------------------- YAML

namespace {

template <class T>
T scalar(const YAML::Node& n, const std::string& key)
{
    try {
        return n.as<T>();
    } catch (const YAML::Exception&) {
        throw config_error("config: bad value for '" + key + "'");
    }
}

template <class T>
std::vector<T> list(const YAML::Node& n, const std::string& key)
{
    if (!n.IsSequence()) throw config_error("config: '" + key + "' must be a list");
    std::vector<T> v;
    for (const auto& x : n) v.push_back(scalar<T>(x, key));
    return v;
}

void apply_section(const YAML::Node& node, const std::string& section, RunConfig& c)
{
    if (!node.IsMap()) throw config_error("config: section '" + section + "' must be a mapping");
    for (const auto& kv : node) {
        const std::string k = kv.first.as<std::string>();
        const YAML::Node& v = kv.second;
        const std::string key = section.empty() ? k : section + "." + k;
        if (key == "seed") c.seed = scalar<std::uint64_t>(v, key);
        else if (key == "workers") c.workers = scalar<unsigned>(v, key);
        else if (key == "out") c.out_path = scalar<std::string>(v, key);
        else if (key == "units") {
            const auto u = scalar<std::string>(v, key);
            if (u != "natural" && u != "si") throw config_error("config: units must be natural or si");
            c.units = u == "si" ? Units::si : Units::natural;
        }
        else if (key == "geometry.groups") c.groups = scalar<long>(v, key);
        else if (key == "geometry.group_size") c.group_size = scalar<long>(v, key);
        else if (key == "geometry.clump_size") c.clump_size = scalar<long>(v, key);
        else if (key == "geometry.mass") c.mass = scalar<double>(v, key);
        else if (key == "geometry.omega") c.omega = scalar<double>(v, key);
        else if (key == "geometry.spacing") c.spacing = scalar<double>(v, key);
        else if (key == "geometry.temperature") c.temperature = scalar<double>(v, key);
        else if (key == "sweep.L") c.L = list<long>(v, key);
        else if (key == "sweep.d") c.d = list<long>(v, key);
        else if (key == "sweep.d_max") c.d_max = scalar<long>(v, key);
        else if (key == "sweep.d_points") c.d_points = scalar<long>(v, key);
        else if (key == "sweep.time_average") c.time_average = scalar<std::string>(v, key);
        else if (key == "sweep.report_both") c.report_both = scalar<bool>(v, key);
        else if (key == "sweep.check") c.check = scalar<bool>(v, key);
        else if (key == "ensemble.samples") c.samples = scalar<long>(v, key);
        else if (key == "ensemble.lags") c.lags = list<double>(v, key);
        else if (key == "ensemble.langevin_time") c.langevin_time = scalar<double>(v, key);
        else if (key == "ensemble.langevin_step") c.langevin_step = scalar<double>(v, key);
        else if (key == "ensemble.cutoff") c.cutoff = scalar<long>(v, key);
        else if (key == "verify.realizations") c.realizations = scalar<long>(v, key);
        else if (key == "verify.corrupt") c.corrupt = scalar<double>(v, key);
        else if (key == "wave.groups") c.wave_groups = list<long>(v, key);
        else if (key == "wave.group_size") c.wave_group_size = scalar<long>(v, key);
        else if (key == "wave.route") c.wave_route = scalar<std::string>(v, key);
        else if (key == "report.range_width") c.range_width = scalar<double>(v, key);
        else if (key == "report.excitation") c.excitation = scalar<double>(v, key);
        else if (key == "report.horizon") c.horizon = scalar<double>(v, key);
        else if (key == "report.mass_amu") c.mass_amu = scalar<double>(v, key);
        else if (key == "report.temperature_K") c.temperature_K = scalar<double>(v, key);
        else if (key == "report.omega_si") c.omega_si = scalar<double>(v, key);
        else if (section.empty() && (k == "geometry" || k == "sweep" || k == "ensemble" || k == "verify" ||
                                     k == "wave" || k == "report"))
            apply_section(v, k, c);
        else
            throw config_error("config: unknown key '" + key + "'");
    }
}

} // namespace

RunConfig load_config_file(const std::string& path, RunConfig base)
{
    YAML::Node root;
    try {
        root = YAML::LoadFile(path);
    } catch (const YAML::BadFile&) {
        throw config_error("config: cannot read '" + path + "'");
    } catch (const YAML::Exception& e) {
        throw config_error("config: " + path + ": " + e.what());
    }
    base.config_path = path;
    if (root.IsNull()) return base;
    apply_section(root, "", base);
    return base;
}

// ---------------------------------------------------------------- commands

namespace {

void emit_header(CsvWriter& w, const RunConfig& c, const std::vector<std::string>& extra)
{
    for (const auto& l : c.echo()) w.comment(l);
    for (const auto& l : extra) w.comment(l);
}

TimeAverage average_mode(const std::string& s)
{
    if (s == "unit_factor") return TimeAverage::unit_factor;
    if (s == "exact") return TimeAverage::exact;
    return TimeAverage::as_written;
}

} // namespace

int run_fig3(const RunConfig& c, std::ostream& out, std::ostream& log)
{
    const std::vector<long> dg = c.d_grid();
    const auto rows = fig3_rows(c.groups, c.L, dg, average_mode(c.time_average), c.report_both, c.workers);
    CsvWriter w(out);
    emit_header(w, c, {"units: S2 in k_B T omega^2 / (N mu); asymptotes (pi L/M)^2 and (pi L/M)^2 / d"});
    std::vector<std::string> cols{"L", "d", "S2_units", "d2_asymptote", "large_d_asymptote"};
    if (c.report_both) cols.push_back("S2_unit_factor");
    w.header(cols);
    for (const auto& r : rows) {
        std::vector<std::string> f{CsvWriter::num(r.L), CsvWriter::num(r.d), CsvWriter::num(r.S2),
                                   CsvWriter::num(r.d2_asymptote), CsvWriter::num(r.large_d_asymptote)};
        if (c.report_both) f.push_back(CsvWriter::num(r.S2_unit_factor));
        w.row(f);
    }
    if (!c.check) return 0;
    const auto checks = fig3_checks(rows);
    bool ok = true;
    for (const auto& ch : checks) {
        log << (ch.pass ? "PASS " : "FAIL ") << ch.name << ": " << ch.detail << "\n";
        ok = ok && ch.pass;
    }
    return ok ? 0 : 2;
}

int run_fig4(const RunConfig& c, std::ostream& out, std::ostream& log)
{
    const std::vector<long> dg = c.d_grid();
    const auto rows = fig4_rows(c.groups, c.L, dg, c.workers);
    CsvWriter w(out);
    emit_header(w, c, {"units: K_I in N k_B T mu omega^2 / (4 hbar^2); ratio_to_S2 compares against S2 in k_B T omega^2 / (N mu)",
                       "ratio_to_S2 is empty where both vanish (d = 1)"});
    w.header({"L", "d", "K_I_units", "ratio_to_S2"});
    bool ok = true;
    for (const auto& r : rows) {
        const bool defined = r.d > 1 && r.S2 > 0.0;
        w.row({CsvWriter::num(r.L), CsvWriter::num(r.d), CsvWriter::num(r.K_I), defined ? CsvWriter::num(r.ratio) : ""});
        if (defined && std::abs(r.ratio - 1.0) > 0.1) ok = false;
        if (r.d == 1 && r.K_I != 0.0) ok = false;
    }
    if (!c.check) return 0;
    log << (ok ? "PASS" : "FAIL") << " fig4: ratio_to_S2 within 10% of 1 and K_I(d=1) = 0\n";
    return ok ? 0 : 2;
}

int run_ensemble_command(const RunConfig& c, std::ostream& out, std::ostream& log)
{
    EnsembleConfig e;
    e.geometry = ChainGeometry::natural(c.groups, c.group_size, c.clump_size);
    e.geometry.mass = c.mass;
    e.geometry.omega = c.omega;
    e.geometry.spacing = c.spacing;
    e.geometry.validate();
    e.L = c.L.front();
    e.ic.cutoff = c.cutoff;
    e.ic.temperature = c.temperature;
    e.ic.seed = c.seed;
    e.samples = c.samples;
    e.seed = c.seed;
    e.workers = c.workers;
    e.lags = c.lags;
    e.langevin_time = c.langevin_time;
    e.langevin_step = c.langevin_step;
    const EnsembleSummary s = run_ensemble(e);
    write_ensemble_csv(out, e, s, c.echo());
    long failed = 0;
    for (const auto& st : s.stats)
        if (st.checked && !st.pass) {
            ++failed;
            log << "FAIL " << st.observable << " t=" << st.t << " mean=" << st.mean << " expected=" << st.expected
                << " se=" << st.standard_error << "\n";
        }
    if (s.undersampled) log << "warning: undersampled (standard error above 10% of the expected value)\n";
    log << "ensemble: " << s.stats.size() << " statistics, " << failed << " failed 3-sigma checks\n";
    return failed ? 2 : 0;
}

int run_wave(const RunConfig& c, std::ostream& out, std::ostream& log)
{
    const long L = c.L.front();
    const ConvergenceRoute route = c.wave_route == "lattice" ? ConvergenceRoute::lattice : ConvergenceRoute::chain;
    const ConvergenceTable t = convergence_study(L, c.wave_groups, c.wave_group_size, route);
    CsvWriter w(out);
    emit_header(w, c, {"sup_error: coarse-grained chain vs continuum wave equation after one continuum period",
                       "fitted_slope: least squares of log sup_error against log M"});
    w.header({"M", "sup_error", "fitted_slope"});
    for (const auto& r : t.rows)
        w.row({CsvWriter::num(r.groups), CsvWriter::num(r.sup_error), CsvWriter::num(t.fitted_slope)});
    ChainGeometry g = ChainGeometry::natural(c.wave_groups.front(), c.wave_group_size, c.wave_group_size);
    const long d = c.wave_group_size;
    const DispersionMeasurement m = measure_dispersion(L, g, d, 0.5 * d / g.omega, 64);
    log << "dispersion L=" << L << " M=" << g.groups << " d=" << d << ": measured " << m.measured << ", scheme "
        << m.scheme << " (rel " << m.scheme_error << "), chain " << m.exact_chain << " (rel " << m.chain_error << ")\n";
    return 0;
}

int run_verify(const RunConfig& c, std::ostream& out, std::ostream& log)
{
    SuiteOptions o;
    o.realizations = c.realizations;
    o.seed = c.seed;
    o.workers = c.workers;
    o.corruption = c.corrupt;
    o.groups_c = c.groups;
    o.L_c = c.L;
    const VerifyReport r = run_verification_suite(o);
    CsvWriter w(out);
    emit_header(w, c, {"residuals are relative unless noted; *_order rows hold |observed order - 2|"});
    w.header({"identity", "L", "d", "residual", "tolerance", "pass", "note"});
    long failed = 0;
    for (const auto& it : r.items) {
        const bool ok = it.pass && !it.inconclusive;
        w.row({it.identity, CsvWriter::num(it.L), CsvWriter::num(it.d), CsvWriter::num(it.residual),
               CsvWriter::num(it.tolerance), it.inconclusive ? "inconclusive" : (ok ? "1" : "0"), it.note});
        if (!ok) {
            ++failed;
            log << "FAIL " << it.identity << " L=" << it.L << " d=" << it.d << " residual=" << it.residual << "\n";
        }
    }
    log << "verify: " << r.items.size() << " checks, " << failed << " failed\n";
    return failed ? 2 : 0;
}

int run_report(const RunConfig& c, std::ostream& out, std::ostream& log)
{
    ChainGeometry g;
    g.groups = c.groups;
    g.group_size = c.group_size;
    g.clump_size = 1;
    g.total_atoms = c.groups * c.group_size;
    if (c.units == Units::si) {
        g.mass = c.mass_amu * si::amu;
        g.omega = c.omega_si;
        g.temperature = c.temperature_K;
        g.hbar = si::hbar;
        g.k_B = si::k_B;
    } else {
        g.mass = c.mass;
        g.omega = c.omega;
        g.temperature = c.temperature;
    }
    g.spacing = c.spacing;
    g.validate();
    CoarseGrainingSpec spec;
    spec.range_width = c.range_width;
    std::vector<long> dl = c.d.empty() ? c.d_grid() : c.d;
    CsvWriter w(out);
    const std::string len = c.units == Units::si ? "m" : "natural";
    emit_header(w, c, {"all quantities are order-of-magnitude estimates (prefactors set to 1)",
                       std::string("lengths in ") + len + "; ratio_times_range_cm = (t_decoh/t_dyn) * Delta in cm (SI only)"});
    w.header({"L", "d", "t_dyn", "t_decoh", "ratio_decoh_dyn", "ratio_times_range_cm", "lambda_DB", "F_noise", "F_dyn",
              "noise_force_ratio", "thermal_scale", "op_count", "kernel_trace", "classical_ratio", "order_of_magnitude"});
    for (long L : c.L)
        for (long d : dl) {
            const DecoherenceReport r = predictability_report(g, spec, L, d, c.excitation, c.horizon);
            const double cm = c.units == Units::si ? r.ratio_decoh_dyn * spec.range_width * 100.0 : 0.0;
            w.row({CsvWriter::num(L), CsvWriter::num(d), CsvWriter::num(r.t_dyn), CsvWriter::num(r.t_decoh),
                   CsvWriter::num(r.ratio_decoh_dyn), c.units == Units::si ? CsvWriter::num(cm) : "",
                   CsvWriter::num(r.lambda_DB), CsvWriter::num(r.F_noise), CsvWriter::num(r.F_dyn),
                   CsvWriter::num(r.noise_force_ratio), CsvWriter::num(r.thermal_scale), CsvWriter::num(r.op_count),
                   CsvWriter::num(r.kernel_trace), CsvWriter::num(r.classical_ratio), "1"});
        }
    log << "report: " << c.L.size() * dl.size() << " rows\n";
    return 0;
}

// ---------------------------------------------------------------- entry

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Coarse-grained harmonic chain: noise, decoherence kernels and checks", "hcg"};
    app.require_subcommand(1, 1);

    std::string config, outp, units, time_average, route;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> workers;
    std::vector<long> Ls, ds, wave_groups;
    std::optional<long> samples, realizations, groups, group_size, clump_size, d_max, d_points, cutoff;
    std::optional<double> corrupt, temperature, range_width, excitation, langevin_time, langevin_step;
    bool report_both = false, check = false;

    app.add_option("--config", config, "YAML configuration file");
    app.add_option("--out", outp, "output CSV path (default stdout)");
    app.add_option("--seed", seed, "master seed");
    app.add_option("--workers", workers, "worker threads (0 = hardware)");
    app.add_option("--units", units, "natural or si")->check(CLI::IsMember({"natural", "si"}));
    app.add_option("--L", Ls, "coarse mode list");
    app.add_option("--d", ds, "clump sizes (overrides log spacing)");
    app.add_option("--d-max", d_max, "largest d of the log grid");
    app.add_option("--d-points", d_points, "points of the log grid");
    app.add_option("--groups", groups, "number of groups M");
    app.add_option("--group-size", group_size, "atoms per group N");
    app.add_option("--clump-size", clump_size, "clump size d for ensemble runs");
    app.add_option("--temperature", temperature, "temperature (natural: k_B T)");
    app.add_option("--samples", samples, "Monte Carlo samples");
    app.add_option("--cutoff", cutoff, "excitation cutoff l_C");
    app.add_option("--langevin-time", langevin_time, "Langevin comparison time");
    app.add_option("--langevin-step", langevin_step, "Langevin step");
    app.add_option("--realizations", realizations, "noise realizations per verify case");
    app.add_option("--corrupt", corrupt, "test mode: relative perturbation of one coefficient");
    app.add_option("--time-average", time_average, "as_written, unit_factor or exact");
    app.add_flag("--report-both", report_both, "also report S2 with the unit initial-condition factor");
    app.add_flag("--check", check, "check curve properties; exit 2 on failure");
    app.add_option("--range-width", range_width, "Delta for the report command");
    app.add_option("--excitation", excitation, "excitation size for the report command");
    app.add_option("--wave-groups", wave_groups, "group counts for the wave study");
    app.add_option("--route", route, "wave route: chain or lattice");

    std::string chosen;
    for (const auto& name : {"fig3", "fig4", "ensemble", "wave", "verify", "report"}) {
        auto* sub = app.add_subcommand(name);
        sub->fallthrough();
        sub->callback([&chosen, name] { chosen = name; });
    }

    try {
        std::vector<std::string> args;
        for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return 1;
    }

    try {
        RunConfig c = defaults_for(chosen);
        if (!config.empty()) c = load_config_file(config, c);
        if (!outp.empty()) c.out_path = outp;
        if (seed) c.seed = *seed;
        if (workers) c.workers = *workers;
        if (!units.empty()) c.units = units == "si" ? Units::si : Units::natural;
        if (!Ls.empty()) c.L = Ls;
        if (!ds.empty()) c.d = ds;
        if (d_max) c.d_max = *d_max;
        if (d_points) c.d_points = *d_points;
        if (groups) c.groups = *groups;
        if (group_size) c.group_size = *group_size;
        if (clump_size) c.clump_size = *clump_size;
        if (temperature) c.temperature = *temperature;
        if (samples) c.samples = *samples;
        if (cutoff) c.cutoff = *cutoff;
        if (langevin_time) c.langevin_time = *langevin_time;
        if (langevin_step) c.langevin_step = *langevin_step;
        if (realizations) c.realizations = *realizations;
        if (corrupt) c.corrupt = *corrupt;
        if (!time_average.empty()) c.time_average = time_average;
        if (report_both) c.report_both = true;
        if (check) c.check = true;
        if (range_width) c.range_width = *range_width;
        if (excitation) c.excitation = *excitation;
        if (!wave_groups.empty()) c.wave_groups = wave_groups;
        if (!route.empty()) c.wave_route = route;
        if (chosen == "wave" && Ls.empty()) c.L = {2};
        c.validate();

        std::unique_ptr<std::ofstream> file;
        std::ostream* dest = &out;
        if (!c.out_path.empty()) {
            file = std::make_unique<std::ofstream>(c.out_path, std::ios::binary);
            if (!*file) throw config_error("cannot open output file '" + c.out_path + "'");
            dest = file.get();
        }
        if (chosen == "fig3") return run_fig3(c, *dest, err);
        if (chosen == "fig4") return run_fig4(c, *dest, err);
        if (chosen == "ensemble") return run_ensemble_command(c, *dest, err);
        if (chosen == "wave") return run_wave(c, *dest, err);
        if (chosen == "verify") return run_verify(c, *dest, err);
        return run_report(c, *dest, err);
    } catch (const config_error& e) {
        err << "configuration error: " << e.what() << "\n";
        return 1;
    } catch (const contract_error& e) {
        err << "invalid parameters: " << e.what() << "\n";
        return 1;
    } catch (const numerical_error& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << "\n";
        return 3;
    }
}

} // namespace hcg
