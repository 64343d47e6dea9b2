#pragma once

#include "hcg/geometry.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hcg {

enum class Units { natural, si };

struct RunConfig {
    std::string command;
    std::string config_path;
    std::string out_path;     // empty: stdout
    std::uint64_t seed = 1;
    unsigned workers = 1;
    Units units = Units::natural;
    bool units_given = false;

    // geometry (natural units unless report/si)
    long groups = 630;
    long group_size = 1000000;
    long clump_size = 1;
    double mass = 1.0, omega = 1.0, spacing = 1.0, temperature = 1.0;

    // sweeps
    std::vector<long> L{30, 65, 100};
    std::vector<long> d;          // explicit list; empty means log-spaced
    long d_max = 10000;
    long d_points = 41;
    std::string time_average = "as_written";
    bool report_both = false;
    bool check = false;

    // ensemble
    long samples = 10000;
    std::vector<double> lags{0.0, 3.141592653589793, 6.283185307179586};
    double langevin_time = 5.0;
    double langevin_step = 0.05;
    long cutoff = 0;

    // verify
    long realizations = 100;
    double corrupt = 0.0;

    // wave
    std::vector<long> wave_groups{16, 32, 64, 128};
    long wave_group_size = 8;
    std::string wave_route = "chain";

    // report (SI)
    double range_width = 1e-2;      // Delta, m
    double excitation = 1e-6;       // script L, m
    double horizon = 1.0;           // script T, s
    double mass_amu = 10.0;
    double temperature_K = 300.0;
    double omega_si = 1e13;         // s^-1

    void validate() const;
    std::vector<long> d_grid() const;
    std::vector<std::string> echo() const;
};

// YAML file, then flags on top. Throws config_error.
RunConfig load_config_file(const std::string& path, RunConfig base);

// Each returns a process exit code: 0 ok, 2 verification failure, 3 numerical failure.
int run_fig3(const RunConfig& c, std::ostream& out, std::ostream& log);
int run_fig4(const RunConfig& c, std::ostream& out, std::ostream& log);
int run_ensemble_command(const RunConfig& c, std::ostream& out, std::ostream& log);
int run_wave(const RunConfig& c, std::ostream& out, std::ostream& log);
int run_verify(const RunConfig& c, std::ostream& out, std::ostream& log);
int run_report(const RunConfig& c, std::ostream& out, std::ostream& log);

// Full command-line entry; used by the binary and by tests.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace hcg
