#include "trabox/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include "trabox/eigensolver.hpp"
#include "trabox/errors.hpp"
#include "trabox/fd_reference.hpp"

namespace trabox::commands {

namespace {

namespace fs = std::filesystem;

std::string sig12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string hash_hex(std::uint64_t h) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string csv_preamble(const RunConfig& cfg, const std::string& command) {
    std::ostringstream s;
    s << "# config_hash=" << hash_hex(config_hash(cfg)) << "\n";
    s << "# units="
      << (cfg.potential.unit_mode == UnitMode::paper_units
              ? "paper (energies in 4/L^2)"
              : "absolute (hbar=m=1)")
      << "\n";
    s << "# command=" << command << "\n";
    return s.str();
}

void write_atomic(const fs::path& dir, const std::string& name,
                  const std::string& content) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    const fs::path target = dir / name;
    const fs::path tmp = dir / (name + ".tmp");
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw ConfigError("cannot write to " + tmp.string());
        f << content;
    }
    fs::rename(tmp, target);
}

const char* method_name(ReconstructionMethod m) {
    return m == ReconstructionMethod::recursion ? "recursion" : "eigenvector";
}

}  // namespace

void cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
    if (cfg.levels > cfg.basis_size)
        throw ConfigError("spectrum: levels exceeds basis_size");

    const BasisSpec spec = to_basis_spec(cfg.potential);
    const SpectrumResult sol = solve_spectrum(spec, cfg.basis_size);

    std::ostringstream csv;
    csv << csv_preamble(cfg, "spectrum");
    csv << "level,eps,E_absolute\n";
    for (std::size_t m = 0; m < cfg.levels; ++m)
        csv << m << "," << sig12(sol.eps[m]) << ","
            << sig12(sol.eps[m] / spec.eps_scale) << "\n";
    write_atomic(cfg.output_dir, "spectrum.csv", csv.str());

    out << "energy spectrum (units of 4/L^2), N = " << cfg.basis_size << "\n";
    for (std::size_t m = 0; m < cfg.levels; ++m)
        out << std::setw(4) << m << "  " << std::fixed << std::setprecision(10)
            << std::setw(18) << sol.eps[m] << std::defaultfloat << "\n";
}

void cmd_converge(const RunConfig& cfg, const std::vector<std::size_t>& sizes,
                  std::ostream& out) {
    if (sizes.empty()) throw ConfigError("converge: no basis sizes given");
    if (!std::is_sorted(sizes.begin(), sizes.end()))
        throw ConfigError("converge: sizes must be ascending");
    if (cfg.levels > sizes.front())
        throw ConfigError("converge: levels exceeds the smallest basis size");

    const BasisSpec spec = to_basis_spec(cfg.potential);
    const ConvergenceTable table = convergence_study(spec, sizes, cfg.levels);

    std::ostringstream csv;
    csv << csv_preamble(cfg, "converge");
    csv << "level";
    for (const std::size_t n : sizes) csv << ",N" << n;
    csv << "\n";
    for (std::size_t m = 0; m < table.levels; ++m) {
        csv << m;
        for (std::size_t c = 0; c < sizes.size(); ++c)
            csv << "," << sig12(table.eps[m][c]);
        csv << "\n";
    }
    write_atomic(cfg.output_dir, "converge.csv", csv.str());

    out << "convergence of the spectrum (units of 4/L^2)\n";
    out << std::setw(4) << "m";
    for (const std::size_t n : sizes) out << std::setw(18) << ("N=" + std::to_string(n));
    out << "\n";
    for (std::size_t m = 0; m < table.levels; ++m) {
        out << std::setw(4) << m << std::fixed << std::setprecision(10);
        for (std::size_t c = 0; c < sizes.size(); ++c)
            out << std::setw(18) << table.eps[m][c];
        out << std::defaultfloat << "\n";
    }
    if (sizes.size() > 1) {
        out << "stabilized decimal digits between consecutive sizes\n";
        for (std::size_t m = 0; m < table.levels; ++m) {
            out << std::setw(4) << m;
            for (const int d : table.stable_digits[m]) out << std::setw(6) << d;
            out << "\n";
        }
    }
}

void cmd_potential(const RunConfig& cfg, std::ostream& out) {
    const std::vector<double> xs =
        uniform_grid(cfg.potential.L, cfg.grid_points);
    const double to_output_units =
        cfg.potential.unit_mode == UnitMode::paper_units
            ? cfg.potential.L * cfg.potential.L / 4.0
            : 1.0;

    std::size_t clipped = 0;
    std::ostringstream csv;
    csv << csv_preamble(cfg, "potential");
    csv << "x,V\n";
    for (const double x : xs) {
        double v = potential_x(cfg.potential, x) * to_output_units;
        if (!(v >= -cfg.potential_clip)) {
            v = -cfg.potential_clip;
            ++clipped;
        } else if (!(v <= cfg.potential_clip)) {
            v = cfg.potential_clip;
            ++clipped;
        }
        csv << sig12(x) << "," << sig12(v) << "\n";
    }
    write_atomic(cfg.output_dir, "potential.csv", csv.str());

    out << "potential profile: " << xs.size() << " points, " << clipped
        << " clipped at |V| = " << sig12(cfg.potential_clip) << "\n";
}

void cmd_wavefunction(const RunConfig& cfg, std::size_t level,
                      ReconstructionMethod method, std::ostream& out) {
    if (cfg.levels > cfg.basis_size)
        throw ConfigError("wavefunction: levels exceeds basis_size");
    if (level >= cfg.levels)
        throw ConfigError("wavefunction: level must be below levels");

    const BasisSpec spec = to_basis_spec(cfg.potential);
    const SpectrumResult sol = solve_spectrum(spec, cfg.basis_size);
    const double eps_m = sol.eps[level];

    const std::vector<double> xs =
        uniform_grid(cfg.potential.L, cfg.grid_points);
    const WavefunctionSamples samples =
        reconstruct(spec, eps_m, cfg.basis_size, xs, method,
                    static_cast<int>(level));

    // Truncation-stability scan on the fixed 1001-point grid. The scan runs
    // the recursion, which has no value at the singular energy eps = -u1;
    // the eigenvector output is still fine there, so only the scan is skipped.
    bool scanned = true;
    StabilityReport stab;
    try {
        stab = detect_stability(spec, eps_m, cfg.stability.n_max,
                                uniform_grid(cfg.potential.L, 1001),
                                cfg.stability.stable_tol,
                                cfg.stability.unstable_tol);
    } catch (const std::domain_error&) {
        scanned = false;
    }

    std::ostringstream csv;
    csv << csv_preamble(cfg, "wavefunction");
    csv << "# level=" << level << " eps=" << sig12(eps_m) << " method="
        << method_name(method) << " N=" << cfg.basis_size << "\n";
    if (!scanned) {
        csv << "# stability: scan skipped (eps at the singular energy -u1)\n";
    } else if (!stab.stable_window_found) {
        csv << "# stability: no stable window up to N=" << cfg.stability.n_max
            << "\n";
    } else if (stab.instability_reached) {
        csv << "# stability: N_c=" << stab.n_critical << "\n";
    } else {
        csv << "# stability: no instability up to N=" << cfg.stability.n_max
            << " (N_c not reached)\n";
    }
    if (scanned && method == ReconstructionMethod::recursion &&
        stab.instability_reached && cfg.basis_size > stab.n_critical) {
        csv << "# warning: N=" << cfg.basis_size
            << " exceeds N_c; the recursion sum is unstable at this truncation\n";
    }
    bool finite = true;
    for (const double v : samples.psi)
        if (!std::isfinite(v)) finite = false;
    if (!finite)
        csv << "# note: values are non-finite; the recursion sum overflows "
               "this far beyond N_c\n";
    csv << "x,psi\n";
    for (std::size_t j = 0; j < samples.xs.size(); ++j)
        csv << sig12(samples.xs[j]) << "," << sig12(samples.psi[j]) << "\n";
    write_atomic(cfg.output_dir, "wavefunction.csv", csv.str());

    out << "level " << level << ", eps = " << sig12(eps_m) << ", method "
        << method_name(method) << ", nodes ";
    if (finite)
        out << count_nodes(samples) << "\n";
    else
        out << "n/a (non-finite values)\n";
    if (!scanned)
        out << "stability: scan skipped (singular energy)\n";
    else if (!stab.stable_window_found)
        out << "stability: no stable window found (energy off the spectrum?)\n";
    else if (stab.instability_reached)
        out << "stability: recursion sum destabilizes at N_c = "
            << stab.n_critical << "\n";
    else
        out << "stability: stable through N = " << cfg.stability.n_max << "\n";
    if (scanned && method == ReconstructionMethod::recursion &&
        stab.instability_reached && cfg.basis_size > stab.n_critical)
        out << "warning: requested N exceeds N_c; output is unstable\n";
}

void cmd_oracle_compare(const RunConfig& cfg, std::ostream& out) {
    if (cfg.levels > cfg.oracle.levels)
        throw ConfigError("oracle-compare: levels exceeds oracle.levels");
    if (cfg.levels > cfg.basis_size)
        throw ConfigError("oracle-compare: levels exceeds basis_size");

    const BasisSpec spec = to_basis_spec(cfg.potential);
    const SpectrumResult sol = solve_spectrum(spec, cfg.basis_size);
    const FdConfig fd_cfg{cfg.oracle.grid_points, cfg.oracle.levels,
                          cfg.oracle.richardson};
    const std::vector<double> fd = fd_spectrum(cfg.potential, fd_cfg);

    std::ostringstream csv;
    csv << csv_preamble(cfg, "oracle-compare");
    csv << "level,eps_tra,eps_fd,rel_dev\n";
    out << "spectral vs finite-difference eigenvalues (units of 4/L^2)\n";
    for (std::size_t m = 0; m < cfg.levels; ++m) {
        const double dev =
            std::abs(sol.eps[m] - fd[m]) / std::max(1.0, std::abs(sol.eps[m]));
        csv << m << "," << sig12(sol.eps[m]) << "," << sig12(fd[m]) << ","
            << sig12(dev) << "\n";
        out << std::setw(4) << m << std::setw(20) << sig12(sol.eps[m])
            << std::setw(20) << sig12(fd[m]) << std::setw(20) << sig12(dev)
            << "\n";
    }
    write_atomic(cfg.output_dir, "oracle_compare.csv", csv.str());
}

}  // namespace trabox::commands
