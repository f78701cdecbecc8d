#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "trabox/run_config.hpp"
#include "trabox/wavefunction.hpp"

namespace trabox::commands {

// Each command validates its inputs (throwing ConfigError), runs the
// solver, writes its CSV into cfg.output_dir atomically, and prints a
// human-readable table to `out`. Numeric failures propagate as
// NumericError. The CLI maps ConfigError to exit 2 and NumericError to 3.

/// Writes spectrum.csv with columns level,eps,E_absolute.
void cmd_spectrum(const RunConfig& cfg, std::ostream& out);

/// Writes converge.csv: one eigenvalue column per basis size.
void cmd_converge(const RunConfig& cfg, const std::vector<std::size_t>& sizes,
                  std::ostream& out);

/// Writes potential.csv with columns x,V; wall singularities clipped at
/// +-potential_clip.
void cmd_potential(const RunConfig& cfg, std::ostream& out);

/// Writes wavefunction.csv with columns x,psi plus a truncation-stability
/// report in the header comments.
void cmd_wavefunction(const RunConfig& cfg, std::size_t level,
                      ReconstructionMethod method, std::ostream& out);

/// Writes oracle_compare.csv with columns level,eps_tra,eps_fd,rel_dev.
void cmd_oracle_compare(const RunConfig& cfg, std::ostream& out);

}  // namespace trabox::commands
