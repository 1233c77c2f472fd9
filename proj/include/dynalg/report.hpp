#pragma once

#include <string>
#include <vector>

#include "dynalg/dressed.hpp"
#include "dynalg/so4.hpp"

namespace dynalg {

// Configuration shared by every command.  Model parameters not used by the
// selected model are ignored.
struct RunConfig {
  std::string model = "do";  // "do" | "jc" | "dirac2d"
  int n_max = 60;
  int guard = 3;
  double tolerance = 1e-9;
  // do
  double m = 1.0;
  double omega = 1.0;
  // jc (shares omega)
  double Omega = 1.0;
  double J = 0.1;
  // dirac2d
  int l_min = -20;
  int l_max = 20;
};

// Throws std::invalid_argument when the invariants (n_max >= 8,
// 1 <= guard < n_max, tolerance > 0, known model, l_min < l_max) fail.
void validate(const RunConfig& config);

struct SpectrumRow {
  std::string branch;
  int n = 0;
  double analytic = 0.0;
  double dense = 0.0;
  double abs_diff = 0.0;
  bool detached = false;
};

struct SweepPoint {
  std::vector<std::pair<std::string, double>> params;
  bool pass = false;
};

struct VerificationReport {
  RunConfig config;
  std::vector<CommutatorReport> checks;
  std::vector<SpectrumRow> spectrum;
  std::vector<CartanDiagonal> cartan;  // do/jc verify only
  std::vector<SweepPoint> sweep;       // sweep only
  bool pass = false;
  double duration_seconds = 0.0;
};

// Spectrum table only (checks empty).
VerificationReport run_spectrum(const RunConfig& config);

// Full verification: structural identities, conservation, eigenstate
// residuals, the commutation table, and matrix-element closed forms.
VerificationReport run_verify(const RunConfig& config);

// Verification repeated over a parameter grid; checks hold the maximum
// residual (and defect rank) per relation across the grid.
VerificationReport run_sweep(const RunConfig& base,
                             const std::vector<RunConfig>& grid);

// Serialization.  JSON is byte-deterministic for a given config except for
// the duration field; numbers round-trip exactly (17 significant digits in
// CSV).
std::string report_to_json(const VerificationReport& report);
std::string report_to_csv(const VerificationReport& report);

}  // namespace dynalg
