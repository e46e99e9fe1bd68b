#ifndef ORBITCOUNT_EXPERIMENTS_HPP
#define ORBITCOUNT_EXPERIMENTS_HPP

// The experiment pipelines behind the CLI subcommands: each runs one
// enumeration at the requested heights, assembles counts / power-law fit /
// discrepancy, compares against the theoretical constant, and renders a
// canonical JSON report plus plot-ready CSVs. Reports are byte-identical
// across thread counts (enumerators merge canonically; no timing in the
// report).

#include <stdexcept>
#include <string>
#include <vector>

namespace oc {

/** Request for one experiment run; negative / empty fields mean the
 *  per-experiment default (documented in the CLI help). */
struct ExperimentRequest {
  std::string name;             // farey, gaussian, quad-trace, rel-count,
                                // form-equid, heis-count, heis-ball, chains,
                                // perp, approx, hurwitz
  double s = -1;                // height bound (or r-max for heis-ball)
  std::vector<double> window;   // a b [c d]
  int bins = -1;
  double traceWindow = -1;
  int fieldDisc = 0;            // -3, -4 or -8; 0 = default
  double tolerance = -1;
  int threads = 1;
  int steps = -1;               // number of height checkpoints for fits
  double horoballHeight = 1.0;  // perp
  std::vector<double> geodesic; // perp: two boundary endpoints
  int samples = -1;             // hurwitz: number of random targets
  double eps = -1;              // chains: modified-Cygan diameter filter
  long budget = -1;             // chains: generator-word entry budget
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** Result of a run: pass/fail verdict, canonical report bytes, CSV bytes. */
struct ExperimentOutput {
  bool passed = false;
  std::string reportJson;    // fixed schema, schema_version field, no timing
  std::string pointsCsv;     // value_re,value_im,height[,extra]
  std::string histogramCsv;  // bin_lo,bin_hi,mass_empirical,mass_target
};

/** Runs the named experiment; throws UsageError on bad requests. */
ExperimentOutput runExperiment(const ExperimentRequest& req);

/** The supported experiment names, in CLI order. */
const std::vector<std::string>& experimentNames();

}  // namespace oc

#endif
