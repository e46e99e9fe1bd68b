#ifndef ORBITCOUNT_EQUIDIST_HPP
#define ORBITCOUNT_EQUIDIST_HPP

// Statistics layer: weighted empirical measures, binned discrepancy against
// the target densities of the counting theorems (uniform, reciprocal-form,
// planar uniform, Heisenberg Haar), the Kolmogorov-Smirnov statistic,
// log-log power-law fits, and the theoretical constants.

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitcount/zeta.hpp"

namespace oc {

struct EmptyMeasureError : std::domain_error {
  using std::domain_error::domain_error;
};

/** Weighted point masses in R^dim (dim 1, 2 or 3; unused coords zero). */
struct EmpiricalMeasure {
  int dim = 1;
  std::vector<std::array<double, 3>> points;
  std::vector<double> weights;  // all > 0
  double totalMass = 0;         // compensated sum of weights

  static EmpiricalMeasure fromValues(const std::vector<double>& xs);
  static EmpiricalMeasure fromPoints(int dim,
                                     const std::vector<std::array<double, 3>>& xs);
  void add(const std::array<double, 3>& x, double weight);
};

/** Normalized target density over an axis-aligned window. */
struct TargetDensity {
  enum class Kind {
    UniformInterval,    // dt / |window|
    ReciprocalForm,     // dt / |a t^2 + b t + c|, normalized on the window
    UniformPlanarBox,   // dx dy / area
    HeisenbergHaarBox,  // (1/2) dx dy dt, normalized: uniform in (x,y,t)
  };
  Kind kind = Kind::UniformInterval;
  // 1-d windows may be a union of disjoint intervals (e.g. with neighborhoods
  // of the density's singularities removed); multi-d windows use lo/hi boxes.
  std::vector<std::pair<double, double>> intervals;
  std::array<double, 3> lo{}, hi{};
  double qa = 0, qb = 0, qc = 0;  // ReciprocalForm coefficients

  static TargetDensity uniformOnInterval(double lo, double hi);
  static TargetDensity uniformOnIntervals(
      const std::vector<std::pair<double, double>>& intervals);
  static TargetDensity reciprocalForm(
      double a, double b, double c,
      const std::vector<std::pair<double, double>>& intervals);
  static TargetDensity uniformOnBox(double xLo, double xHi, double yLo,
                                    double yHi);
  static TargetDensity heisenbergHaarBox(const std::array<double, 3>& lo,
                                         const std::array<double, 3>& hi);

  /** Normalized mass of the sub-box [cellLo, cellHi] (closed form). */
  double cellMass(const std::array<double, 3>& cellLo,
                  const std::array<double, 3>& cellHi) const;
};

/**
 * Binned discrepancy between the normalized empirical measure and the
 * target: in 1-d, the sup over unions of consecutive bins of |mu - nu|
 * (so refining bins never decreases it); in 2-d/3-d, the per-cell max over
 * the bins^dim product grid. Bins partition the target's window.
 */
double discrepancy(const EmpiricalMeasure& mu, const TargetDensity& nu,
                   int bins);

/** 1-d Kolmogorov-Smirnov statistic sup_t |F_mu(t) - F_nu(t)|. */
double ksStatistic(const EmpiricalMeasure& mu, const TargetDensity& nu);

/** Least-squares power-law fit N(s) ~ constant * s^exponent. */
struct FitResult {
  double exponent = 0;
  double constant = 0;
  double rSquared = 0;
};

/** Fit on (ln s, ln N); needs >= 3 samples with increasing s and N > 0. */
FitResult fitPowerLaw(const std::vector<std::pair<double, double>>& samples);

/** Parameters for the named theoretical constants. */
struct ConstantParams {
  FieldTag field = FieldTag::Rational;
  double regA = 0;  // regulator of the base orbit
  double regB = 0;  // regulator of the relative orbit
  int n = 2;        // dimension, closed_geodesic_pair
  double lenMinus = 0, lenPlus = 0, volume = 0;
};

/**
 * The constants of the counting theorems, by name:
 *   farey_mertens          3/pi^2 (per unit length, per s^2, counting +-q)
 *   gaussian_mertens       2 pi / (|O_K^x| |D_K| zeta_K(2))
 *   quad_trace_density     3 R / pi^2 (per unit trace, per s)
 *   relative_count_slope   48 R_a R_b / pi^2
 *   form_mertens_density   6/pi^2 (density against dt/|Q(t,1)|)
 *   heis_mertens           zeta(3) / (2 pi |O_K^x| |D_K|^{1/2} zeta_K(3))
 *   heis_equid_norm        pi |O_K^x| |D_K|^{3/2} zeta_K(3) / zeta(3)
 *   heis_gauss_ball        2 haarBallVolume(1) / |D_K|
 *   closed_geodesic_pair   pi^{n/2-1} Gamma((n-1)/2)^2 /
 *                          (2^{n-2} (n-1) Gamma(n/2)) * l- l+ / Vol
 */
double theoreticalConstant(const std::string& name, const ConstantParams& p);

}  // namespace oc

#endif
