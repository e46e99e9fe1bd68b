#ifndef ORBITCOUNT_APPROX_HPP
#define ORBITCOUNT_APPROX_HPP

// Approximation constants and exponents over a countable dense family with
// a proper height: finite-height records of min H(z) d(y,z) (approximation
// constant c(y)) and of the Dirichlet-style exponent estimator, plus
// psi-well-approximable counting and the Hurwitz-bound sweep over the
// golden-ratio orbit.

#include <functional>
#include <vector>

#include "orbitcount/quadirr.hpp"

namespace oc {

/** Thrown when the target lies in the approximating family. */
struct DegenerateTargetError : DomainError {
  using DomainError::DomainError;
};

/** One approximating point: real value and height. */
struct FamilyItem {
  double value;
  double height;
};

/**
 * A height-bounded approximating family. enumerate(y, sMax) returns every
 * family point relevant to the target y with height <= sMax (for the
 * rational family: the closest fraction per denominator, both on ties;
 * for orbit families: all orbit points in a window around y).
 */
struct ApproxFamily {
  std::function<std::vector<FamilyItem>(double y, double sMax)> enumerate;
};

/** Rationals p/q with height q^heightExp (heightExp 1 or 2), closest
 *  numerator per denominator (both on exact ties), reduced fractions only. */
ApproxFamily rationalFamily(int heightExp);

/** The homography orbit of alpha0 (with Galois conjugates) under heightQI,
 *  restricted to values within `window` of the target. */
ApproxFamily quadOrbitFamily(const QuadraticIrrational& alpha0,
                             double window = 4.0);

/**
 * Record of a finite-height approximation statistic: entries are
 * (checkpoint s, statistic over heights <= s), checkpoints geometric;
 * finalEstimate is the entry at sMax. A finite record only estimates the
 * liminf/limsup it truncates. The prefix minimum converges to the infimum
 * over the whole family, which can undershoot the liminf (for the golden
 * ratio over the rationals the infimum 2 - phi is attained at 2/1, below
 * c(phi) = 1/sqrt 5), so the record also carries tailEstimate, the same
 * statistic restricted to heights in (sMax/2, sMax], as the liminf
 * estimator.
 */
struct ApproximationRecord {
  double target = 0;
  std::vector<std::pair<double, double>> entries;
  double finalEstimate = 0;
  double tailEstimate = 0;
};

/** Record of min_{H(z) <= s} H(z) d(y,z) (nonincreasing in s); tailEstimate
 *  restricts the minimum to H(z) in (sMax/2, sMax]. */
ApproximationRecord approxConstantRecord(double y, const ApproxFamily& family,
                                         double sMax);

/** Record of the exponent estimator -ln(min_{H(z) <= s} d(y,z)) / ln s; the
 *  underlying minimal distances are nonincreasing in s. */
ApproximationRecord approxExponentRecord(double y, const ApproxFamily& family,
                                         double sMax);

/** Card{z : H(z) <= sMax, d(y,z) <= psi(H(z))}. */
long wellApproximableCount(double y, const std::function<double(double)>& psi,
                           const ApproxFamily& family, double sMax);

/** Max over samples of approxConstantRecord(y, golden-ratio orbit, sMax);
 *  finite-s estimates only ever overshoot the liminf, so the one-sided
 *  Hurwitz bound is the testable property. */
double hurwitzCheck(const std::vector<double>& samples, double sMax);

}  // namespace oc

#endif
