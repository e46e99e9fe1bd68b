#ifndef ORBITCOUNT_ORBITS_HPP
#define ORBITCOUNT_ORBITS_HPP

// Deterministic bounded-height enumerators for the arithmetic families:
// Farey fractions, imaginary-quadratic rationals, quadratic-irrational
// orbits (absolute and relative), form-height rationals, Heisenberg rational
// points, integral Heisenberg lattice balls, and chains. Each enumerator is
// canonically sorted, parallelizable with bit-identical output, and has a
// brute-force oracle twin in the tests.

#include <cstdint>
#include <vector>

#include "orbitcount/chains.hpp"
#include "orbitcount/forms.hpp"
#include "orbitcount/heisenberg.hpp"
#include "orbitcount/imagquad.hpp"
#include "orbitcount/quadirr.hpp"

namespace oc {

/** All p/q in [lo, hi] with 1 <= q <= s and gcd(p, q) = 1, sorted by value. */
std::vector<Rat> enumerateFarey(double s, const Rat& lo, const Rat& hi,
                                int threads = 1);

/** Fraction p/q over an imaginary quadratic ring. */
struct IqRational {
  ImagQuadInteger p, q;
  bool operator==(const IqRational& o) const { return p == o.p && q == o.q; }
};

/**
 * All p/q with p, q in O_K coprime, 0 < |q| <= s, q unit-canonical, and
 * p/q in the closed box [xLo, xHi] x [yLo, yHi] (exact membership tests).
 */
std::vector<IqRational> enumerateImagQuadRationals(FieldTag K, double s,
                                                   const Rat& xLo, const Rat& xHi,
                                                   const Rat& yLo, const Rat& yHi,
                                                   int threads = 1);

/** An orbit element together with the form it is the distinguished root of. */
struct QuadOrbitItem {
  BinaryQuadraticForm form;
  QuadraticIrrational root;
};

/**
 * The PSL2(Z)-homography orbit of alpha0 (optionally together with its
 * Galois conjugates, which is the default), cut to heightQI <= s and
 * |traceQI| <= traceWindow. Enumerates forms of disc(alpha0) with
 * 2|A| <= s sqrt(disc) and |B| <= T |A|, keeping those properly equivalent
 * to alpha0's form (or its negative when conjugates are included).
 */
std::vector<QuadOrbitItem> enumerateQuadOrbitByForms(
    const QuadraticIrrational& alpha0, double s, double traceWindow,
    bool includeConjugates = true, int threads = 1);

/**
 * Fundamental-domain machinery for the action of the stabilizer of alpha0
 * on the quadratic irrationals: gamma0 is the fundamental automorph of
 * alpha0's form; F is a pair of bounded half-open rational intervals, one in
 * (alpha0^sigma, alpha0) and one outside, meeting every gamma0-orbit of
 * boundary points (other than the fixed points) exactly once.
 */
class RelativeOrbitContext {
 public:
  explicit RelativeOrbitContext(const QuadraticIrrational& alpha0);

  const QuadraticIrrational& alpha0() const { return alpha0_; }
  const BinaryQuadraticForm& form() const { return form_; }
  const UnimodularMatrix& gamma0() const { return gamma0_; }

  /** Exact membership of beta in F. */
  bool inFundamentalDomain(const QuadraticIrrational& beta) const;
  /** The gamma0-orbit representative of beta lying in F. */
  QuadraticIrrational canonicalize(const QuadraticIrrational& beta) const;
  /** Min distance from F to {alpha0, alpha0^sigma} (a positive lower bound). */
  double separation() const { return separation_; }

 private:
  QuadraticIrrational alpha0_;
  BinaryQuadraticForm form_;
  UnimodularMatrix gamma0_;
  UnimodularMatrix outerDir_ = UnimodularMatrix::identity();
  Rat f1lo_, f1hi_, f2lo_, f2hi_;  // half-open [lo, hi)
  double separation_ = 0;

  /** The automorph power moving inner-arc points upward. */
  UnimodularMatrix innerUp() const;
};

/** A relative-orbit element with its exact relative height. */
struct RelOrbitItem {
  BinaryQuadraticForm form;
  QuadraticIrrational beta;
  Rat height;
};

/**
 * Representatives, modulo the stabilizer of alpha0, of the orbit
 * PSL2(Z).beta0 with relative height H_alpha0 <= s. Requires alpha0, beta0
 * integral with equal form discriminants (same-disc closed form for the
 * height). Representatives are the orbit elements lying in F.
 */
std::vector<RelOrbitItem> enumerateRelativeOrbit(const QuadraticIrrational& alpha0,
                                                 const QuadraticIrrational& beta0,
                                                 double s, int threads = 1);

/**
 * All p/q in the window with |Q(p, q)| <= s; the window must be bounded
 * away from both roots of Q(t, 1) (checked exactly).
 */
std::vector<Rat> enumerateFormHeightRationals(const BinaryQuadraticForm& Q,
                                              double s, const Rat& lo,
                                              const Rat& hi, int threads = 1);

/**
 * Canonical representatives of Heis3(O_K-integral) \ Heis3(K-rational)
 * with 0 < |c| <= s, sorted deterministically.
 */
std::vector<HeisRationalPoint> enumerateHeisRationals(FieldTag K, double s,
                                                      int threads = 1);

/** Card(Heis3(Z[i]-integral) intersect closed Cygan ball B(0, R)). */
std::int64_t countIntegralHeisBall(double R);

/** Result of the (best-effort) chain enumeration. */
struct ChainEnumeration {
  struct Item {
    Chain chain;
    double diamMod;   // modified-Cygan diameter
    double diamCyg;   // Cygan diameter
    double projRadius;  // radius of the vertical projection circle
  };
  std::vector<Item> items;
  bool truncated = true;
};

/**
 * Finite chains in the PSU_h(O_K)-orbit of c0 reachable by generator words
 * with all matrix entries of modulus <= budget, with modified-Cygan diameter
 * >= eps, deduplicated by exact line equality and by the
 * stabilizer-of-infinity invariant signature. Always flagged truncated.
 * c0 must be spanned by points with O_K coordinates (checked to 1e-9).
 */
ChainEnumeration enumerateChains(FieldTag K, const Chain& c0, double eps,
                                 i64 budget);

}  // namespace oc

#endif
