#ifndef ORBITCOUNT_HEISENBERG_HPP
#define ORBITCOUNT_HEISENBERG_HPP

// The 3-dimensional Heisenberg group {(w0,w) : 2 Re w0 = |w|^2} with the
// Cygan and modified Cygan gauges and its Haar measure; the Hermitian form h
// of signature (1,2), the hypersphere embedding into the complex projective
// plane, and the projective unitary action.

#include <array>
#include <complex>

#include "orbitcount/imagquad.hpp"
#include "orbitcount/quadirr.hpp"

namespace oc {

using Cplx = std::complex<double>;

/** Group element (w0, w) with 2 Re w0 = |w|^2 (validated to 1e-12). */
struct HeisPoint {
  Cplx w0, w;
  HeisPoint(Cplx w0_, Cplx w_);
  static HeisPoint identity() { return {0.0, 0.0}; }
  /** Point from coordinates x = Re w, y = Im w, t = 2 Im w0. */
  static HeisPoint fromXYZ(double x, double y, double t);
};

/** (x, y, t) coordinates: x = Re w, y = Im w, t = 2 Im w0. */
std::array<double, 3> xyzCoords(const HeisPoint& p);

HeisPoint heisMul(const HeisPoint& p, const HeisPoint& q);
HeisPoint heisInv(const HeisPoint& p);

/** Cygan gauge of p, sqrt(2 |w0|) = ((x^2+y^2)^2 + t^2)^(1/4). */
double cyganNorm(const HeisPoint& p);
/** Left-invariant Cygan distance |q^{-1} p|_Cyg. */
double cyganDist(const HeisPoint& p, const HeisPoint& q);

/** Modified Cygan gauge 2|w0| / sqrt(|w|^2 + 2|w0|) and its left-invariant
 *  two-point form (sandwiched between d_Cyg/sqrt(2) and d_Cyg; may fail the
 *  triangle inequality). */
double modCyganNorm(const HeisPoint& p);
double modCyganDist(const HeisPoint& p, const HeisPoint& q);

/** Haar measure (density d(Im w0) d(Re w) d(Im w) = (1/2) dx dy dt) of the
 *  Cygan ball B(0,R); equals (pi^2/4) R^4. */
double haarBallVolume(double R);

/** Point of the complex projective plane, stored as a lift. */
struct ProjectivePoint {
  Cplx z0, z1, z2;
  ProjectivePoint(Cplx a, Cplx b, Cplx c);
  /** Canonical lift: last nonzero coordinate scaled to 1. */
  ProjectivePoint normalized() const;
  bool sameAs(const ProjectivePoint& o, double tol = 1e-9) const;
};

/** Hermitian form h(z) = -z0 conj(z2) - z2 conj(z0) + |z1|^2. */
double hermitianH(const ProjectivePoint& z);

/** Sesquilinear form phi(z, w) (linear in z, antilinear in w) polarizing h. */
Cplx hermitianPhi(const ProjectivePoint& z, const ProjectivePoint& w);

/** Heisenberg group with its point at infinity (boundary model). */
struct HeisExt {
  bool isInf = false;
  HeisPoint p = HeisPoint::identity();
  static HeisExt infinity() { return {true, HeisPoint::identity()}; }
  static HeisExt at(const HeisPoint& q) { return {false, q}; }
};

/** (w0, w) -> [w0 : w : 1], infinity -> [1 : 0 : 0]. */
ProjectivePoint embedHeis(const HeisExt& p);

/** Inverse of embedHeis; requires hermitianH(z) ~ 0. */
HeisExt unembedHeis(const ProjectivePoint& z);

/** Projective transformation preserving h up to a positive scalar
 *  (validated at construction to 1e-8). */
class UnitaryH {
 public:
  explicit UnitaryH(const std::array<std::array<Cplx, 3>, 3>& m);
  static UnitaryH identity();
  /** Heisenberg left translation by (g0, g), 2 Re g0 = |g|^2. */
  static UnitaryH heisTranslation(Cplx g0, Cplx g);
  /** Rotation diag(1, u, 1), |u| = 1. */
  static UnitaryH rotation(Cplx u);
  /** The inversion [z0:z1:z2] -> [z2:-z1:z0]. */
  static UnitaryH inversion();

  const std::array<std::array<Cplx, 3>, 3>& m() const { return m_; }
  UnitaryH operator*(const UnitaryH& o) const;

 private:
  UnitaryH() = default;
  std::array<std::array<Cplx, 3>, 3> m_{};
  void validate() const;
};

ProjectivePoint applyPSU(const UnitaryH& g, const ProjectivePoint& z);
HeisExt applyPSU(const UnitaryH& g, const HeisExt& p);

/**
 * Rational point (a/c, b/c) of the Heisenberg group over O_K: c != 0,
 * 2 Re(a conj(c)) = |b|^2, and gcd(a,b,c) a unit. Stored unit-canonically
 * (c in the canonical sector).
 */
struct HeisRationalPoint {
  ImagQuadInteger a, b, c;
  HeisRationalPoint(ImagQuadInteger a_, ImagQuadInteger b_, ImagQuadInteger c_);
  HeisPoint toHeisPoint() const;
  bool operator==(const HeisRationalPoint& o) const {
    return a == o.a && b == o.b && c == o.c;
  }
};

/** The w-parts available to integral Heisenberg translations over O_K:
 *  basis of the sublattice {g : |g|^2 in 2 Re O_K} (see countIntegralHeisBall). */
std::pair<ImagQuadInteger, ImagQuadInteger> integralTranslationLattice(FieldTag K);

/** Generator of the integral center {g0 : 2 Re g0 = 0}. */
ImagQuadInteger integralCenterGenerator(FieldTag K);

/** Some integral g0 with 2 Re g0 = n (n even when the ring requires it). */
ImagQuadInteger halfTraceLift(i64 n, FieldTag K);

/** Canonical representative of the left Heis3(O_K)-integral orbit of a
 *  rational point, also unit-canonical; idempotent. */
HeisRationalPoint canonicalHeisRational(const HeisRationalPoint& p);

/** Exact left action by an integral point (g0, g): requires g in the
 *  translation lattice and 2 Re g0 = |g|^2. */
HeisRationalPoint actIntegral(const ImagQuadInteger& g0, const ImagQuadInteger& g,
                              const HeisRationalPoint& p);

}  // namespace oc

#endif
