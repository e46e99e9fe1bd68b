#ifndef ORBITCOUNT_HYPERBOLIC_HPP
#define ORBITCOUNT_HYPERBOLIC_HPP

// Upper half-plane geometry: distances, the Busemann cocycle, horoballs and
// geodesics as convex bodies, the isometric PSL2(Z) action, and lengths of
// common perpendiculars between disjoint bodies (closed forms, plus a
// numeric-minimization cross-check).

#include <variant>

#include "orbitcount/forms.hpp"
#include "orbitcount/quadirr.hpp"

namespace oc {

struct PointH2 {
  double x, y;  // y > 0
};

struct BoundaryPoint {
  bool isInf = false;
  double v = 0.0;
  static BoundaryPoint infinity() { return {true, 0.0}; }
  static BoundaryPoint at(double x) { return {false, x}; }
};

struct Geodesic {
  BoundaryPoint e1, e2;  // distinct endpoints
};

/** Horoball: size = Euclidean height of the horizontal boundary when the
 *  center is infinity, else the Euclidean diameter of the disc. */
struct Horoball {
  BoundaryPoint center;
  double size;  // > 0
};

using ConvexBody = std::variant<PointH2, Geodesic, Horoball>;

/** Thrown by perpLength when the bodies intersect, are tangent, or share an
 *  endpoint at infinity. */
struct NotDisjointError : DomainError {
  using DomainError::DomainError;
};

double distH2(const PointH2& p, const PointH2& q);

/** Busemann cocycle beta_xi(x,y), normalized so the horoball at xi through x
 *  is {y : beta_xi(x,y) >= 0}; for xi = infinity, beta = ln(y.y / x.y). */
double busemann(const BoundaryPoint& xi, const PointH2& x, const PointH2& y);

/** Length of the unique common perpendicular between disjoint bodies. */
double perpLength(const ConvexBody& a, const ConvexBody& b);

/** Same quantity by brute-force minimization of distH2 over the bodies
 *  (validation path; tolerance ~1e-6). */
double perpLengthNumeric(const ConvexBody& a, const ConvexBody& b);

/** Horoball at p/q with Euclidean diameter 1/(psi * q^2); psi >= 1. */
Horoball fordHoroball(const Rat& r, double psiValue);

/** True iff |xi - p/q| <= 1/(2 psi q^2), i.e. the vertical geodesic at xi
 *  meets the Ford horoball. */
bool meetsHoroball(double xi, const Rat& r, double psiValue);

/** Isometric action of PSL2(Z) on bodies (Mobius on centers/endpoints with
 *  the correct size transformation). */
ConvexBody actOnBody(const UnimodularMatrix& m, const ConvexBody& body);
PointH2 actOnPoint(const UnimodularMatrix& m, const PointH2& p);
BoundaryPoint actOnBoundary(const UnimodularMatrix& m, const BoundaryPoint& b);

/** Geodesic with endpoints alpha, alpha^sigma. */
Geodesic geodesicOfQI(const QuadraticIrrational& alpha);

}  // namespace oc

#endif
