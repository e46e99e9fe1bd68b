#ifndef ORBITCOUNT_CHAINS_HPP
#define ORBITCOUNT_CHAINS_HPP

// Chains: intersections of complex projective lines with the hypersphere
// (nonempty and not a single point), their reflexions, centers, and gauge
// diameters.

#include <stdexcept>

#include "orbitcount/heisenberg.hpp"

namespace oc {

class NotAChainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InfiniteChainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** A chain, stored as the projective line spanned by two points. */
struct Chain {
  ProjectivePoint p1, p2;
  bool isFinite;  // false iff [1:0:0] lies on the line
};

/** The vertical chain over w: fiber of the vertical projection, plus infinity. */
Chain verticalChain(Cplx w);

/** Chain cut out by the line through two (distinct) projective points;
 *  throws NotAChainError unless the restriction of h is indefinite. */
Chain chainFromLine(const ProjectivePoint& p1, const ProjectivePoint& p2);

/** The order-2 complex projective map fixing the line pointwise. */
UnitaryH reflexionInLine(const ProjectivePoint& p1, const ProjectivePoint& p2);

/** Center of a finite chain: image of infinity under the reflexion. */
HeisPoint chainCenter(const Chain& c);

enum class Gauge { Cygan, ModCygan };

/** Sup of the gauge over pairs of points of a finite chain (relative
 *  tolerance 1e-6; dense sampling plus golden-section refinement). */
double chainDiameter(const Chain& c, Gauge gauge);

Chain applyPSU(const UnitaryH& g, const Chain& c);

/** Points of the chain, parametrized by theta in [0, 2 pi); for infinite
 *  chains one parameter value maps to infinity. */
HeisExt chainPoint(const Chain& c, double theta);

}  // namespace oc

#endif
