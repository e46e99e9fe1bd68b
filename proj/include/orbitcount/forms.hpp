#ifndef ORBITCOUNT_FORMS_HPP
#define ORBITCOUNT_FORMS_HPP

// Integral indefinite binary quadratic forms (A,B,C) of positive non-square
// discriminant: the form/root dictionary with quadratic irrationals, Gauss
// reduction cycles (deciding proper equivalence), fundamental automorphs and
// regulators via the Pell equation.

#include <vector>

#include "orbitcount/quadirr.hpp"

namespace oc {

/** Primitive integral form A x^2 + B x y + C y^2, disc = B^2-4AC > 0 non-square. */
class BinaryQuadraticForm {
 public:
  BinaryQuadraticForm(Int A, Int B, Int C);

  const Int& A() const { return A_; }
  const Int& B() const { return B_; }
  const Int& C() const { return C_; }
  Int disc() const { return B_ * B_ - 4 * A_ * C_; }

  bool operator==(const BinaryQuadraticForm& o) const {
    return A_ == o.A_ && B_ == o.B_ && C_ == o.C_;
  }
  bool operator<(const BinaryQuadraticForm& o) const;

 private:
  Int A_, B_, C_;
};

/** Distinguished root (-B + sqrt(disc)) / (2A); negative A selects the
 *  Galois-conjugate root. */
QuadraticIrrational rootOfForm(const BinaryQuadraticForm& f);

/** The primitive integral form whose distinguished root is alpha. */
BinaryQuadraticForm formOfQI(const QuadraticIrrational& alpha);

/** Full cycle of reduced forms equivalent to f (sorted canonically); two
 *  forms are properly equivalent iff their cycles coincide as sets. */
std::vector<BinaryQuadraticForm> gaussReduceCycle(const BinaryQuadraticForm& f);

/** Proper (PSL2(Z)) equivalence via cycle comparison. */
bool equivalentForms(const BinaryQuadraticForm& f, const BinaryQuadraticForm& g);

/** Fundamental solution (t, u), u >= 1 minimal, of t^2 - D u^2 = 4 or -4
 *  (the -4 solution is returned when it exists; second member tells which). */
struct PellSolution {
  Int t, u;
  int rhs;  // +4 or -4
};
PellSolution fundamentalPell(const Int& D);

/** Generator of the (projective) automorphism group of f: the matrix
 *  [[(t-Bu)/2, -Cu], [Au, (t+Bu)/2]] built from the fundamental t^2-Du^2=4
 *  solution. Fixes both roots of f. */
UnimodularMatrix fundamentalAutomorph(const BinaryQuadraticForm& f);

/** Regulator of the order Z + Z*alpha0: log of its fundamental unit > 1.
 *  Requires alpha0 to be an algebraic integer. */
double regulatorOfLattice(const QuadraticIrrational& alpha0);

/** Log of the fundamental norm-one unit > 1 of the order Z + Z*alpha0,
 *  i.e. log of the eigenvalue of fundamentalAutomorph(formOfQI(alpha0)).
 *  Equals regulatorOfLattice when the fundamental unit has norm +1 and
 *  twice it when the norm is -1; this is the regulator governing the
 *  PSL_2(Z)-stabilizer of alpha0 (half the closed-geodesic length), and
 *  the one appearing in the counting and trace-equidistribution slopes. */
double stabilizerRegulator(const QuadraticIrrational& alpha0);

/** True iff alpha is an algebraic integer (integral trace and norm). */
bool isIntegralQI(const QuadraticIrrational& alpha);

}  // namespace oc

#endif
