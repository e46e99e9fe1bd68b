#ifndef ORBITCOUNT_ZETA_HPP
#define ORBITCOUNT_ZETA_HPP

// Numerical evaluation of zeta values: Hurwitz zeta by Euler-Maclaurin,
// Dirichlet L-functions of the quadratic characters attached to the
// supported imaginary quadratic fields, and the field zeta values
// zeta_K(s) = zeta(s) * L(s, chi_D) used in the counting constants.

#include <stdexcept>

namespace oc {

/** Field tag: 0 means Q; otherwise a supported discriminant {-3,-4,-8}. */
enum class FieldTag { Rational = 0, Dm3 = -3, Dm4 = -4, Dm8 = -8 };

FieldTag fieldTagFromDisc(int disc);

/** Hurwitz zeta zeta(s,a), s > 1, a > 0 (Euler-Maclaurin; ~1e-13). */
double hurwitzZeta(double s, double a, int cutoff = 40);

/** Riemann zeta, s > 1. */
double riemannZeta(double s, int cutoff = 40);

/** L(s, chi_D) for D in {-3,-4,-8}, s > 1. */
double dirichletL(int disc, double s, int cutoff = 40);

/** zeta(s) for the rational tag; zeta_K(s) = zeta(s) L(s, chi_D) otherwise.
 *  s in {2,3}; accurate to >= 10 significant digits. */
double zetaConstants(FieldTag K, int s, int cutoff = 40);

/** Unit group order |O_K^x| (6, 4, 2) and |D_K| for the supported rings. */
int unitCount(FieldTag K);
int absDisc(FieldTag K);

}  // namespace oc

#endif
