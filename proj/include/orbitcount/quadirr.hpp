#ifndef ORBITCOUNT_QUADIRR_HPP
#define ORBITCOUNT_QUADIRR_HPP

// Exact arithmetic in real quadratic fields Q(sqrt(d)): elements a + b*sqrt(d)
// with rational a, b and squarefree d > 1, their Galois conjugates, traces and
// heights, the projective line over the field, the PSL2(Z) homography action,
// and cross-ratio based relative heights.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace oc {

using Int = mpz_class;
using Rat = mpq_class;

/** Thrown when an operation receives input outside its domain. */
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/** True iff n is squarefree (n >= 1). */
bool isSquarefree(long n);

/**
 * Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)),
 * d squarefree > 1. Purely rational values carry d as well (with b = 0) so
 * that mixed arithmetic stays within one field.
 */
class RealQuadratic {
 public:
  RealQuadratic(Rat a, Rat b, long d);
  /** Rational element embedded in Q(sqrt(d)). */
  static RealQuadratic rational(Rat a, long d) { return {std::move(a), 0, d}; }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  long d() const { return d_; }

  RealQuadratic conj() const { return {a_, -b_, d_}; }
  Rat trace() const { return 2 * a_; }
  Rat norm() const { return a_ * a_ - b_ * b_ * d_; }

  bool isRational() const { return b_ == 0; }
  bool isZero() const { return a_ == 0 && b_ == 0; }

  /** Exact sign of the real value (-1, 0, +1). */
  int sign() const;

  double toDouble() const;

  RealQuadratic operator-() const { return {-a_, -b_, d_}; }
  RealQuadratic operator+(const RealQuadratic& o) const;
  RealQuadratic operator-(const RealQuadratic& o) const;
  RealQuadratic operator*(const RealQuadratic& o) const;
  RealQuadratic operator/(const RealQuadratic& o) const;
  RealQuadratic inverse() const;

  bool operator==(const RealQuadratic& o) const;
  bool operator!=(const RealQuadratic& o) const { return !(*this == o); }
  /** Exact order comparison as real numbers. */
  bool operator<(const RealQuadratic& o) const { return (*this - o).sign() < 0; }

  RealQuadratic abs() const { return sign() < 0 ? -*this : *this; }

 private:
  Rat a_, b_;
  long d_;
  void checkSameField(const RealQuadratic& o) const;
};

/** An irrational element of Q(sqrt(d)): b != 0 by construction. */
class QuadraticIrrational {
 public:
  explicit QuadraticIrrational(RealQuadratic v);
  const RealQuadratic& value() const { return v_; }
  long d() const { return v_.d(); }

 private:
  RealQuadratic v_;
};

/** Golden ratio (1+sqrt(5))/2. */
QuadraticIrrational goldenRatio();

/** Point of P^1(Q(sqrt(d))): a field value or infinity. */
class ExtQuad {
 public:
  ExtQuad(RealQuadratic v) : v_(std::move(v)) {}  // NOLINT(implicit)
  static ExtQuad infinity() { return ExtQuad(); }

  bool isInfinity() const { return !v_.has_value(); }
  const RealQuadratic& value() const {
    if (!v_) throw DomainError("ExtQuad: value() on infinity");
    return *v_;
  }
  bool operator==(const ExtQuad& o) const;

 private:
  ExtQuad() = default;
  std::optional<RealQuadratic> v_;
};

/** Element of PSL2(Z): integer matrix of determinant 1, stored as the
 *  representative of {M, -M} whose first nonzero entry is positive. */
class UnimodularMatrix {
 public:
  UnimodularMatrix(Int m11, Int m12, Int m21, Int m22);
  static UnimodularMatrix identity() { return {1, 0, 0, 1}; }

  const Int& m11() const { return m11_; }
  const Int& m12() const { return m12_; }
  const Int& m21() const { return m21_; }
  const Int& m22() const { return m22_; }

  UnimodularMatrix operator*(const UnimodularMatrix& o) const;
  UnimodularMatrix inverse() const;
  bool operator==(const UnimodularMatrix& o) const;

 private:
  Int m11_, m12_, m21_, m22_;
};

/** Homography action (m11 x + m12)/(m21 x + m22) on P^1(Q(sqrt(d))). */
ExtQuad mobiusApply(const UnimodularMatrix& m, const ExtQuad& x);

/** Galois conjugate a - b*sqrt(d). */
QuadraticIrrational galoisConjugate(const QuadraticIrrational& alpha);

/** Trace alpha + alpha^sigma = 2a. */
Rat traceQI(const QuadraticIrrational& alpha);

/** Height 2/|alpha - alpha^sigma| = 1/(|b| sqrt(d)). */
double heightQI(const QuadraticIrrational& alpha);

/** Exact square of the height, 1/(b^2 d). */
Rat heightSquaredQI(const QuadraticIrrational& alpha);

/**
 * Cross-ratio [a,b,c,d] = ((c-a)(d-b)) / ((c-b)(d-a)) on the projective
 * line, with the standard conventions at infinity. Inputs must be pairwise
 * distinct.
 */
ExtQuad crossRatio(const ExtQuad& a, const ExtQuad& b, const ExtQuad& c,
                   const ExtQuad& d);

/**
 * Relative height 1 / max(|[a0,b,a0^s,b^s]|, |[a0,b^s,a0^s,b]|).
 * Exact when both arguments live in the same field; beta must avoid
 * {alpha0, alpha0^sigma}.
 */
double relativeHeight(const QuadraticIrrational& alpha0,
                      const QuadraticIrrational& beta);

/** Exact variant of relativeHeight (same-field inputs only). */
RealQuadratic relativeHeightExact(const QuadraticIrrational& alpha0,
                                  const QuadraticIrrational& beta);

}  // namespace oc

#endif
