#ifndef ORBITCOUNT_IMAGQUAD_HPP
#define ORBITCOUNT_IMAGQUAD_HPP

// Integers of the imaginary quadratic fields with discriminant -3, -4, -8
// (all norm-Euclidean): exact ring arithmetic in coordinates x + y*omega,
// Euclidean division and gcds, unit normalization into a fixed sector, and
// lattice/residue helpers used by the Heisenberg enumerators.

#include <complex>
#include <vector>

#include "orbitcount/intutil.hpp"
#include "orbitcount/zeta.hpp"

namespace oc {

/**
 * Element x + y*omega of O_K, where omega is (1+i sqrt 3)/2, i, i sqrt 2
 * for D_K = -3, -4, -8 respectively.
 */
class ImagQuadInteger {
 public:
  ImagQuadInteger(i64 x, i64 y, FieldTag K);
  static ImagQuadInteger zero(FieldTag K) { return {0, 0, K}; }
  static ImagQuadInteger one(FieldTag K) { return {1, 0, K}; }

  i64 x() const { return x_; }
  i64 y() const { return y_; }
  FieldTag field() const { return K_; }

  bool isZero() const { return x_ == 0 && y_ == 0; }
  ImagQuadInteger operator-() const { return {-x_, -y_, K_}; }
  ImagQuadInteger operator+(const ImagQuadInteger& o) const;
  ImagQuadInteger operator-(const ImagQuadInteger& o) const;
  ImagQuadInteger operator*(const ImagQuadInteger& o) const;
  bool operator==(const ImagQuadInteger& o) const {
    return x_ == o.x_ && y_ == o.y_ && K_ == o.K_;
  }

  /** Complex conjugate (stays in the ring). */
  ImagQuadInteger conj() const;

  /** Field norm |v|^2 (a nonnegative integer). */
  i64 norm() const;

  /** 2*Re(v), always an integer. */
  i64 twoRe() const;

  /** Integer coefficient of the imaginary part: Im(v) = imInt * imScale(K). */
  i64 imInt() const { return y_; }

  std::complex<double> toComplex() const;

 private:
  i64 x_, y_;
  FieldTag K_;
};

/** Im-part scale sqrt(|D|)/2 per ring (sqrt3/2, 1, sqrt2). */
double imScale(FieldTag K);
/** Square of imScale as an exact pair (num, den): 3/4, 1/1, 2/1. */
std::pair<i64, i64> imScaleSquared(FieldTag K);

/** The unit group, as ring elements (powers of the primitive root). */
std::vector<ImagQuadInteger> ringUnits(FieldTag K);

/** Euclidean division: q = round(a/b) coordinate-wise, r = a - q b with
 *  norm(r) < norm(b). */
struct IqDivRem {
  ImagQuadInteger q, r;
};
IqDivRem iqDivRem(const ImagQuadInteger& a, const ImagQuadInteger& b);

/** gcd by the Euclidean algorithm (unique up to units; not normalized). */
ImagQuadInteger iqGcd(ImagQuadInteger a, ImagQuadInteger b);

/** True iff v is a unit (norm 1). */
bool isUnit(const ImagQuadInteger& v);

/** True iff v lies in the canonical unit sector arg in [0, 2*pi/|O^x|)
 *  (v != 0). Exactly one of u*v over units u does. */
bool inUnitSector(const ImagQuadInteger& v);

/** The associate u*v lying in the canonical sector. */
ImagQuadInteger unitCanonical(const ImagQuadInteger& v);

/** All ring elements with 0 < |v|^2 <= normBound, canonical-sector reps only
 *  when sectorOnly, sorted deterministically. */
std::vector<ImagQuadInteger> ringElementsByNorm(FieldTag K, i64 normBound,
                                                bool sectorOnly);

/**
 * Residue system of Z^2-coordinates modulo the lattice spanned by two ring
 * elements g1, g2 (independent over R): a triangular basis (a,0), (b,g) with
 * a,g > 0, plus reduction into the fundamental cell [0,a) x [0,g).
 */
class CoordLattice {
 public:
  CoordLattice(const ImagQuadInteger& g1, const ImagQuadInteger& g2);
  i64 index() const { return a_ * g_; }
  /** All residues (as ring elements) in the fundamental cell. */
  std::vector<ImagQuadInteger> residues(FieldTag K) const;
  /** Reduce v into the fundamental cell. */
  ImagQuadInteger reduce(const ImagQuadInteger& v) const;

 private:
  i64 a_, b_, g_;  // basis (a,0), (b,g)
};

}  // namespace oc

#endif
