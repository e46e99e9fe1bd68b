#include "orbitcount/imagquad.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oc {

ImagQuadInteger::ImagQuadInteger(i64 x, i64 y, FieldTag K)
    : x_(x), y_(y), K_(K) {
  if (K == FieldTag::Rational)
    throw std::domain_error("ImagQuadInteger: needs an imaginary quadratic tag");
}

ImagQuadInteger ImagQuadInteger::operator+(const ImagQuadInteger& o) const {
  return {x_ + o.x_, y_ + o.y_, K_};
}

ImagQuadInteger ImagQuadInteger::operator-(const ImagQuadInteger& o) const {
  return {x_ - o.x_, y_ - o.y_, K_};
}

ImagQuadInteger ImagQuadInteger::operator*(const ImagQuadInteger& o) const {
  // omega^2 = omega - 1 (D=-3), -1 (D=-4), -2 (D=-8)
  i64 xx = x_ * o.x_, cross = x_ * o.y_ + y_ * o.x_, yy = y_ * o.y_;
  switch (K_) {
    case FieldTag::Dm3: return {xx - yy, cross + yy, K_};
    case FieldTag::Dm4: return {xx - yy, cross, K_};
    default: return {xx - 2 * yy, cross, K_};
  }
}

ImagQuadInteger ImagQuadInteger::conj() const {
  if (K_ == FieldTag::Dm3) return {x_ + y_, -y_, K_};  // conj(omega) = 1-omega
  return {x_, -y_, K_};
}

i64 ImagQuadInteger::norm() const {
  switch (K_) {
    case FieldTag::Dm3: return x_ * x_ + x_ * y_ + y_ * y_;
    case FieldTag::Dm4: return x_ * x_ + y_ * y_;
    default: return x_ * x_ + 2 * y_ * y_;
  }
}

i64 ImagQuadInteger::twoRe() const {
  return K_ == FieldTag::Dm3 ? 2 * x_ + y_ : 2 * x_;
}

std::complex<double> ImagQuadInteger::toComplex() const {
  return {0.5 * twoRe(), imInt() * imScale(K_)};
}

double imScale(FieldTag K) {
  switch (K) {
    case FieldTag::Dm3: return std::sqrt(3.0) / 2.0;
    case FieldTag::Dm4: return 1.0;
    case FieldTag::Dm8: return std::sqrt(2.0);
    default: throw std::domain_error("imScale: imaginary quadratic tags only");
  }
}

std::pair<i64, i64> imScaleSquared(FieldTag K) {
  switch (K) {
    case FieldTag::Dm3: return {3, 4};
    case FieldTag::Dm4: return {1, 1};
    default: return {2, 1};
  }
}

std::vector<ImagQuadInteger> ringUnits(FieldTag K) {
  std::vector<ImagQuadInteger> out;
  ImagQuadInteger u(1, 0, K);
  ImagQuadInteger root = (K == FieldTag::Dm8) ? ImagQuadInteger(-1, 0, K)
                                              : ImagQuadInteger(0, 1, K);
  int n = unitCount(K);
  for (int k = 0; k < n; ++k) {
    out.push_back(u);
    u = u * root;
  }
  return out;
}

IqDivRem iqDivRem(const ImagQuadInteger& a, const ImagQuadInteger& b) {
  if (b.isZero()) throw std::domain_error("iqDivRem: division by zero");
  ImagQuadInteger num = a * b.conj();
  i64 n = b.norm();
  auto roundDiv = [](i64 p, i64 q) {  // nearest integer to p/q, q > 0
    return floorDiv(2 * p + q, 2 * q);
  };
  ImagQuadInteger q(roundDiv(num.x(), n), roundDiv(num.y(), n), a.field());
  ImagQuadInteger r = a - q * b;
  return {q, r};
}

ImagQuadInteger iqGcd(ImagQuadInteger a, ImagQuadInteger b) {
  while (!b.isZero()) {
    ImagQuadInteger r = iqDivRem(a, b).r;
    a = b;
    b = r;
  }
  return a;
}

bool isUnit(const ImagQuadInteger& v) { return v.norm() == 1; }

bool inUnitSector(const ImagQuadInteger& v) {
  if (v.isZero()) throw std::domain_error("inUnitSector: zero input");
  i64 re2 = v.twoRe(), im = v.imInt();
  switch (v.field()) {
    case FieldTag::Dm8:  // arg in [0, pi)
      return im > 0 || (im == 0 && re2 > 0);
    case FieldTag::Dm4:  // arg in [0, pi/2)
      return im >= 0 && re2 > 0;
    case FieldTag::Dm3:  // arg in [0, pi/3): Im v >= 0 and Im(conj(omega) v) < 0
      return im >= 0 && v.x() > 0;
    default:
      throw std::domain_error("inUnitSector: bad tag");
  }
}

ImagQuadInteger unitCanonical(const ImagQuadInteger& v) {
  for (const auto& u : ringUnits(v.field())) {
    ImagQuadInteger w = u * v;
    if (inUnitSector(w)) return w;
  }
  throw std::logic_error("unitCanonical: no sector representative found");
}

std::vector<ImagQuadInteger> ringElementsByNorm(FieldTag K, i64 normBound,
                                                bool sectorOnly) {
  std::vector<ImagQuadInteger> out;
  if (normBound < 1) return out;
  // coordinate box bound: |y| <= sqrt(normBound / (|D|/4)) etc.; use a safe
  // rectangle and filter by the exact norm
  i64 ymax = 0, xmax = 0;
  switch (K) {
    case FieldTag::Dm3:
      ymax = isqrt64(4 * normBound / 3) + 1;
      xmax = isqrt64(4 * normBound / 3) + 1;
      break;
    case FieldTag::Dm4:
      ymax = isqrt64(normBound) + 1;
      xmax = ymax;
      break;
    default:
      ymax = isqrt64(normBound / 2) + 1;
      xmax = isqrt64(normBound) + 1;
      break;
  }
  for (i64 y = -ymax; y <= ymax; ++y) {
    for (i64 x = -xmax; x <= xmax; ++x) {
      if (x == 0 && y == 0) continue;
      ImagQuadInteger v(x, y, K);
      if (v.norm() > normBound) continue;
      if (sectorOnly && !inUnitSector(v)) continue;
      out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) {
    if (p.norm() != q.norm()) return p.norm() < q.norm();
    if (p.x() != q.x()) return p.x() < q.x();
    return p.y() < q.y();
  });
  return out;
}

CoordLattice::CoordLattice(const ImagQuadInteger& g1, const ImagQuadInteger& g2) {
  // columns (g1.x, g1.y), (g2.x, g2.y); build triangular basis (a,0), (b,g)
  i64 x1 = g1.x(), y1 = g1.y(), x2 = g2.x(), y2 = g2.y();
  i64 det = x1 * y2 - x2 * y1;
  if (det == 0) throw std::domain_error("CoordLattice: generators dependent");
  // g = gcd of y-components, achieved by u*g1 + v*g2
  i64 u = 1, v = 0, g = y1, b = x1;
  {
    // extended gcd on (y1, y2)
    i64 r0 = y1, r1 = y2, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
      i64 q = r0 / r1;
      i64 r2 = r0 - q * r1, s2 = s0 - q * s1, t2 = t0 - q * t1;
      r0 = r1; r1 = r2; s0 = s1; s1 = s2; t0 = t1; t1 = t2;
    }
    g = r0; u = s0; v = t0;
    if (g < 0) { g = -g; u = -u; v = -v; }
    if (g == 0) {
      // both generators horizontal: impossible since det != 0 unless y=0 for
      // both, which contradicts independence
      throw std::domain_error("CoordLattice: degenerate");
    }
    b = u * x1 + v * x2;
  }
  a_ = std::abs(det) / g;  // generator of the intersection with the x-axis
  g_ = g;
  b_ = oc::mod(b, a_);
}

std::vector<ImagQuadInteger> CoordLattice::residues(FieldTag K) const {
  std::vector<ImagQuadInteger> out;
  out.reserve(static_cast<std::size_t>(a_ * g_));
  for (i64 y = 0; y < g_; ++y)
    for (i64 x = 0; x < a_; ++x) out.emplace_back(x, y, K);
  return out;
}

ImagQuadInteger CoordLattice::reduce(const ImagQuadInteger& v) const {
  i64 k = floorDiv(v.y(), g_);
  i64 x = v.x() - k * b_;
  i64 y = v.y() - k * g_;
  x = oc::mod(x, a_);
  return {x, y, v.field()};
}

}  // namespace oc
