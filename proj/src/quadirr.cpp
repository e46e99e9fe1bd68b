#include "orbitcount/quadirr.hpp"

#include <cmath>

namespace oc {

bool isSquarefree(long n) {
  if (n < 1) return false;
  for (long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

RealQuadratic::RealQuadratic(Rat a, Rat b, long d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d < 2 || !isSquarefree(d))
    throw DomainError("RealQuadratic: d must be squarefree and > 1");
  a_.canonicalize();
  b_.canonicalize();
}

void RealQuadratic::checkSameField(const RealQuadratic& o) const {
  if (d_ != o.d_ && !isRational() && !o.isRational())
    throw DomainError("RealQuadratic: mixed fields");
}

int RealQuadratic::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a and b*sqrt(d) have opposite signs: compare a^2 with b^2 d.
  Rat diff = a_ * a_ - b_ * b_ * d_;
  int sd = sgn(diff);
  if (sd == 0) return 0;  // cannot happen for squarefree d>1 with b!=0
  return sd > 0 ? sa : sb;
}

double RealQuadratic::toDouble() const {
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

RealQuadratic RealQuadratic::operator+(const RealQuadratic& o) const {
  checkSameField(o);
  long d = isRational() ? o.d_ : d_;
  return {a_ + o.a_, b_ + o.b_, d};
}

RealQuadratic RealQuadratic::operator-(const RealQuadratic& o) const {
  return *this + (-o);
}

RealQuadratic RealQuadratic::operator*(const RealQuadratic& o) const {
  checkSameField(o);
  long d = isRational() ? o.d_ : d_;
  return {a_ * o.a_ + b_ * o.b_ * d, a_ * o.b_ + b_ * o.a_, d};
}

RealQuadratic RealQuadratic::inverse() const {
  if (isZero()) throw DomainError("RealQuadratic: division by zero");
  Rat n = norm();
  return {a_ / n, -b_ / n, d_};
}

RealQuadratic RealQuadratic::operator/(const RealQuadratic& o) const {
  checkSameField(o);
  return *this * o.inverse();
}

bool RealQuadratic::operator==(const RealQuadratic& o) const {
  if (a_ != o.a_) return false;
  if (b_ == 0 && o.b_ == 0) return true;
  return b_ == o.b_ && d_ == o.d_;
}

QuadraticIrrational::QuadraticIrrational(RealQuadratic v) : v_(std::move(v)) {
  if (v_.b() == 0)
    throw DomainError("QuadraticIrrational: value must be irrational");
}

QuadraticIrrational goldenRatio() {
  return QuadraticIrrational(RealQuadratic(Rat(1, 2), Rat(1, 2), 5));
}

bool ExtQuad::operator==(const ExtQuad& o) const {
  if (isInfinity() || o.isInfinity()) return isInfinity() == o.isInfinity();
  return value() == o.value();
}

UnimodularMatrix::UnimodularMatrix(Int m11, Int m12, Int m21, Int m22)
    : m11_(std::move(m11)), m12_(std::move(m12)), m21_(std::move(m21)),
      m22_(std::move(m22)) {
  if (m11_ * m22_ - m12_ * m21_ != 1)
    throw DomainError("UnimodularMatrix: determinant must be 1");
  // canonical representative of {M, -M}
  int s = sgn(m11_);
  if (s == 0) s = sgn(m12_);
  if (s == 0) s = sgn(m21_);
  if (s < 0) {
    m11_ = -m11_;
    m12_ = -m12_;
    m21_ = -m21_;
    m22_ = -m22_;
  }
}

UnimodularMatrix UnimodularMatrix::operator*(const UnimodularMatrix& o) const {
  return {m11_ * o.m11_ + m12_ * o.m21_, m11_ * o.m12_ + m12_ * o.m22_,
          m21_ * o.m11_ + m22_ * o.m21_, m21_ * o.m12_ + m22_ * o.m22_};
}

UnimodularMatrix UnimodularMatrix::inverse() const {
  return {m22_, -m12_, -m21_, m11_};
}

bool UnimodularMatrix::operator==(const UnimodularMatrix& o) const {
  return m11_ == o.m11_ && m12_ == o.m12_ && m21_ == o.m21_ && m22_ == o.m22_;
}

ExtQuad mobiusApply(const UnimodularMatrix& m, const ExtQuad& x) {
  long d;
  RealQuadratic num(0, 0, 5), den(0, 0, 5);
  if (x.isInfinity()) {
    if (sgn(m.m21()) == 0) return ExtQuad::infinity();
    return ExtQuad(RealQuadratic(Rat(m.m11()) / Rat(m.m21()), 0, 5));
  }
  d = x.value().d();
  RealQuadratic a = RealQuadratic::rational(Rat(m.m11()), d);
  RealQuadratic b = RealQuadratic::rational(Rat(m.m12()), d);
  RealQuadratic c = RealQuadratic::rational(Rat(m.m21()), d);
  RealQuadratic e = RealQuadratic::rational(Rat(m.m22()), d);
  num = a * x.value() + b;
  den = c * x.value() + e;
  if (den.isZero()) return ExtQuad::infinity();
  return ExtQuad(num / den);
}

QuadraticIrrational galoisConjugate(const QuadraticIrrational& alpha) {
  return QuadraticIrrational(alpha.value().conj());
}

Rat traceQI(const QuadraticIrrational& alpha) { return alpha.value().trace(); }

double heightQI(const QuadraticIrrational& alpha) {
  return 1.0 / (std::abs(alpha.value().b().get_d()) *
                std::sqrt(static_cast<double>(alpha.d())));
}

Rat heightSquaredQI(const QuadraticIrrational& alpha) {
  const Rat& b = alpha.value().b();
  return Rat(1) / (b * b * alpha.d());
}

namespace {

// Difference u - v in P^1, where infinity minus anything is treated through
// the standard cross-ratio limit conventions (handled by the caller).
struct CrDiff {
  bool omit;          // term dropped because one argument is infinity
  RealQuadratic val;  // meaningful iff !omit
};

CrDiff diff(const ExtQuad& u, const ExtQuad& v, long d) {
  if (u.isInfinity() || v.isInfinity())
    return {true, RealQuadratic::rational(Rat(1), d)};
  return {false, u.value() - v.value()};
}

}  // namespace

ExtQuad crossRatio(const ExtQuad& a, const ExtQuad& b, const ExtQuad& c,
                   const ExtQuad& d) {
  const ExtQuad* pts[4] = {&a, &b, &c, &d};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (*pts[i] == *pts[j])
        throw DomainError("crossRatio: arguments must be pairwise distinct");
  long fd = 5;
  for (const ExtQuad* p : pts)
    if (!p->isInfinity()) fd = p->value().d();
  // [a,b,c,d] = ((c-a)(d-b)) / ((c-b)(d-a)); each factor involving infinity
  // cancels against the matching factor on the other side.
  CrDiff ca = diff(c, a, fd), db = diff(d, b, fd), cb = diff(c, b, fd),
         da = diff(d, a, fd);
  RealQuadratic num = RealQuadratic::rational(Rat(1), fd);
  RealQuadratic den = num;
  if (!ca.omit) num = num * ca.val;
  if (!db.omit) num = num * db.val;
  if (!cb.omit) den = den * cb.val;
  if (!da.omit) den = den * da.val;
  // an infinite argument appears in exactly one numerator and one denominator
  // factor, so the omissions always balance.
  if (den.isZero()) return ExtQuad::infinity();
  return ExtQuad(num / den);
}

RealQuadratic relativeHeightExact(const QuadraticIrrational& alpha0,
                                  const QuadraticIrrational& beta) {
  if (alpha0.d() != beta.d())
    throw DomainError("relativeHeightExact: inputs must share a field");
  const RealQuadratic& a0 = alpha0.value();
  const RealQuadratic& b0 = beta.value();
  RealQuadratic a0s = a0.conj(), bs = b0.conj();
  if (b0 == a0 || b0 == a0s)
    throw DomainError("relativeHeight: beta coincides with alpha0 or its conjugate");
  ExtQuad r1 = crossRatio(ExtQuad(a0), ExtQuad(b0), ExtQuad(a0s), ExtQuad(bs));
  ExtQuad r2 = crossRatio(ExtQuad(a0), ExtQuad(bs), ExtQuad(a0s), ExtQuad(b0));
  RealQuadratic m1 = r1.value().abs();
  RealQuadratic m2 = r2.value().abs();
  const RealQuadratic& mx = (m2 < m1) ? m1 : m2;
  return mx.inverse();
}

double relativeHeight(const QuadraticIrrational& alpha0,
                      const QuadraticIrrational& beta) {
  if (alpha0.d() == beta.d())
    return relativeHeightExact(alpha0, beta).toDouble();
  // mixed fields: evaluate the cross-ratios in long double
  long double a0 = alpha0.value().toDouble();
  long double a0s = galoisConjugate(alpha0).value().toDouble();
  long double b = beta.value().toDouble();
  long double bs = galoisConjugate(beta).value().toDouble();
  auto cr = [](long double a, long double b2, long double c, long double d2) {
    return ((c - a) * (d2 - b2)) / ((c - b2) * (d2 - a));
  };
  long double m = std::max(std::fabs(cr(a0, b, a0s, bs)), std::fabs(cr(a0, bs, a0s, b)));
  return static_cast<double>(1.0L / m);
}

}  // namespace oc
