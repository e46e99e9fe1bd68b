#include "orbitcount/heisenberg.hpp"

#include <cmath>
#include <stdexcept>

#include "orbitcount/quadirr.hpp"

namespace oc {

namespace {

constexpr double kPointTol = 1e-12;

double sq(double v) { return v * v; }

void checkHeisConstraint(Cplx w0, Cplx w) {
  double lhs = 2.0 * w0.real(), rhs = std::norm(w);
  double scale = std::max(1.0, std::max(std::fabs(lhs), rhs));
  if (std::fabs(lhs - rhs) > kPointTol * scale)
    throw DomainError("HeisPoint: 2 Re w0 != |w|^2");
}

}  // namespace

HeisPoint::HeisPoint(Cplx w0_, Cplx w_) : w0(w0_), w(w_) {
  checkHeisConstraint(w0, w);
}

HeisPoint HeisPoint::fromXYZ(double x, double y, double t) {
  return {{(x * x + y * y) / 2.0, t / 2.0}, {x, y}};
}

std::array<double, 3> xyzCoords(const HeisPoint& p) {
  return {p.w.real(), p.w.imag(), 2.0 * p.w0.imag()};
}

HeisPoint heisMul(const HeisPoint& p, const HeisPoint& q) {
  // (w0, w)(w0', w') = (w0 + w0' + w' conj(w), w + w')
  return {p.w0 + q.w0 + q.w * std::conj(p.w), p.w + q.w};
}

HeisPoint heisInv(const HeisPoint& p) { return {std::conj(p.w0), -p.w}; }

double cyganNorm(const HeisPoint& p) { return std::sqrt(2.0 * std::abs(p.w0)); }

double cyganDist(const HeisPoint& p, const HeisPoint& q) {
  return cyganNorm(heisMul(heisInv(q), p));
}

double modCyganNorm(const HeisPoint& p) {
  double a = 2.0 * std::abs(p.w0);
  if (a == 0.0) return 0.0;
  return a / std::sqrt(std::norm(p.w) + a);
}

double modCyganDist(const HeisPoint& p, const HeisPoint& q) {
  return modCyganNorm(heisMul(heisInv(q), p));
}

namespace {

template <class F>
double simpsonStep(const F& f, double a, double fa, double b, double fb,
                   double fm, double whole, double tol, int depth) {
  double m = (a + b) / 2.0;
  double lm = (a + m) / 2.0, rm = (m + b) / 2.0;
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::fabs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpsonStep(f, a, fa, m, fm, flm, left, tol / 2.0, depth - 1) +
         simpsonStep(f, m, fm, b, fb, frm, right, tol / 2.0, depth - 1);
}

template <class F>
double adaptiveSimpson(const F& f, double a, double b, double tol) {
  double fa = f(a), fb = f(b), fm = f((a + b) / 2.0);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpsonStep(f, a, fa, b, fb, fm, whole, tol, 40);
}

}  // namespace

double haarBallVolume(double R) {
  if (R <= 0.0) throw DomainError("haarBallVolume: R must be positive");
  // Haar(B(0,R)) = (1/2) vol{(x^2+y^2)^2 + t^2 <= R^4}
  //             = pi * int_0^{R^2} sqrt(R^4 - u^2) du   (u = x^2 + y^2)
  // substituted u = R^2 sin(phi) to keep the integrand smooth.
  double r4 = sq(sq(R));
  auto f = [&](double phi) { return r4 * sq(std::cos(phi)); };
  return M_PI * adaptiveSimpson(f, 0.0, M_PI / 2.0, 1e-12);
}

ProjectivePoint::ProjectivePoint(Cplx a, Cplx b, Cplx c) : z0(a), z1(b), z2(c) {
  if (std::norm(z0) + std::norm(z1) + std::norm(z2) == 0.0)
    throw DomainError("ProjectivePoint: all coordinates zero");
}

ProjectivePoint ProjectivePoint::normalized() const {
  double scale = std::max({std::abs(z0), std::abs(z1), std::abs(z2)});
  if (std::abs(z2) > 1e-12 * scale) return {z0 / z2, z1 / z2, 1.0};
  if (std::abs(z1) > 1e-12 * scale) return {z0 / z1, 1.0, 0.0};
  return {1.0, 0.0, 0.0};
}

bool ProjectivePoint::sameAs(const ProjectivePoint& o, double tol) const {
  ProjectivePoint a = normalized(), b = o.normalized();
  return std::abs(a.z0 - b.z0) <= tol && std::abs(a.z1 - b.z1) <= tol &&
         std::abs(a.z2 - b.z2) <= tol;
}

Cplx hermitianPhi(const ProjectivePoint& z, const ProjectivePoint& w) {
  return -z.z0 * std::conj(w.z2) - z.z2 * std::conj(w.z0) +
         z.z1 * std::conj(w.z1);
}

double hermitianH(const ProjectivePoint& z) {
  return hermitianPhi(z, z).real();
}

ProjectivePoint embedHeis(const HeisExt& p) {
  if (p.isInf) return {1.0, 0.0, 0.0};
  return {p.p.w0, p.p.w, 1.0};
}

HeisExt unembedHeis(const ProjectivePoint& z) {
  double scale = std::norm(z.z0) + std::norm(z.z1) + std::norm(z.z2);
  if (std::fabs(hermitianH(z)) > 1e-8 * scale)
    throw DomainError("unembedHeis: point is not on the hypersphere");
  if (std::norm(z.z2) <= 1e-20 * scale) return HeisExt::infinity();
  // repair the roundoff in Re w0 so the point constraint holds exactly
  Cplx w = z.z1 / z.z2, w0 = z.z0 / z.z2;
  return HeisExt::at(HeisPoint({std::norm(w) / 2.0, w0.imag()}, w));
}

UnitaryH::UnitaryH(const std::array<std::array<Cplx, 3>, 3>& m) : m_(m) {
  validate();
}

void UnitaryH::validate() const {
  // M = g^H J g must equal lambda J with lambda > 0,
  // J = [[0,0,-1],[0,1,0],[-1,0,0]].
  Cplx M[3][3];
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // (J g)_{kj}: row k of J times column j of g
      Cplx jg0 = -m_[2][j], jg1 = m_[1][j], jg2 = -m_[0][j];
      M[i][j] = std::conj(m_[0][i]) * jg0 + std::conj(m_[1][i]) * jg1 +
                std::conj(m_[2][i]) * jg2;
    }
  }
  double lambda = M[1][1].real();
  double scale = std::fabs(lambda);
  for (auto& row : M)
    for (auto& v : row) scale = std::max(scale, std::abs(v));
  if (scale == 0.0 || lambda <= 0.0)
    throw DomainError("UnitaryH: matrix does not preserve the Hermitian form");
  const double J[3][3] = {{0, 0, -1}, {0, 1, 0}, {-1, 0, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (std::abs(M[i][j] - lambda * J[i][j]) > 1e-8 * scale)
        throw DomainError("UnitaryH: matrix does not preserve the Hermitian form");
}

UnitaryH UnitaryH::identity() {
  UnitaryH g;
  g.m_ = {{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}};
  return g;
}

UnitaryH UnitaryH::heisTranslation(Cplx g0, Cplx g) {
  checkHeisConstraint(g0, g);
  UnitaryH t;
  t.m_ = {{{1.0, std::conj(g), g0}, {0.0, 1.0, g}, {0.0, 0.0, 1.0}}};
  t.validate();
  return t;
}

UnitaryH UnitaryH::rotation(Cplx u) {
  if (std::fabs(std::abs(u) - 1.0) > 1e-12)
    throw DomainError("UnitaryH::rotation: |u| != 1");
  UnitaryH r;
  r.m_ = {{{1.0, 0.0, 0.0}, {0.0, u, 0.0}, {0.0, 0.0, 1.0}}};
  return r;
}

UnitaryH UnitaryH::inversion() {
  UnitaryH s;
  s.m_ = {{{0.0, 0.0, 1.0}, {0.0, -1.0, 0.0}, {1.0, 0.0, 0.0}}};
  return s;
}

UnitaryH UnitaryH::operator*(const UnitaryH& o) const {
  UnitaryH r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Cplx s = 0.0;
      for (int k = 0; k < 3; ++k) s += m_[i][k] * o.m_[k][j];
      r.m_[i][j] = s;
    }
  return r;
}

ProjectivePoint applyPSU(const UnitaryH& g, const ProjectivePoint& z) {
  const auto& m = g.m();
  Cplx in[3] = {z.z0, z.z1, z.z2}, out[3];
  for (int i = 0; i < 3; ++i)
    out[i] = m[i][0] * in[0] + m[i][1] * in[1] + m[i][2] * in[2];
  return {out[0], out[1], out[2]};
}

HeisExt applyPSU(const UnitaryH& g, const HeisExt& p) {
  return unembedHeis(applyPSU(g, embedHeis(p)));
}

namespace {

ImagQuadInteger iqExactDiv(const ImagQuadInteger& a, const ImagQuadInteger& b) {
  IqDivRem d = iqDivRem(a, b);
  if (!d.r.isZero()) throw DomainError("iqExactDiv: not divisible");
  return d.q;
}

}  // namespace

ImagQuadInteger halfTraceLift(i64 n, FieldTag K) {
  if (K == FieldTag::Dm3) {
    i64 y = ((n % 2) + 2) % 2;  // 2x + y = n
    return {(n - y) / 2, y, K};
  }
  if (n % 2 != 0) throw DomainError("halfTraceLift: odd trace in this ring");
  return {n / 2, 0, K};
}

std::pair<ImagQuadInteger, ImagQuadInteger> integralTranslationLattice(FieldTag K) {
  switch (K) {
    case FieldTag::Dm3:
      return {ImagQuadInteger(1, 0, K), ImagQuadInteger(0, 1, K)};
    case FieldTag::Dm4:
      // (1+i) Z[i]: norms of elements are even
      return {ImagQuadInteger(1, 1, K), ImagQuadInteger(-1, 1, K)};
    case FieldTag::Dm8:
      // 2 Z + Z i sqrt 2: norms x^2 + 2 y^2 even
      return {ImagQuadInteger(2, 0, K), ImagQuadInteger(0, 1, K)};
    default:
      throw DomainError("integralTranslationLattice: not an imaginary ring");
  }
}

ImagQuadInteger integralCenterGenerator(FieldTag K) {
  if (K == FieldTag::Dm3) return {-1, 2, K};  // i sqrt 3
  if (K == FieldTag::Dm4 || K == FieldTag::Dm8) return {0, 1, K};
  throw DomainError("integralCenterGenerator: not an imaginary ring");
}

HeisRationalPoint::HeisRationalPoint(ImagQuadInteger a_, ImagQuadInteger b_,
                                     ImagQuadInteger c_)
    : a(a_), b(b_), c(c_) {
  if (a.field() != b.field() || b.field() != c.field())
    throw DomainError("HeisRationalPoint: mixed rings");
  if (c.isZero()) throw DomainError("HeisRationalPoint: c must be nonzero");
  if ((a * c.conj()).twoRe() != b.norm())
    throw DomainError("HeisRationalPoint: 2 Re(a conj c) != |b|^2");
  ImagQuadInteger g = iqGcd(iqGcd(a, b), c);
  if (!isUnit(g)) throw DomainError("HeisRationalPoint: a, b, c not coprime");
  // unit normalization: put c in the canonical sector
  for (const ImagQuadInteger& u : ringUnits(c.field())) {
    if (inUnitSector(u * c)) {
      a = u * a;
      b = u * b;
      c = u * c;
      break;
    }
  }
}

HeisPoint HeisRationalPoint::toHeisPoint() const {
  std::complex<double> cc = c.toComplex();
  return {a.toComplex() / cc, b.toComplex() / cc};
}

HeisRationalPoint actIntegral(const ImagQuadInteger& g0, const ImagQuadInteger& g,
                              const HeisRationalPoint& p) {
  if (g0.twoRe() != g.norm())
    throw DomainError("actIntegral: 2 Re g0 != |g|^2");
  // (g0, g) . (a/c, b/c) = ((a + g0 c + b conj g)/c, (b + g c)/c)
  return {p.a + g0 * p.c + p.b * g.conj(), p.b + g * p.c, p.c};
}

HeisRationalPoint canonicalHeisRational(const HeisRationalPoint& p) {
  FieldTag K = p.a.field();
  auto [l1, l2] = integralTranslationLattice(K);
  // step 1: put b into the fundamental cell of c * Lambda
  CoordLattice cell(p.c * l1, p.c * l2);
  ImagQuadInteger bRed = cell.reduce(p.b);
  ImagQuadInteger g = iqExactDiv(bRed - p.b, p.c);
  HeisRationalPoint q = actIntegral(halfTraceLift(g.norm(), K), g, p);
  // step 2: reduce a along the center direction mu = z0 * c
  ImagQuadInteger mu = integralCenterGenerator(K) * q.c;
  i64 dot = q.a.x() * mu.x() + q.a.y() * mu.y();
  i64 mm = mu.x() * mu.x() + mu.y() * mu.y();
  i64 k = -floorDiv(dot, mm);
  if (k != 0)
    q = actIntegral(integralCenterGenerator(K) * ImagQuadInteger(k, 0, K),
                    ImagQuadInteger::zero(K), q);
  return q;
}

}  // namespace oc
