#include "orbitcount/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace oc {

namespace {

constexpr double kEps = 1e-12;

/** Real Mobius map with positive determinant (not necessarily integral). */
struct RealMobius {
  double a, b, c, d;

  static RealMobius identity() { return {1, 0, 0, 1}; }

  /** Normalize to determinant 1 (requires det > 0). */
  RealMobius normalized() const {
    double det = a * d - b * c;
    double s = 1.0 / std::sqrt(det);
    return {a * s, b * s, c * s, d * s};
  }

  std::complex<double> apply(std::complex<double> z) const {
    return (a * z + b) / (c * z + d);
  }

  BoundaryPoint apply(const BoundaryPoint& p) const {
    if (p.isInf) {
      if (std::fabs(c) < kEps) return BoundaryPoint::infinity();
      return BoundaryPoint::at(a / c);
    }
    double w = c * p.v + d;
    if (std::fabs(w) < kEps) return BoundaryPoint::infinity();
    return BoundaryPoint::at((a * p.v + b) / w);
  }

  PointH2 apply(const PointH2& p) const {
    std::complex<double> z = apply(std::complex<double>(p.x, p.y));
    return {z.real(), z.imag()};
  }

  Horoball apply(const Horoball& hb) const {
    // determinant-1 form required for the size rules
    RealMobius g = normalized();
    if (hb.center.isInf) {
      if (std::fabs(g.c) < kEps)
        return {BoundaryPoint::infinity(), hb.size * g.a * g.a};
      return {BoundaryPoint::at(g.a / g.c), 1.0 / (g.c * g.c * hb.size)};
    }
    double w = g.c * hb.center.v + g.d;
    if (std::fabs(w) < kEps)
      return {BoundaryPoint::infinity(), 1.0 / (g.c * g.c * hb.size)};
    return {g.apply(hb.center), hb.size / (w * w)};
  }
};

/** Mobius map (det > 0) sending the geodesic's endpoints to 0 and infinity. */
RealMobius axisMap(const Geodesic& geo) {
  if (geo.e1.isInf) return {1, -geo.e2.v, 0, 1};        // e2 -> 0, inf -> inf
  if (geo.e2.isInf) return {1, -geo.e1.v, 0, 1};        // e1 -> 0
  double u = geo.e1.v, v = geo.e2.v;
  if (u < v) std::swap(u, v);
  return {1, -u, 1, -v};                                // u -> 0, v -> inf; det = u - v > 0
}

/** Mobius map (det > 0) sending the point to infinity. */
RealMobius toInfinity(const BoundaryPoint& p) {
  if (p.isInf) return RealMobius::identity();
  return {0, -1, 1, -p.v};
}

double perpPointPoint(const PointH2& p, const PointH2& q) {
  double d = distH2(p, q);
  if (d < kEps) throw NotDisjointError("perpLength: coincident points");
  return d;
}

double perpPointGeodesic(const PointH2& p, const Geodesic& g) {
  PointH2 z = axisMap(g).apply(p);
  double r = std::hypot(z.x, z.y);
  if (std::fabs(z.x) < kEps * r)
    throw NotDisjointError("perpLength: point lies on the geodesic");
  return std::acosh(r / z.y);
}

double perpPointHoroball(const PointH2& p, const Horoball& hb) {
  Horoball h = toInfinity(hb.center).apply(hb);
  PointH2 z = toInfinity(hb.center).apply(p);
  if (z.y >= h.size * (1 - kEps))
    throw NotDisjointError("perpLength: point inside or on the horoball");
  return std::log(h.size / z.y);
}

double perpGeodesicGeodesic(const Geodesic& f, const Geodesic& g) {
  RealMobius m = axisMap(f);
  BoundaryPoint u = m.apply(g.e1), v = m.apply(g.e2);
  if (u.isInf || v.isInf)
    throw NotDisjointError("perpLength: geodesics share an endpoint");
  double a = u.v, b = v.v;
  if (std::fabs(a) < kEps || std::fabs(b) < kEps)
    throw NotDisjointError("perpLength: geodesics share an endpoint");
  if (a * b < 0)
    throw NotDisjointError("perpLength: geodesics cross");
  double p = std::min(std::fabs(a), std::fabs(b));
  double q = std::max(std::fabs(a), std::fabs(b));
  if (q - p < kEps * q)
    throw NotDisjointError("perpLength: geodesics tangent at infinity");
  return std::acosh((q + p) / (q - p));
}

double perpGeodesicHoroball(const Geodesic& f, const Horoball& hb) {
  RealMobius m = toInfinity(hb.center);
  Horoball h = m.apply(hb);
  BoundaryPoint u = m.apply(f.e1), v = m.apply(f.e2);
  if (u.isInf || v.isInf)
    throw NotDisjointError("perpLength: geodesic ends at the horoball center");
  double top = std::fabs(u.v - v.v) / 2.0;  // Euclidean apex of the geodesic
  if (top >= h.size * (1 - kEps))
    throw NotDisjointError("perpLength: geodesic meets the horoball");
  return std::log(h.size / top);
}

double perpHoroballHoroball(const Horoball& f, const Horoball& g) {
  bool sameCenter = (f.center.isInf && g.center.isInf) ||
                    (!f.center.isInf && !g.center.isInf &&
                     std::fabs(f.center.v - g.center.v) < kEps);
  if (sameCenter)
    throw NotDisjointError("perpLength: concentric horoballs");
  RealMobius m = toInfinity(f.center);
  Horoball a = m.apply(f);
  Horoball b = m.apply(g);
  // a is now at infinity with height a.size; b is a finite ball
  if (b.size >= a.size * (1 - kEps))
    throw NotDisjointError("perpLength: horoballs meet");
  return std::log(a.size / b.size);
}

}  // namespace

double distH2(const PointH2& p, const PointH2& q) {
  double dx = p.x - q.x, dy = p.y - q.y;
  return std::acosh(1.0 + (dx * dx + dy * dy) / (2.0 * p.y * q.y));
}

double busemann(const BoundaryPoint& xi, const PointH2& x, const PointH2& y) {
  RealMobius m = toInfinity(xi);
  return std::log(m.apply(y).y / m.apply(x).y);
}

double perpLength(const ConvexBody& a, const ConvexBody& b) {
  if (const auto* p = std::get_if<PointH2>(&a)) {
    if (const auto* q = std::get_if<PointH2>(&b)) return perpPointPoint(*p, *q);
    if (const auto* g = std::get_if<Geodesic>(&b)) return perpPointGeodesic(*p, *g);
    return perpPointHoroball(*p, std::get<Horoball>(b));
  }
  if (const auto* f = std::get_if<Geodesic>(&a)) {
    if (std::holds_alternative<PointH2>(b)) return perpLength(b, a);
    if (const auto* g = std::get_if<Geodesic>(&b))
      return perpGeodesicGeodesic(*f, *g);
    return perpGeodesicHoroball(*f, std::get<Horoball>(b));
  }
  const auto& f = std::get<Horoball>(a);
  if (std::holds_alternative<Horoball>(b))
    return perpHoroballHoroball(f, std::get<Horoball>(b));
  return perpLength(b, a);
}

namespace {

// Parametrization of a body's boundary (or the body itself for points) by
// t in (0,1), for the numeric minimization cross-check.
PointH2 paramBody(const ConvexBody& body, double t) {
  if (const auto* p = std::get_if<PointH2>(&body)) return *p;
  if (const auto* g = std::get_if<Geodesic>(&body)) {
    if (g->e1.isInf || g->e2.isInf) {
      double u = g->e1.isInf ? g->e2.v : g->e1.v;
      double h = std::exp(std::tan(M_PI * (t - 0.5)) * 0.2);
      return {u, h};
    }
    double c = (g->e1.v + g->e2.v) / 2.0, r = std::fabs(g->e1.v - g->e2.v) / 2.0;
    double th = M_PI * t;
    th = std::clamp(th, 1e-6, M_PI - 1e-6);
    return {c + r * std::cos(th), r * std::sin(th)};
  }
  const auto& hb = std::get<Horoball>(body);
  if (hb.center.isInf) {
    return {std::tan(M_PI * (t - 0.5)), hb.size};
  }
  double phi = 2.0 * M_PI * t;  // circle tangent to the real axis at center
  double r = hb.size / 2.0;
  double y = r + r * std::cos(phi);
  return {hb.center.v + r * std::sin(phi), std::max(y, 1e-12)};
}

}  // namespace

double perpLengthNumeric(const ConvexBody& a, const ConvexBody& b) {
  auto eval = [&](double t1, double t2) {
    return distH2(paramBody(a, t1), paramBody(b, t2));
  };
  const int n = 240;
  double bt1 = 0.5, bt2 = 0.5, best = 1e300;
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      double t1 = static_cast<double>(i) / n, t2 = static_cast<double>(j) / n;
      double d = eval(t1, t2);
      if (d < best) {
        best = d;
        bt1 = t1;
        bt2 = t2;
      }
    }
  }
  // coordinate-wise golden-section refinement around the coarse minimum;
  // the window starts wide and shrinks slowly so the descent can follow
  // narrow diagonal valleys (strongly coupled t1, t2)
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double w = 0.25;
  for (int iter = 0; iter < 300; ++iter) {
    // refine t1
    double lo = std::max(1e-9, bt1 - w), hi = std::min(1.0 - 1e-9, bt1 + w);
    for (int k = 0; k < 60; ++k) {
      double m1 = hi - gr * (hi - lo), m2 = lo + gr * (hi - lo);
      if (eval(m1, bt2) < eval(m2, bt2)) hi = m2; else lo = m1;
    }
    bt1 = (lo + hi) / 2.0;
    // refine t2
    lo = std::max(1e-9, bt2 - w);
    hi = std::min(1.0 - 1e-9, bt2 + w);
    for (int k = 0; k < 60; ++k) {
      double m1 = hi - gr * (hi - lo), m2 = lo + gr * (hi - lo);
      if (eval(bt1, m1) < eval(bt1, m2)) hi = m2; else lo = m1;
    }
    bt2 = (lo + hi) / 2.0;
    w = std::max(w * 0.95, 1e-9);
  }
  return eval(bt1, bt2);
}

Horoball fordHoroball(const Rat& r, double psiValue) {
  if (psiValue < 1.0) throw DomainError("fordHoroball: psi must be >= 1");
  double q = r.get_den().get_d();
  return {BoundaryPoint::at(r.get_d()), 1.0 / (psiValue * q * q)};
}

bool meetsHoroball(double xi, const Rat& r, double psiValue) {
  double q = r.get_den().get_d();
  return std::fabs(xi - r.get_d()) <= 1.0 / (2.0 * psiValue * q * q);
}

PointH2 actOnPoint(const UnimodularMatrix& m, const PointH2& p) {
  RealMobius g{m.m11().get_d(), m.m12().get_d(), m.m21().get_d(),
               m.m22().get_d()};
  return g.apply(p);
}

BoundaryPoint actOnBoundary(const UnimodularMatrix& m, const BoundaryPoint& b) {
  RealMobius g{m.m11().get_d(), m.m12().get_d(), m.m21().get_d(),
               m.m22().get_d()};
  return g.apply(b);
}

ConvexBody actOnBody(const UnimodularMatrix& m, const ConvexBody& body) {
  RealMobius g{m.m11().get_d(), m.m12().get_d(), m.m21().get_d(),
               m.m22().get_d()};
  if (const auto* p = std::get_if<PointH2>(&body)) return g.apply(*p);
  if (const auto* geo = std::get_if<Geodesic>(&body))
    return Geodesic{g.apply(geo->e1), g.apply(geo->e2)};
  return g.apply(std::get<Horoball>(body));
}

Geodesic geodesicOfQI(const QuadraticIrrational& alpha) {
  double a = alpha.value().toDouble();
  double as = alpha.value().conj().toDouble();
  return {BoundaryPoint::at(a), BoundaryPoint::at(as)};
}

}  // namespace oc
