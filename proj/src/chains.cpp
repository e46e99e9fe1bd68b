#include "orbitcount/chains.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace oc {

namespace {

Cplx crossComp(Cplx a1, Cplx a2, Cplx b1, Cplx b2) { return a1 * b2 - a2 * b1; }

/** J z for J = [[0,0,-1],[0,1,0],[-1,0,0]]. */
std::array<Cplx, 3> jTimes(const ProjectivePoint& p) {
  return {-p.z2, p.z1, -p.z0};
}

double normSq(const ProjectivePoint& p) {
  return std::norm(p.z0) + std::norm(p.z1) + std::norm(p.z2);
}

/** True iff [1:0:0] lies on the line through p1, p2. */
bool lineThroughInfinity(const ProjectivePoint& p1, const ProjectivePoint& p2) {
  Cplx minor = crossComp(p1.z1, p1.z2, p2.z1, p2.z2);
  return std::abs(minor) <= 1e-9 * std::sqrt(normSq(p1) * normSq(p2));
}

/** Gram determinant of h restricted to the span (negative iff indefinite). */
double gramDet(const ProjectivePoint& p1, const ProjectivePoint& p2) {
  double h1 = hermitianH(p1), h2 = hermitianH(p2);
  return h1 * h2 - std::norm(hermitianPhi(p1, p2));
}

/** The h-orthogonal pole of the line through p1, p2. */
ProjectivePoint linePole(const ProjectivePoint& p1, const ProjectivePoint& p2) {
  auto j1 = jTimes(p1), j2 = jTimes(p2);
  Cplx c0 = crossComp(j1[1], j1[2], j2[1], j2[2]);
  Cplx c1 = crossComp(j1[2], j1[0], j2[2], j2[0]);
  Cplx c2 = crossComp(j1[0], j1[1], j2[0], j2[1]);
  // the cross product solves for conj(c)
  return {std::conj(c0), std::conj(c1), std::conj(c2)};
}

}  // namespace

Chain verticalChain(Cplx w) {
  HeisPoint base{std::norm(w) / 2.0, w};
  return {embedHeis(HeisExt::infinity()), embedHeis(HeisExt::at(base)), false};
}

Chain chainFromLine(const ProjectivePoint& p1, const ProjectivePoint& p2) {
  double scale = normSq(p1) * normSq(p2);
  Cplx span = crossComp(p1.z0, p1.z1, p2.z0, p2.z1);
  Cplx span2 = crossComp(p1.z1, p1.z2, p2.z1, p2.z2);
  Cplx span3 = crossComp(p1.z0, p1.z2, p2.z0, p2.z2);
  if (std::norm(span) + std::norm(span2) + std::norm(span3) <= 1e-18 * scale)
    throw NotAChainError("chainFromLine: points do not span a line");
  if (gramDet(p1, p2) >= -1e-12 * scale)
    throw NotAChainError(
        "chainFromLine: line meets the hypersphere in at most one point");
  return {p1, p2, !lineThroughInfinity(p1, p2)};
}

UnitaryH reflexionInLine(const ProjectivePoint& p1, const ProjectivePoint& p2) {
  ProjectivePoint c = linePole(p1, p2);
  double hcc = hermitianH(c);
  if (std::fabs(hcc) <= 1e-12 * normSq(c))
    throw NotAChainError("reflexionInLine: degenerate line");
  // z -> z - (2 phi(z, c)/h(c)) c;  phi(z, c) = sum_k (J conj(c))_k z_k
  auto jc = jTimes(c);
  Cplx f[3] = {std::conj(jc[0]), std::conj(jc[1]), std::conj(jc[2])};
  Cplx cv[3] = {c.z0, c.z1, c.z2};
  std::array<std::array<Cplx, 3>, 3> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m[i][j] = (i == j ? 1.0 : 0.0) - 2.0 / hcc * cv[i] * f[j];
  return UnitaryH(m);
}

HeisPoint chainCenter(const Chain& c) {
  if (!c.isFinite)
    throw InfiniteChainError("chainCenter: chain passes through infinity");
  UnitaryH r = reflexionInLine(c.p1, c.p2);
  HeisExt img = applyPSU(r, HeisExt::infinity());
  if (img.isInf) throw NotAChainError("chainCenter: reflexion fixes infinity");
  return img.p;
}

HeisExt chainPoint(const Chain& c, double theta) {
  // basis (q1, q2) with h(q2) != 0; points are q1 + lambda(theta) q2
  ProjectivePoint cand[4] = {
      c.p1, c.p2,
      ProjectivePoint(c.p1.z0 + c.p2.z0, c.p1.z1 + c.p2.z1, c.p1.z2 + c.p2.z2),
      ProjectivePoint(c.p1.z0 + Cplx(0, 1) * c.p2.z0,
                      c.p1.z1 + Cplx(0, 1) * c.p2.z1,
                      c.p1.z2 + Cplx(0, 1) * c.p2.z2)};
  int best = 0;
  double bestv = -1.0;
  for (int i = 0; i < 4; ++i) {
    double v = std::fabs(hermitianH(cand[i])) / normSq(cand[i]);
    if (v > bestv) {
      bestv = v;
      best = i;
    }
  }
  ProjectivePoint q2 = cand[best];
  ProjectivePoint q1 = (best == 0) ? c.p2 : c.p1;
  double h1 = hermitianH(q1), h2 = hermitianH(q2);
  Cplx phi12 = hermitianPhi(q1, q2);
  double det = h1 * h2 - std::norm(phi12);
  // h(q1 + lambda q2) = 0 on the circle |lambda + phi12/h2| = sqrt(-det)/|h2|
  Cplx center = -phi12 / h2;
  double rho = std::sqrt(std::max(0.0, -det)) / std::fabs(h2);
  Cplx lambda = center + rho * Cplx(std::cos(theta), std::sin(theta));
  ProjectivePoint z(q1.z0 + lambda * q2.z0, q1.z1 + lambda * q2.z1,
                    q1.z2 + lambda * q2.z2);
  return unembedHeis(z);
}

double chainDiameter(const Chain& c, Gauge gauge) {
  if (!c.isFinite)
    throw InfiniteChainError("chainDiameter: chain passes through infinity");
  auto dist = [&](const HeisPoint& p, const HeisPoint& q) {
    return gauge == Gauge::Cygan ? cyganDist(p, q) : modCyganDist(p, q);
  };
  auto at = [&](double th) {
    HeisExt e = chainPoint(c, th);
    if (e.isInf)
      throw InfiniteChainError("chainDiameter: chain passes through infinity");
    return e.p;
  };
  const int n = 256;
  std::vector<HeisPoint> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) pts.push_back(at(2.0 * M_PI * i / n));
  double bi = 0, bj = 0, best = -1.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double d = dist(pts[i], pts[j]);
      if (d > best) {
        best = d;
        bi = 2.0 * M_PI * i / n;
        bj = 2.0 * M_PI * j / n;
      }
    }
  // coordinate-wise golden-section refinement of the maximizing pair
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double w = 2.0 * (2.0 * M_PI / n);
  auto eval = [&](double a, double b) { return dist(at(a), at(b)); };
  for (int iter = 0; iter < 60; ++iter) {
    double lo = bi - w, hi = bi + w;
    for (int k = 0; k < 30; ++k) {
      double m1 = hi - gr * (hi - lo), m2 = lo + gr * (hi - lo);
      if (eval(m1, bj) > eval(m2, bj)) hi = m2; else lo = m1;
    }
    bi = (lo + hi) / 2.0;
    lo = bj - w;
    hi = bj + w;
    for (int k = 0; k < 30; ++k) {
      double m1 = hi - gr * (hi - lo), m2 = lo + gr * (hi - lo);
      if (eval(bi, m1) > eval(bi, m2)) hi = m2; else lo = m1;
    }
    bj = (lo + hi) / 2.0;
    if (iter > 2) w *= 0.7;
  }
  return std::max(best, eval(bi, bj));
}

Chain applyPSU(const UnitaryH& g, const Chain& c) {
  return chainFromLine(applyPSU(g, c.p1), applyPSU(g, c.p2));
}

}  // namespace oc
