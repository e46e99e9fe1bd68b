#include "orbitcount/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <thread>
#include <tuple>

namespace oc {

namespace {

/** Run body(i, out) for i in [0, n), sharded across threads; concatenation
 *  order is by shard, so callers must canonically sort afterwards. */
template <class Item, class Fn>
std::vector<Item> shardedLoop(i64 n, int threads, const Fn& body) {
  threads = std::max(1, threads);
  if (threads == 1 || n <= 1) {
    std::vector<Item> out;
    for (i64 i = 0; i < n; ++i) body(i, out);
    return out;
  }
  std::vector<std::vector<Item>> parts(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (i64 i = t; i < n; i += threads) body(i, parts[t]);
    });
  }
  for (auto& th : pool) th.join();
  std::vector<Item> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return all;
}

std::optional<Rat> mobiusRat(const UnimodularMatrix& m, const Rat& x) {
  Rat den = m.m21() * x + m.m22();
  if (den == 0) return std::nullopt;
  Rat v = (m.m11() * x + m.m12()) / den;
  v.canonicalize();
  return v;
}

QuadraticIrrational mobiusQI(const UnimodularMatrix& m,
                             const QuadraticIrrational& x) {
  return QuadraticIrrational(mobiusApply(m, ExtQuad(x.value())).value());
}

}  // namespace

std::vector<Rat> enumerateFarey(double s, const Rat& lo, const Rat& hi,
                                int threads) {
  if (hi < lo) throw DomainError("enumerateFarey: empty window");
  i64 qMax = s >= 1.0 ? static_cast<i64>(std::floor(s)) : 0;
  auto pRange = [&](const Int& q) {
    Int pLo, pHi;
    Rat l = lo * q, h = hi * q;
    mpz_cdiv_q(pLo.get_mpz_t(), l.get_num().get_mpz_t(), l.get_den().get_mpz_t());
    mpz_fdiv_q(pHi.get_mpz_t(), h.get_num().get_mpz_t(), h.get_den().get_mpz_t());
    return std::pair<Int, Int>(pLo, pHi);
  };
  double mag = std::max(std::fabs(lo.get_d()), std::fabs(hi.get_d()));
  if (qMax <= 1000000 && mag <= 1000.0) {
    // machine-word fast path: |p| <= ~1e9, so the sort comparator's cross
    // products fit comfortably in 128 bits
    std::vector<std::pair<i64, i64>> pq;
    for (i64 q = 1; q <= qMax; ++q) {
      auto [pLo, pHi] = pRange(Int(q));
      for (i64 p = pLo.get_si(); p <= pHi.get_si(); ++p) {
        if (std::gcd(p, q) == 1) pq.emplace_back(p, q);
      }
    }
    std::sort(pq.begin(), pq.end(), [](const auto& a, const auto& b) {
      __int128 d = static_cast<__int128>(a.first) * b.second -
                   static_cast<__int128>(b.first) * a.second;
      return d != 0 ? d < 0 : a.second < b.second;
    });
    std::vector<Rat> items;
    items.reserve(pq.size());
    for (const auto& [p, q] : pq) items.emplace_back(p, q);
    return items;
  }
  auto body = [&](i64 idx, std::vector<Rat>& out) {
    Int q(idx + 1);
    auto [pLo, pHi] = pRange(q);
    for (Int p = pLo; p <= pHi; ++p) {
      if (gcd(p, q) == 1) out.emplace_back(p, q);
    }
  };
  auto items = shardedLoop<Rat>(qMax, threads, body);
  std::sort(items.begin(), items.end());
  return items;
}

namespace {

/** Sign of t*sqrt(rNum/rDen) - b, all exact. */
int cmpIrrational(i64 t, i64 rNum, i64 rDen, const Rat& b) {
  int st = (t > 0) - (t < 0);
  int sb = sgn(b);
  if (st >= 0 && sb <= 0) return (st == 0 && sb == 0) ? 0 : 1;
  if (st <= 0 && sb >= 0) return -1;
  Rat lhs2 = Rat(Int(t) * t * rNum, rDen);
  lhs2.canonicalize();
  int c = cmp(lhs2, b * b);
  return st > 0 ? c : -c;
}

}  // namespace

std::vector<IqRational> enumerateImagQuadRationals(FieldTag K, double s,
                                                   const Rat& xLo, const Rat& xHi,
                                                   const Rat& yLo, const Rat& yHi,
                                                   int threads) {
  if (xHi < xLo || yHi < yLo)
    throw DomainError("enumerateImagQuadRationals: empty box");
  i64 normBound = static_cast<i64>(std::floor(s * s * (1 + 1e-12)));
  if (normBound < 1) return {};
  std::vector<ImagQuadInteger> qs = ringElementsByNorm(K, normBound, true);
  auto [rNum, rDen] = imScaleSquared(K);
  double sc = imScale(K);
  double omRe = (K == FieldTag::Dm3) ? 0.5 : 0.0;
  double xl = xLo.get_d(), xh = xHi.get_d(), yl = yLo.get_d(), yh = yHi.get_d();

  auto body = [&](i64 qi, std::vector<IqRational>& out) {
    const ImagQuadInteger& q = qs[qi];
    i64 n = q.norm();
    std::complex<double> qc = q.toComplex();
    // coordinate bounding box of q * window with slack
    double xs[2] = {xl, xh}, ys[2] = {yl, yh};
    double pyLo = 1e300, pyHi = -1e300, reLo = 1e300, reHi = -1e300;
    for (double zx : xs)
      for (double zy : ys) {
        std::complex<double> v = qc * std::complex<double>(zx, zy);
        pyLo = std::min(pyLo, v.imag());
        pyHi = std::max(pyHi, v.imag());
        reLo = std::min(reLo, v.real());
        reHi = std::max(reHi, v.real());
      }
    i64 cyLo = static_cast<i64>(std::floor(pyLo / sc)) - 1;
    i64 cyHi = static_cast<i64>(std::ceil(pyHi / sc)) + 1;
    Rat xLoN = xLo * n, xHiN = xHi * n, yLoN = yLo * n, yHiN = yHi * n;
    for (i64 py = cyLo; py <= cyHi; ++py) {
      i64 cxLo = static_cast<i64>(std::floor(reLo - py * omRe)) - 1;
      i64 cxHi = static_cast<i64>(std::ceil(reHi - py * omRe)) + 1;
      for (i64 px = cxLo; px <= cxHi; ++px) {
        ImagQuadInteger p(px, py, K);
        ImagQuadInteger z = p * q.conj();  // p/q = z / n
        // cheap double pre-filter with margin, exact test near the boundary
        std::complex<double> v = z.toComplex();
        double margin = 1e-9 * (1.0 + std::abs(v)) / n;
        double re = v.real() / n, im = v.imag() / n;
        if (re < xl - margin || re > xh + margin || im < yl - margin ||
            im > yh + margin)
          continue;
        bool interior = re > xl + margin && re < xh - margin &&
                        im > yl + margin && im < yh - margin;
        if (!interior) {
          Rat tr(z.twoRe(), 2);
          tr.canonicalize();
          if (tr < xLoN || tr > xHiN) continue;
          if (cmpIrrational(z.imInt(), rNum, rDen, yLoN) < 0) continue;
          if (cmpIrrational(z.imInt(), rNum, rDen, yHiN) > 0) continue;
        }
        if (!isUnit(iqGcd(p, q))) continue;
        out.push_back({p, q});
      }
    }
  };
  auto items = shardedLoop<IqRational>(static_cast<i64>(qs.size()), threads, body);
  auto key = [](const IqRational& r) {
    return std::make_tuple(r.q.norm(), r.q.x(), r.q.y(), r.p.x(), r.p.y());
  };
  std::sort(items.begin(), items.end(),
            [&](const IqRational& a, const IqRational& b) {
              return key(a) < key(b);
            });
  return items;
}

std::vector<QuadOrbitItem> enumerateQuadOrbitByForms(
    const QuadraticIrrational& alpha0, double s, double traceWindow,
    bool includeConjugates, int threads) {
  BinaryQuadraticForm q0 = formOfQI(alpha0);
  Int D = q0.disc();
  if (!D.fits_slong_p())
    throw DomainError("enumerateQuadOrbitByForms: discriminant too large");
  i64 d = D.get_si();
  std::vector<BinaryQuadraticForm> target = gaussReduceCycle(q0);
  std::vector<BinaryQuadraticForm> targetConj;
  if (includeConjugates) {
    BinaryQuadraticForm nq(-q0.A(), -q0.B(), -q0.C());
    targetConj = gaussReduceCycle(nq);
    if (targetConj == target) targetConj.clear();
  }
  // height 2|A|/sqrt(D) <= s  <=>  4 A^2 <= s^2 D
  Rat s2(s);
  s2 = s2 * s2 * D / 4;
  i64 aMax = 0;
  {
    double am = std::sqrt(s2.get_d()) + 2;
    for (aMax = static_cast<i64>(am); aMax >= 0 && Rat(Int(aMax) * aMax) > s2;
         --aMax) {
    }
  }
  if (aMax <= 0) return {};
  Rat tW(traceWindow);
  std::vector<i64> spf = spfTable(4 * aMax + 1);

  auto body = [&](i64 idx, std::vector<QuadOrbitItem>& out) {
    i64 absA = idx + 1;
    i64 m = 4 * absA;
    std::vector<i64> roots = squareRootsMod(mod(d, m), m, spf);
    for (i64 sign : {1, -1}) {
      Int A(sign * absA);
      for (i64 r : roots) {
        // B == r (mod 4|A|), |B| <= T |A| exactly
        double bLim = traceWindow * absA + 1;
        i64 k0 = static_cast<i64>(std::floor((-bLim - r) / m)) - 1;
        i64 k1 = static_cast<i64>(std::ceil((bLim - r) / m)) + 1;
        for (i64 k = k0; k <= k1; ++k) {
          Int B(r + k * m);
          if (Rat(abs(B)) > tW * absA) continue;
          Int num = B * B - D;
          Int C = num / (4 * A);
          if (C * 4 * A != num) continue;
          Int g = gcd(gcd(A, B), C);
          if (g != 1) continue;
          BinaryQuadraticForm f(A, B, C);
          std::vector<BinaryQuadraticForm> cyc = gaussReduceCycle(f);
          if (cyc == target || (!targetConj.empty() && cyc == targetConj))
            out.push_back({f, rootOfForm(f)});
        }
      }
    }
  };
  auto items = shardedLoop<QuadOrbitItem>(aMax, threads, body);
  std::sort(items.begin(), items.end(),
            [](const QuadOrbitItem& a, const QuadOrbitItem& b) {
              return a.form < b.form;
            });
  return items;
}

RelativeOrbitContext::RelativeOrbitContext(const QuadraticIrrational& alpha0)
    : alpha0_(alpha0),
      form_(formOfQI(alpha0)),
      gamma0_(fundamentalAutomorph(form_)) {
  long d = alpha0.d();
  RealQuadratic a = alpha0.value(), as = a.conj();
  RealQuadratic lo = a < as ? a : as, hi = a < as ? as : a;
  // inner interval: start from the rational midpoint -B/(2A)
  Rat x1(-form_.B(), 2 * form_.A());
  x1.canonicalize();
  Rat y1 = *mobiusRat(gamma0_, x1);
  f1lo_ = std::min(x1, y1);
  f1hi_ = std::max(x1, y1);
  // outer interval: a rational point above hi, pulled toward hi by the
  // automorph direction that attracts to hi on the outer arc
  Rat x2(static_cast<long>(std::ceil(hi.toDouble())) + 1);
  for (int guard = 0;; ++guard) {
    if (guard > 64)
      throw DomainError("RelativeOrbitContext: could not build outer domain");
    auto img = mobiusRat(gamma0_, x2);
    auto imgInv = mobiusRat(gamma0_.inverse(), x2);
    RealQuadratic x2v = RealQuadratic::rational(x2, d);
    auto between = [&](const std::optional<Rat>& y) {
      if (!y) return false;
      RealQuadratic yv = RealQuadratic::rational(*y, d);
      return hi < yv && yv < x2v;
    };
    if (between(img)) {
      f2lo_ = *img;
      f2hi_ = x2;
      outerDir_ = gamma0_;
      break;
    }
    if (between(imgInv)) {
      f2lo_ = *imgInv;
      f2hi_ = x2;
      outerDir_ = gamma0_.inverse();
      break;
    }
    x2 += 1;
  }
  double av = a.toDouble(), asv = as.toDouble();
  auto distTo = [&](const Rat& r) {
    double v = r.get_d();
    return std::min(std::fabs(v - av), std::fabs(v - asv));
  };
  separation_ = std::min(std::min(distTo(f1lo_), distTo(f1hi_)),
                         std::min(distTo(f2lo_), distTo(f2hi_)));
}

bool RelativeOrbitContext::inFundamentalDomain(
    const QuadraticIrrational& beta) const {
  long d = alpha0_.d();
  if (beta.d() != d)
    throw DomainError("RelativeOrbitContext: different field");
  const RealQuadratic& v = beta.value();
  auto r = [&](const Rat& q) { return RealQuadratic::rational(q, d); };
  bool in1 = !(v < r(f1lo_)) && v < r(f1hi_);
  bool in2 = !(v < r(f2lo_)) && v < r(f2hi_);
  return in1 || in2;
}

QuadraticIrrational RelativeOrbitContext::canonicalize(
    const QuadraticIrrational& beta) const {
  long d = alpha0_.d();
  RealQuadratic a = alpha0_.value(), as = a.conj();
  RealQuadratic lo = a < as ? a : as, hi = a < as ? as : a;
  const RealQuadratic& v = beta.value();
  if (v == a || v == as)
    throw DomainError("RelativeOrbitContext: beta is a fixed point");
  QuadraticIrrational cur = beta;
  UnimodularMatrix up = innerUp();
  UnimodularMatrix down = up.inverse();
  UnimodularMatrix fwd = outerDir_;          // contracts the outer arc to hi
  UnimodularMatrix bwd = fwd.inverse();
  for (int i = 0; i < 100000; ++i) {
    if (inFundamentalDomain(cur)) return cur;
    const RealQuadratic& w = cur.value();
    if (lo < w && w < hi) {
      // inner arc: move up when below the interval, down when above
      bool below = w < RealQuadratic::rational(f1lo_, d);
      cur = mobiusQI(below ? up : down, cur);
    } else if (hi < w && w < RealQuadratic::rational(f2lo_, d)) {
      // between the fixed point and the outer interval: expand away from hi
      cur = mobiusQI(bwd, cur);
    } else {
      cur = mobiusQI(fwd, cur);
    }
  }
  throw DomainError("RelativeOrbitContext: canonicalization did not converge");
}

UnimodularMatrix RelativeOrbitContext::innerUp() const {
  Rat x1(-form_.B(), 2 * form_.A());
  x1.canonicalize();
  Rat y1 = *mobiusRat(gamma0_, x1);
  return y1 > x1 ? gamma0_ : gamma0_.inverse();
}

namespace {

/** Same-discriminant closed form: W = B0 B - 2 A C0 - 2 A0 C, relative
 *  height = min(|W - D|, |W + D|) / (2 D). */
Rat relHeightW(const BinaryQuadraticForm& f0, const BinaryQuadraticForm& f) {
  Int D = f0.disc();
  Int W = f0.B() * f.B() - 2 * f.A() * f0.C() - 2 * f0.A() * f.C();
  Int lo = abs(W - D), hi = abs(W + D);
  Rat h(lo < hi ? lo : hi, 2 * D);
  h.canonicalize();
  return h;
}

}  // namespace

std::vector<RelOrbitItem> enumerateRelativeOrbit(const QuadraticIrrational& alpha0,
                                                 const QuadraticIrrational& beta0,
                                                 double s, int threads) {
  RelativeOrbitContext ctx(alpha0);
  BinaryQuadraticForm qb = formOfQI(beta0);
  const BinaryQuadraticForm& q0 = ctx.form();
  if (qb.disc() != q0.disc())
    throw DomainError("enumerateRelativeOrbit: discriminants differ");
  Int D = q0.disc();
  if (!D.fits_slong_p())
    throw DomainError("enumerateRelativeOrbit: discriminant too large");
  i64 d = D.get_si();
  std::vector<BinaryQuadraticForm> target = gaussReduceCycle(qb);
  double m = ctx.separation();
  double dd = static_cast<double>(d);
  i64 aMax = static_cast<i64>(std::ceil(2.0 * dd * s /
                                        (std::fabs(q0.A().get_d()) * m * m)) +
                              std::ceil(2.0 * std::sqrt(dd) / m)) +
             2;
  std::vector<i64> spf = spfTable(4 * aMax + 1);
  Rat sq(s);
  double A0 = q0.A().get_d(), B0 = q0.B().get_d(), C0 = q0.C().get_d();
  double M = 2.0 * dd * s + dd;

  auto body = [&](i64 idx, std::vector<RelOrbitItem>& out) {
    i64 absA = idx + 1;
    i64 mm = 4 * absA;
    std::vector<i64> roots = squareRootsMod(mod(d, mm), mm, spf);
    for (i64 sign : {1, -1}) {
      double A = sign * static_cast<double>(absA);
      // |W(B)| <= M with W = B0 B - 2 A C0 - A0 (B^2 - D)/(2A):
      // quadratic in B; bracket the solution set with slack
      double qa = -A0 / (2.0 * A), qb1 = B0, qc = -2.0 * A * C0 + A0 * dd / (2.0 * A);
      double bLo = 1e18, bHi = -1e18;
      for (double rhs : {M, -M}) {
        // qa B^2 + qb1 B + qc = rhs
        double disc = qb1 * qb1 - 4.0 * qa * (qc - rhs);
        if (disc >= 0) {
          double sd = std::sqrt(disc);
          for (double root : {(-qb1 + sd) / (2 * qa), (-qb1 - sd) / (2 * qa)}) {
            bLo = std::min(bLo, root);
            bHi = std::max(bHi, root);
          }
        }
      }
      if (bHi < bLo) continue;
      bLo -= 2;
      bHi += 2;
      for (i64 r : roots) {
        i64 k0 = static_cast<i64>(std::floor((bLo - r) / mm));
        i64 k1 = static_cast<i64>(std::ceil((bHi - r) / mm));
        for (i64 k = k0; k <= k1; ++k) {
          Int B(r + k * mm);
          Int Az(sign * absA);
          Int num = B * B - D;
          Int C = num / (4 * Az);
          if (C * 4 * Az != num) continue;
          if (gcd(gcd(Az, B), C) != 1) continue;
          BinaryQuadraticForm f(Az, B, C);
          Rat h = relHeightW(q0, f);
          if (h > sq) continue;
          QuadraticIrrational beta = rootOfForm(f);
          if (beta.value() == ctx.alpha0().value() ||
              beta.value() == ctx.alpha0().value().conj())
            continue;
          if (!ctx.inFundamentalDomain(beta)) continue;
          if (gaussReduceCycle(f) != target) continue;
          out.push_back({f, beta, h});
        }
      }
    }
  };
  auto items = shardedLoop<RelOrbitItem>(aMax, threads, body);
  std::sort(items.begin(), items.end(),
            [](const RelOrbitItem& a, const RelOrbitItem& b) {
              return a.form < b.form;
            });
  return items;
}

std::vector<Rat> enumerateFormHeightRationals(const BinaryQuadraticForm& Q,
                                              double s, const Rat& lo,
                                              const Rat& hi, int threads) {
  if (hi < lo) throw DomainError("enumerateFormHeightRationals: empty window");
  QuadraticIrrational r1 = rootOfForm(Q);
  long d = r1.d();
  RealQuadratic roots[2] = {r1.value(), r1.value().conj()};
  double distProduct = 1.0;
  for (const RealQuadratic& root : roots) {
    RealQuadratic lov = RealQuadratic::rational(lo, d);
    RealQuadratic hiv = RealQuadratic::rational(hi, d);
    if (!(root < lov) && !(hiv < root))
      throw DomainError(
          "enumerateFormHeightRationals: window touches a root of the form");
    double rv = root.toDouble();
    double dr = root < lov ? lo.get_d() - rv : rv - hi.get_d();
    distProduct *= std::max(dr * 0.999, 1e-300);
  }
  double c = std::fabs(Q.A().get_d()) * distProduct;
  i64 qMax = static_cast<i64>(std::floor(std::sqrt(s / c))) + 2;
  Rat sq(s);
  auto body = [&](i64 idx, std::vector<Rat>& out) {
    Int q(idx + 1);
    Rat l = lo * q, h = hi * q;
    Int pLo, pHi;
    mpz_cdiv_q(pLo.get_mpz_t(), l.get_num().get_mpz_t(), l.get_den().get_mpz_t());
    mpz_fdiv_q(pHi.get_mpz_t(), h.get_num().get_mpz_t(), h.get_den().get_mpz_t());
    for (Int p = pLo; p <= pHi; ++p) {
      if (gcd(p, q) != 1) continue;
      Int val = Q.A() * p * p + Q.B() * p * q + Q.C() * q * q;
      if (Rat(abs(val)) > sq) continue;
      out.emplace_back(p, q);
    }
  };
  auto items = shardedLoop<Rat>(qMax, threads, body);
  std::sort(items.begin(), items.end());
  return items;
}

std::vector<HeisRationalPoint> enumerateHeisRationals(FieldTag K, double s,
                                                      int threads) {
  i64 normBound = static_cast<i64>(std::floor(s * s * (1 + 1e-12)));
  if (normBound < 1) return {};
  std::vector<ImagQuadInteger> cs = ringElementsByNorm(K, normBound, true);
  auto [l1, l2] = integralTranslationLattice(K);
  ImagQuadInteger z0 = integralCenterGenerator(K);

  auto body = [&](i64 ci, std::vector<HeisRationalPoint>& out) {
    const ImagQuadInteger& c = cs[ci];
    CoordLattice cell(c * l1, c * l2);
    ImagQuadInteger cb = c.conj();
    // 2 Re(a conj c) = t1 a.x + t2 a.y
    i64 t1 = cb.twoRe();
    i64 t2 = (ImagQuadInteger(0, 1, K) * cb).twoRe();
    i64 g = std::gcd(std::llabs(t1), std::llabs(t2));
    // direction of the solution line and the center step along it
    i64 dx = t2 / g, dy = -t1 / g;
    ImagQuadInteger mu = z0 * c;
    i64 mult = (dx != 0) ? mu.x() / dx : mu.y() / dy;
    if (mult < 0) {
      dx = -dx;
      dy = -dy;
      mult = -mult;
    }
    i64 mm = mu.x() * mu.x() + mu.y() * mu.y();
    i64 dDotMu = dx * mu.x() + dy * mu.y();  // = mm / mult
    for (const ImagQuadInteger& b : cell.residues(K)) {
      i64 n = b.norm();
      if (n % g != 0) continue;
      // particular solution of t1 x + t2 y = n via the extended gcd
      i64 x0 = 0, y0 = 0;
      {
        i64 a = std::llabs(t1), bb = std::llabs(t2);
        i64 ox = 1, oy = 0, nx = 0, ny = 1;
        while (bb != 0) {
          i64 qq = a / bb;
          std::tie(a, bb) = std::make_tuple(bb, a - qq * bb);
          std::tie(ox, nx) = std::make_tuple(nx, ox - qq * nx);
          std::tie(oy, ny) = std::make_tuple(ny, oy - qq * ny);
        }
        // a == g, t1/|t1| correction
        i64 sx = (t1 < 0) ? -ox : ox;
        i64 sy = (t2 < 0) ? -oy : oy;
        x0 = sx * (n / g);
        y0 = sy * (n / g);
      }
      // canonical a values: dot(a, mu) in [0, mm), i.e. mult choices of k
      i64 dot0 = x0 * mu.x() + y0 * mu.y();
      i64 kLo = ceilDiv(-dot0, dDotMu);
      for (i64 k = kLo;; ++k) {
        i64 dk = dot0 + k * dDotMu;
        if (dk < 0) continue;
        if (dk >= mm) break;
        ImagQuadInteger a(x0 + k * dx, y0 + k * dy, K);
        if (!isUnit(iqGcd(iqGcd(a, b), c))) continue;
        out.emplace_back(a, b, c);
      }
    }
  };
  auto items = shardedLoop<HeisRationalPoint>(static_cast<i64>(cs.size()),
                                              threads, body);
  auto key = [](const HeisRationalPoint& p) {
    return std::make_tuple(p.c.norm(), p.c.x(), p.c.y(), p.b.x(), p.b.y(),
                           p.a.x(), p.a.y());
  };
  std::sort(items.begin(), items.end(),
            [&](const HeisRationalPoint& a, const HeisRationalPoint& b) {
              return key(a) < key(b);
            });
  return items;
}

std::int64_t countIntegralHeisBall(double R) {
  if (R <= 0) throw DomainError("countIntegralHeisBall: R must be positive");
  // (w0, w) integral over Z[i]: 2 Re w0 = |w|^2 forces |w|^2 even;
  // Cygan norm <= R  <=>  (|w|^2/2)^2 + (Im w0)^2 <= R^4/4
  double r2 = R * R, quarterR4 = r2 * r2 / 4.0;
  i64 wMax = static_cast<i64>(std::floor(R * (1 + 1e-12)));
  std::int64_t total = 0;
  for (i64 wx = -wMax; wx <= wMax; ++wx) {
    for (i64 wy = -wMax; wy <= wMax; ++wy) {
      i64 n = wx * wx + wy * wy;
      if (n % 2 != 0) continue;
      double m = static_cast<double>(n) / 2.0;
      double rem = quarterR4 - m * m;
      if (rem < 0) continue;
      total += 2 * static_cast<i64>(std::floor(std::sqrt(rem) * (1 + 1e-12))) + 1;
    }
  }
  return total;
}

namespace {

struct IqTriple {
  ImagQuadInteger z0, z1, z2;
};

struct IqMat3 {
  ImagQuadInteger m[3][3];

  static IqMat3 identity(FieldTag K) {
    ImagQuadInteger o = ImagQuadInteger::one(K), z = ImagQuadInteger::zero(K);
    return {{{o, z, z}, {z, o, z}, {z, z, o}}};
  }
  IqMat3 operator*(const IqMat3& o) const {
    FieldTag K = m[0][0].field();
    IqMat3 r = identity(K);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        ImagQuadInteger s = ImagQuadInteger::zero(K);
        for (int k = 0; k < 3; ++k) s = s + m[i][k] * o.m[k][j];
        r.m[i][j] = s;
      }
    return r;
  }
  IqTriple apply(const IqTriple& v) const {
    auto row = [&](int i) {
      return m[i][0] * v.z0 + m[i][1] * v.z1 + m[i][2] * v.z2;
    };
    return {row(0), row(1), row(2)};
  }
  i64 maxNorm() const {
    i64 best = 0;
    for (const auto& r : m)
      for (const auto& v : r) best = std::max(best, v.norm());
    return best;
  }
  /** Scale by the unit putting the first nonzero entry in the sector. */
  IqMat3 unitCanonicalized() const {
    FieldTag K = m[0][0].field();
    for (const auto& r : m)
      for (const auto& v : r)
        if (!v.isZero()) {
          for (const ImagQuadInteger& u : ringUnits(K))
            if (inUnitSector(u * v)) {
              IqMat3 s = *this;
              for (auto& rr : s.m)
                for (auto& vv : rr) vv = u * vv;
              return s;
            }
        }
    return *this;
  }
  std::array<i64, 18> key() const {
    std::array<i64, 18> k{};
    int i = 0;
    for (const auto& r : m)
      for (const auto& v : r) {
        k[i++] = v.x();
        k[i++] = v.y();
      }
    return k;
  }
};

ImagQuadInteger roundToRing(Cplx v, FieldTag K) {
  double y = v.imag() / imScale(K);
  double x = v.real() - ((K == FieldTag::Dm3) ? 0.5 * y : 0.0);
  i64 xi = static_cast<i64>(std::llround(x)), yi = static_cast<i64>(std::llround(y));
  ImagQuadInteger r(xi, yi, K);
  if (std::abs(r.toComplex() - v) > 1e-9 * (1.0 + std::abs(v)))
    throw DomainError("enumerateChains: chain is not spanned by ring points");
  return r;
}

}  // namespace

ChainEnumeration enumerateChains(FieldTag K, const Chain& c0, double eps,
                                 i64 budget) {
  ProjectivePoint s1 = c0.p1.normalized(), s2 = c0.p2.normalized();
  // clear denominators: normalized coordinates must be ring elements
  auto toTriple = [&](const ProjectivePoint& p) {
    return IqTriple{roundToRing(p.z0, K), roundToRing(p.z1, K),
                    roundToRing(p.z2, K)};
  };
  IqTriple t1 = toTriple(s1), t2 = toTriple(s2);

  // generators of PSU_h(O_K): lattice translations, center translations,
  // rotation by the primitive unit, inversion
  std::vector<IqMat3> gens;
  auto [l1, l2] = integralTranslationLattice(K);
  ImagQuadInteger z0 = integralCenterGenerator(K);
  ImagQuadInteger zero = ImagQuadInteger::zero(K), one = ImagQuadInteger::one(K);
  auto translation = [&](const ImagQuadInteger& g0, const ImagQuadInteger& g) {
    IqMat3 t = IqMat3::identity(K);
    t.m[0][1] = g.conj();
    t.m[0][2] = g0;
    t.m[1][2] = g;
    return t;
  };
  for (const ImagQuadInteger& g : {l1, -l1, l2, -l2})
    gens.push_back(translation(halfTraceLift(g.norm(), K), g));
  gens.push_back(translation(z0, zero));
  gens.push_back(translation(-z0, zero));
  {
    IqMat3 rot = IqMat3::identity(K);
    rot.m[1][1] = ringUnits(K)[1 % ringUnits(K).size()];
    if (!isUnit(rot.m[1][1])) rot.m[1][1] = -one;
    gens.push_back(rot);
  }
  {
    IqMat3 inv = IqMat3::identity(K);
    inv.m[0][0] = zero;
    inv.m[2][2] = zero;
    inv.m[0][2] = one;
    inv.m[2][0] = one;
    inv.m[1][1] = -one;
    gens.push_back(inv);
  }

  i64 budgetSq = budget * budget;
  std::map<std::array<i64, 18>, IqMat3> seen;
  std::vector<IqMat3> frontier{IqMat3::identity(K).unitCanonicalized()};
  seen.emplace(frontier[0].key(), frontier[0]);
  while (!frontier.empty()) {
    std::vector<IqMat3> next;
    for (const IqMat3& m : frontier) {
      for (const IqMat3& g : gens) {
        IqMat3 prod = (m * g).unitCanonicalized();
        if (prod.maxNorm() > budgetSq) continue;
        auto k = prod.key();
        if (seen.emplace(k, prod).second) next.push_back(prod);
      }
    }
    frontier = std::move(next);
  }

  // orbit chains: exact line dedup, then invariant-signature dedup
  std::map<std::array<i64, 6>, ChainEnumeration::Item> byLine;
  for (const auto& [k, mat] : seen) {
    (void)k;
    IqTriple a = mat.apply(t1), b = mat.apply(t2);
    // dual line coordinates, gcd- and unit-normalized
    ImagQuadInteger du[3] = {a.z1 * b.z2 - a.z2 * b.z1,
                             a.z2 * b.z0 - a.z0 * b.z2,
                             a.z0 * b.z1 - a.z1 * b.z0};
    ImagQuadInteger g = iqGcd(iqGcd(du[0], du[1]), du[2]);
    if (g.isZero()) continue;
    for (auto& v : du) v = iqDivRem(v, g).q;
    for (const ImagQuadInteger& u : ringUnits(K)) {
      ImagQuadInteger lead = zero;
      for (const auto& v : du)
        if (!v.isZero()) {
          lead = v;
          break;
        }
      if (inUnitSector(u * lead)) {
        for (auto& v : du) v = u * v;
        break;
      }
    }
    std::array<i64, 6> lineKey = {du[0].x(), du[0].y(), du[1].x(),
                                  du[1].y(), du[2].x(), du[2].y()};
    if (byLine.count(lineKey)) continue;
    ProjectivePoint pa(a.z0.toComplex(), a.z1.toComplex(), a.z2.toComplex());
    ProjectivePoint pb(b.z0.toComplex(), b.z1.toComplex(), b.z2.toComplex());
    Chain ch = chainFromLine(pa, pb);
    if (!ch.isFinite) continue;
    double dm = chainDiameter(ch, Gauge::ModCygan);
    if (dm < eps) continue;
    double dc = chainDiameter(ch, Gauge::Cygan);
    // vertical projection radius from samples
    double pr = 0;
    std::vector<Cplx> ws;
    for (int i = 0; i < 64; ++i) {
      HeisExt p = chainPoint(ch, 2 * M_PI * i / 64);
      if (!p.isInf) ws.push_back(p.p.w);
    }
    for (size_t i = 0; i < ws.size(); ++i)
      for (size_t j = i + 1; j < ws.size(); ++j)
        pr = std::max(pr, std::abs(ws[i] - ws[j]) / 2.0);
    byLine.emplace(lineKey, ChainEnumeration::Item{ch, dm, dc, pr});
  }

  // stabilizer-of-infinity invariant signature
  auto sig = [](const ChainEnumeration::Item& it) {
    auto r = [](double v) { return std::llround(v * 1e9); };
    return std::make_tuple(r(it.diamMod), r(it.diamCyg), r(it.projRadius));
  };
  std::map<std::tuple<long long, long long, long long>, ChainEnumeration::Item>
      bySig;
  for (const auto& [k, it] : byLine) {
    (void)k;
    bySig.emplace(sig(it), it);
  }
  ChainEnumeration out;
  out.truncated = true;
  for (const auto& [k, it] : bySig) {
    (void)k;
    out.items.push_back(it);
  }
  return out;
}

}  // namespace oc
