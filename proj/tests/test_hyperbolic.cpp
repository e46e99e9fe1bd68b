#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "orbitcount/forms.hpp"
#include "orbitcount/hyperbolic.hpp"

using namespace oc;

namespace {

UnimodularMatrix randomUnimodular(std::mt19937& rng, int len = 6) {
  std::uniform_int_distribution<int> coin(0, 2);
  UnimodularMatrix m = UnimodularMatrix::identity();
  UnimodularMatrix T(1, 1, 0, 1), Tinv(1, -1, 0, 1), S(0, -1, 1, 0);
  for (int i = 0; i < len; ++i) {
    switch (coin(rng)) {
      case 0: m = m * T; break;
      case 1: m = m * Tinv; break;
      default: m = m * S; break;
    }
  }
  return m;
}

}  // namespace

TEST_CASE("distH2") {
  CHECK(distH2({0, 1}, {0, 1}) == doctest::Approx(0.0));
  CHECK(distH2({0, 1}, {0, 2}) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(distH2({0, 1}, {1, 1}) == doctest::Approx(std::acosh(1.5)).epsilon(1e-12));
  // symmetry
  CHECK(distH2({0.3, 0.7}, {-1.2, 2.5}) ==
        doctest::Approx(distH2({-1.2, 2.5}, {0.3, 0.7})).epsilon(1e-14));
}

TEST_CASE("busemann") {
  BoundaryPoint inf = BoundaryPoint::infinity();
  // horoball at infinity through x is {Im >= Im x}: 2i strictly inside
  CHECK(busemann(inf, {0, 1}, {0, 2}) == doctest::Approx(std::log(2.0)));
  CHECK(busemann(inf, {0.5, 1.7}, {0.5, 1.7}) == doctest::Approx(0.0));
  CHECK(busemann(BoundaryPoint::at(0), {0, 1}, {0, 0.5}) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));

  std::mt19937 rng(17);
  std::uniform_real_distribution<double> xr(-3, 3), yr(0.2, 4.0);
  for (int i = 0; i < 200; ++i) {
    PointH2 x{xr(rng), yr(rng)}, y{xr(rng), yr(rng)}, z{xr(rng), yr(rng)};
    BoundaryPoint xi = (i % 3 == 0) ? BoundaryPoint::infinity()
                                    : BoundaryPoint::at(xr(rng));
    // cocycle identity
    CHECK(busemann(xi, x, z) ==
          doctest::Approx(busemann(xi, x, y) + busemann(xi, y, z)).epsilon(1e-10));
    // equivariance under the isometric action
    UnimodularMatrix m = randomUnimodular(rng);
    CHECK(busemann(actOnBoundary(m, xi), actOnPoint(m, x), actOnPoint(m, y)) ==
          doctest::Approx(busemann(xi, x, y)).epsilon(1e-9));
  }
}

TEST_CASE("perpLength closed forms") {
  Horoball hbInf{BoundaryPoint::infinity(), 1.0};
  Geodesic g01{BoundaryPoint::at(0), BoundaryPoint::at(1)};
  CHECK(perpLength(hbInf, g01) == doctest::Approx(std::log(2.0)).epsilon(1e-12));

  Geodesic gm11{BoundaryPoint::at(-1), BoundaryPoint::at(1)};
  Geodesic gee{BoundaryPoint::at(-std::exp(1.0)), BoundaryPoint::at(std::exp(1.0))};
  CHECK(perpLength(gm11, gee) == doctest::Approx(1.0).epsilon(1e-10));

  CHECK(perpLength(PointH2{0, 1}, PointH2{0, 2}) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));

  // symmetry is exact by dispatch
  CHECK(perpLength(g01, hbInf) == perpLength(hbInf, g01));

  // error cases: tangent, intersecting, shared endpoints
  CHECK_THROWS_AS(perpLength(hbInf, Horoball{BoundaryPoint::infinity(), 2.0}),
                  NotDisjointError);
  CHECK_THROWS_AS(
      perpLength(Geodesic{BoundaryPoint::at(0), BoundaryPoint::at(2)},
                 Geodesic{BoundaryPoint::at(1), BoundaryPoint::at(3)}),
      NotDisjointError);
  CHECK_THROWS_AS(
      perpLength(Geodesic{BoundaryPoint::at(0), BoundaryPoint::at(2)},
                 Geodesic{BoundaryPoint::at(2), BoundaryPoint::at(5)}),
      NotDisjointError);
  CHECK_THROWS_AS(perpLength(hbInf, Geodesic{BoundaryPoint::at(0),
                                             BoundaryPoint::at(3)}),
                  NotDisjointError);  // apex 1.5 inside height-1 horoball
  // horoball at infinity vs horoball at 0
  Horoball hb0{BoundaryPoint::at(0), 0.25};
  CHECK(perpLength(hbInf, hb0) == doctest::Approx(std::log(4.0)).epsilon(1e-12));
}

TEST_CASE("perpLength numeric cross-check") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> ur(-4, 4);
  int done = 0;
  while (done < 25) {
    int kind = done % 4;
    ConvexBody a, b;
    if (kind == 0) {
      a = Horoball{BoundaryPoint::infinity(), 1.0 + std::fabs(ur(rng))};
      double u = ur(rng), v = ur(rng);
      if (std::fabs(u - v) < 0.2) continue;
      b = Geodesic{BoundaryPoint::at(u), BoundaryPoint::at(v)};
    } else if (kind == 1) {
      double c1 = ur(rng), c2 = ur(rng);
      double r1 = 0.3 + 0.2 * std::fabs(ur(rng)), r2 = 0.3 + 0.2 * std::fabs(ur(rng));
      if (std::fabs(c1 - c2) < r1 + r2 + 0.3) continue;
      a = Geodesic{BoundaryPoint::at(c1 - r1), BoundaryPoint::at(c1 + r1)};
      b = Geodesic{BoundaryPoint::at(c2 - r2), BoundaryPoint::at(c2 + r2)};
    } else if (kind == 2) {
      a = PointH2{ur(rng), 2.5 + std::fabs(ur(rng))};
      double u = ur(rng), v = ur(rng);
      if (std::fabs(u - v) < 0.2 || std::fabs(u - v) > 2.0) continue;
      b = Geodesic{BoundaryPoint::at(u), BoundaryPoint::at(v)};
    } else {
      double p = ur(rng), q = ur(rng);
      if (std::fabs(p - q) < 1.0) continue;
      a = Horoball{BoundaryPoint::at(p), 0.5};
      b = Horoball{BoundaryPoint::at(q), 0.5};
    }
    double closed;
    try {
      closed = perpLength(a, b);
    } catch (const NotDisjointError&) {
      continue;
    }
    double numeric = perpLengthNumeric(a, b);
    CHECK(closed == doctest::Approx(numeric).epsilon(2e-6));
    ++done;
  }
}

TEST_CASE("fordHoroball and meetsHoroball") {
  Horoball h = fordHoroball(Rat(0, 1), 1.0);
  CHECK(!h.center.isInf);
  CHECK(h.center.v == doctest::Approx(0.0));
  CHECK(h.size == doctest::Approx(1.0));
  CHECK(fordHoroball(Rat(1, 2), 1.0).size == doctest::Approx(0.25));
  CHECK(fordHoroball(Rat(3, 7), 2.0).size ==
        doctest::Approx(0.5 * fordHoroball(Rat(3, 7), 1.0).size));
  CHECK_THROWS_AS(fordHoroball(Rat(1, 2), 0.5), DomainError);

  double phi = (1 + std::sqrt(5.0)) / 2;
  CHECK(!meetsHoroball(phi, Rat(1, 1), 1.0));  // |phi-1| = 0.618 > 1/2
  CHECK(meetsHoroball(phi, Rat(2, 1), 1.0));   // |phi-2| = 0.382 <= 1/2
  CHECK(meetsHoroball(0.99 / 2.0, Rat(0, 1), 1.0));

  // arithmetic test agrees with the geometric disc-intersection test
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> xr(-2, 2), psir(1.0, 3.0);
  std::uniform_int_distribution<long> pr(-6, 6), qr(1, 9);
  for (int i = 0; i < 10000; ++i) {
    double xi = xr(rng), psi = psir(rng);
    Rat r(pr(rng), qr(rng));
    r.canonicalize();
    Horoball hb = fordHoroball(r, psi);
    bool geometric = std::fabs(xi - hb.center.v) <= hb.size / 2.0;
    CHECK(meetsHoroball(xi, r, psi) == geometric);
  }
}

TEST_CASE("actOnBody") {
  Horoball hbInf{BoundaryPoint::infinity(), 2.5};
  auto same = actOnBody(UnimodularMatrix(1, 1, 0, 1), hbInf);
  CHECK(std::get<Horoball>(same).center.isInf);
  CHECK(std::get<Horoball>(same).size == doctest::Approx(2.5));

  Geodesic g{BoundaryPoint::at(-0.5), BoundaryPoint::at(3)};
  auto idg = actOnBody(UnimodularMatrix::identity(), g);
  CHECK(std::get<Geodesic>(idg).e1.v == doctest::Approx(-0.5));

  // perpLength is isometry-invariant
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> ur(-3, 3);
  int done = 0;
  while (done < 100) {
    double u = ur(rng), v = ur(rng);
    if (std::fabs(u - v) < 0.3) continue;
    ConvexBody a = Horoball{BoundaryPoint::infinity(), 1.0};
    ConvexBody b = Geodesic{BoundaryPoint::at(u), BoundaryPoint::at(v)};
    double before;
    try {
      before = perpLength(a, b);
    } catch (const NotDisjointError&) {
      continue;
    }
    UnimodularMatrix m = randomUnimodular(rng);
    double after = perpLength(actOnBody(m, a), actOnBody(m, b));
    CHECK(after == doctest::Approx(before).epsilon(1e-10));
    ++done;
  }
}

TEST_CASE("geodesicOfQI and the height identity") {
  QuadraticIrrational phi = goldenRatio();
  Geodesic g = geodesicOfQI(phi);
  double lo = std::min(g.e1.v, g.e2.v), hi = std::max(g.e1.v, g.e2.v);
  CHECK(lo == doctest::Approx((1 - std::sqrt(5.0)) / 2).epsilon(1e-12));
  CHECK(hi == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-12));

  Horoball hbInf{BoundaryPoint::infinity(), 1.0};
  for (auto [A, B, C] : {std::tuple<long, long, long>{3, 1, -1},
                         {2, 0, -1},
                         {-3, 1, 1},
                         {5, 3, -4}}) {
    QuadraticIrrational alpha = rootOfForm(BinaryQuadraticForm(Int(A), Int(B), Int(C)));
    double H = heightQI(alpha);
    REQUIRE(H > 1);
    CHECK(perpLength(hbInf, geodesicOfQI(alpha)) ==
          doctest::Approx(std::log(H)).epsilon(1e-12));
  }
}
