#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "orbitcount/orbits.hpp"

using namespace oc;

namespace {

using FormKey = std::tuple<long, long, long>;

FormKey keyOf(const BinaryQuadraticForm& f) {
  return {f.A().get_si(), f.B().get_si(), f.C().get_si()};
}

/** All distinct PSL2(Z) elements reachable by words of length <= len. */
std::vector<UnimodularMatrix> wordBall(int len) {
  UnimodularMatrix T(1, 1, 0, 1), Ti(1, -1, 0, 1), S(0, -1, 1, 0);
  std::map<std::tuple<long, long, long, long>, UnimodularMatrix> seen;
  auto key = [](const UnimodularMatrix& m) {
    return std::make_tuple(m.m11().get_si(), m.m12().get_si(),
                           m.m21().get_si(), m.m22().get_si());
  };
  std::vector<UnimodularMatrix> frontier{UnimodularMatrix::identity()};
  seen.emplace(key(frontier[0]), frontier[0]);
  for (int d = 0; d < len; ++d) {
    std::vector<UnimodularMatrix> next;
    for (const auto& m : frontier)
      for (const auto& g : {T, Ti, S}) {
        UnimodularMatrix p = m * g;
        if (seen.emplace(key(p), p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  std::vector<UnimodularMatrix> all;
  for (auto& [k, m] : seen) {
    (void)k;
    all.push_back(m);
  }
  return all;
}

}  // namespace

TEST_CASE("enumerateFarey") {
  auto f3 = enumerateFarey(3, Rat(0), Rat(1));
  REQUIRE(f3.size() == 5);
  CHECK(f3[0] == Rat(0));
  CHECK(f3[1] == Rat(1, 3));
  CHECK(f3[2] == Rat(1, 2));
  CHECK(f3[3] == Rat(2, 3));
  CHECK(f3[4] == Rat(1));

  CHECK(enumerateFarey(1, Rat(0), Rat(1)).size() == 2);

  // totient-sum oracle
  auto f100 = enumerateFarey(100, Rat(0), Rat(1));
  auto tot = totientTable(100);
  i64 expect = 1;
  for (i64 q = 1; q <= 100; ++q) expect += tot[q];
  CHECK(static_cast<i64>(f100.size()) == expect);
  CHECK(expect == 3045);
  CHECK(std::is_sorted(f100.begin(), f100.end()));
  CHECK(std::adjacent_find(f100.begin(), f100.end()) == f100.end());

  // thread count does not change the output
  CHECK(enumerateFarey(71, Rat(-1, 3), Rat(5, 2), 1) ==
        enumerateFarey(71, Rat(-1, 3), Rat(5, 2), 4));
}

TEST_CASE("enumerateImagQuadRationals") {
  auto r1 = enumerateImagQuadRationals(FieldTag::Dm4, 1, Rat(0), Rat(1),
                                       Rat(0), Rat(1));
  REQUIRE(r1.size() == 4);
  std::set<std::pair<i64, i64>> ps;
  for (const auto& r : r1) {
    CHECK(r.q == ImagQuadInteger(1, 0, FieldTag::Dm4));
    ps.insert({r.p.x(), r.p.y()});
  }
  CHECK(ps == std::set<std::pair<i64, i64>>({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));

  CHECK(enumerateImagQuadRationals(FieldTag::Dm4, 0.5, Rat(-9), Rat(9), Rat(-9),
                                   Rat(9))
            .empty());

  // brute-force oracle over all fields at s = 3 on [-1, 1]^2
  for (FieldTag K : {FieldTag::Dm4, FieldTag::Dm3, FieldTag::Dm8}) {
    auto got = enumerateImagQuadRationals(K, 3, Rat(-1), Rat(1), Rat(-1), Rat(1));
    std::set<std::tuple<i64, i64, i64, i64>> gotSet, oracle;
    for (const auto& r : got) gotSet.insert({r.q.x(), r.q.y(), r.p.x(), r.p.y()});
    CHECK(gotSet.size() == got.size());
    for (i64 qx = -4; qx <= 4; ++qx)
      for (i64 qy = -4; qy <= 4; ++qy) {
        ImagQuadInteger q(qx, qy, K);
        if (q.isZero() || q.norm() > 9 || !inUnitSector(q)) continue;
        for (i64 px = -8; px <= 8; ++px)
          for (i64 py = -8; py <= 8; ++py) {
            ImagQuadInteger p(px, py, K);
            if (!isUnit(iqGcd(p, q))) continue;
            std::complex<double> v = p.toComplex() / q.toComplex();
            if (std::fabs(v.real()) > 1 + 1e-12 || std::fabs(v.imag()) > 1 + 1e-12)
              continue;
            oracle.insert({qx, qy, px, py});
          }
      }
    CHECK(gotSet == oracle);
  }

  CHECK(enumerateImagQuadRationals(FieldTag::Dm4, 6, Rat(0), Rat(1), Rat(0),
                                   Rat(1), 1).size() ==
        enumerateImagQuadRationals(FieldTag::Dm4, 6, Rat(0), Rat(1), Rat(0),
                                   Rat(1), 3).size());
}

TEST_CASE("enumerateQuadOrbitByForms") {
  QuadraticIrrational phi = goldenRatio();
  auto orb = enumerateQuadOrbitByForms(phi, 3, 3);
  REQUIRE(orb.size() == 8);
  std::set<std::pair<long, long>> ab;
  for (const auto& it : orb) {
    ab.insert({it.form.A().get_si(), it.form.B().get_si()});
    CHECK(it.form.disc() == 5);
    CHECK(heightQI(it.root) <= 3.0 + 1e-12);
    CHECK(abs(traceQI(it.root)) <= 3);
  }
  std::set<std::pair<long, long>> expect;
  for (long a : {1L, -1L})
    for (long b : {1L, -1L, 3L, -3L}) expect.insert({a, b});
  CHECK(ab == expect);

  CHECK(enumerateQuadOrbitByForms(phi, 0.5, 10).empty());

  // word-ball oracle: every orbit point of small height/trace reached by
  // short words must appear, and every output is an equivalent form
  BinaryQuadraticForm q0 = formOfQI(phi);
  BinaryQuadraticForm nq0(-q0.A(), -q0.B(), -q0.C());
  auto big = enumerateQuadOrbitByForms(phi, 6, 8);
  std::set<FormKey> bigSet;
  for (const auto& it : big) {
    bigSet.insert(keyOf(it.form));
    CHECK((equivalentForms(it.form, q0) || equivalentForms(it.form, nq0)));
  }
  CHECK(bigSet.size() == big.size());
  int oracleHits = 0;
  for (const auto& m : wordBall(10)) {
    ExtQuad img = mobiusApply(m, ExtQuad(phi.value()));
    QuadraticIrrational alpha(img.value());
    if (heightQI(alpha) > 6.0 || abs(traceQI(alpha)) > Rat(8)) continue;
    CHECK(bigSet.count(keyOf(formOfQI(alpha))) == 1);
    ++oracleHits;
  }
  CHECK(oracleHits > 20);

  // strict orbit (A > 0 convention of phi's class) is a subset
  auto strict = enumerateQuadOrbitByForms(phi, 6, 8, false);
  std::set<FormKey> strictSet;
  for (const auto& it : strict) {
    strictSet.insert(keyOf(it.form));
    CHECK(equivalentForms(it.form, q0));
    CHECK(bigSet.count(keyOf(it.form)) == 1);
  }
  CHECK(strict.size() <= big.size());

  // threads
  CHECK(enumerateQuadOrbitByForms(phi, 5, 5, true, 3).size() ==
        enumerateQuadOrbitByForms(phi, 5, 5, true, 1).size());
}

TEST_CASE("RelativeOrbitContext") {
  QuadraticIrrational phi = goldenRatio();
  RelativeOrbitContext ctx(phi);
  CHECK(ctx.separation() > 0.05);

  // fundamental domain meets each orbit exactly once: canonicalize is
  // idempotent and constant along gamma0-orbits
  auto members = wordBall(6);
  for (size_t i = 0; i < members.size(); i += 7) {
    ExtQuad img = mobiusApply(members[i], ExtQuad(phi.value()));
    QuadraticIrrational beta(img.value());
    if (beta.value() == phi.value() || beta.value() == phi.value().conj())
      continue;
    QuadraticIrrational c1 = ctx.canonicalize(beta);
    CHECK(ctx.inFundamentalDomain(c1));
    CHECK(ctx.canonicalize(c1).value() == c1.value());
    QuadraticIrrational moved(
        mobiusApply(ctx.gamma0(), ExtQuad(beta.value())).value());
    CHECK(ctx.canonicalize(moved).value() == c1.value());
  }
}

TEST_CASE("enumerateRelativeOrbit") {
  QuadraticIrrational phi = goldenRatio();
  RelativeOrbitContext ctx(phi);

  auto small = enumerateRelativeOrbit(phi, phi, 3);
  auto larger = enumerateRelativeOrbit(phi, phi, 6);
  CHECK(!small.empty());
  CHECK(small.size() <= larger.size());
  std::set<FormKey> largerSet;
  for (const auto& it : larger) largerSet.insert(keyOf(it.form));
  for (const auto& it : small) {
    CHECK(largerSet.count(keyOf(it.form)) == 1);
    CHECK(ctx.inFundamentalDomain(it.beta));
    CHECK(it.height <= 3);
    // the closed-form height agrees with the exact cross-ratio height
    RealQuadratic h = relativeHeightExact(phi, it.beta);
    CHECK(h.isRational());
    CHECK(h.a() == it.height);
  }

  // word-ball oracle with explicit stabilizer dedup
  std::set<FormKey> oracle;
  for (const auto& m : wordBall(12)) {
    ExtQuad img = mobiusApply(m, ExtQuad(phi.value()));
    QuadraticIrrational beta(img.value());
    if (beta.value() == phi.value() || beta.value() == phi.value().conj())
      continue;
    RealQuadratic h = relativeHeightExact(phi, beta);
    if (h.a() > 3 || !h.isRational()) continue;
    oracle.insert(keyOf(formOfQI(ctx.canonicalize(beta))));
  }
  std::set<FormKey> smallSet;
  for (const auto& it : small) smallSet.insert(keyOf(it.form));
  // every oracle element is enumerated; the enumerator may legitimately see
  // more (word ball is not height-complete)
  for (const auto& k : oracle) CHECK(smallSet.count(k) == 1);
  CHECK(oracle.size() >= smallSet.size() / 2);

  // threads
  auto t3 = enumerateRelativeOrbit(phi, phi, 6, 3);
  REQUIRE(t3.size() == larger.size());
  for (size_t i = 0; i < t3.size(); ++i)
    CHECK(keyOf(t3[i].form) == keyOf(larger[i].form));
}

TEST_CASE("enumerateFormHeightRationals") {
  BinaryQuadraticForm q(1, -1, -1);  // x^2 - x y - y^2
  auto a = enumerateFormHeightRationals(q, 1, Rat(0), Rat(1, 2));
  REQUIRE(a.size() == 1);
  CHECK(a[0] == Rat(0));

  auto b = enumerateFormHeightRationals(q, 1, Rat(9, 10), Rat(11, 10));
  REQUIRE(b.size() == 1);
  CHECK(b[0] == Rat(1));

  // window touching a root: phi is inside [3/2, 7/4]
  CHECK_THROWS_AS(enumerateFormHeightRationals(q, 1, Rat(3, 2), Rat(7, 4)),
                  DomainError);

  // sweep oracle
  auto got = enumerateFormHeightRationals(q, 12, Rat(0), Rat(1, 2));
  std::set<Rat> gotSet(got.begin(), got.end());
  CHECK(gotSet.size() == got.size());
  std::set<Rat> oracle;
  for (i64 qq = 1; qq <= 200; ++qq)
    for (i64 p = 0; 2 * p <= qq; ++p) {
      if (std::gcd(p, qq) != 1) continue;
      i64 val = p * p - p * qq - qq * qq;
      if (std::llabs(val) <= 12) oracle.insert(Rat(p, qq));
    }
  CHECK(gotSet == oracle);

  CHECK(enumerateFormHeightRationals(q, 40, Rat(0), Rat(1, 2), 3) ==
        enumerateFormHeightRationals(q, 40, Rat(0), Rat(1, 2), 1));
}

namespace {

bool inTranslationLattice(const ImagQuadInteger& g) {
  switch (g.field()) {
    case FieldTag::Dm4: return (g.x() + g.y()) % 2 == 0;
    case FieldTag::Dm8: return g.x() % 2 == 0;
    default: return true;
  }
}

/** Independent equivalence test for rational-point triples: same point up to
 *  unit scaling and integral left translation. */
bool heisEquivalent(const HeisRationalPoint& s, const HeisRationalPoint& t) {
  FieldTag K = s.a.field();
  for (const ImagQuadInteger& u : ringUnits(K)) {
    ImagQuadInteger a = u * s.a, b = u * s.b, c = u * s.c;
    if (!(c == t.c)) continue;
    IqDivRem dg = iqDivRem(t.b - b, c);
    if (!dg.r.isZero() || !inTranslationLattice(dg.q)) continue;
    IqDivRem d0 = iqDivRem(t.a - a - b * dg.q.conj(), c);
    if (!d0.r.isZero()) continue;
    if (d0.q.twoRe() != dg.q.norm()) continue;
    return true;
  }
  return false;
}

}  // namespace

TEST_CASE("enumerateHeisRationals") {
  CHECK(enumerateHeisRationals(FieldTag::Dm4, 1).size() == 1);
  CHECK(enumerateHeisRationals(FieldTag::Dm4, 0.5).empty());

  for (FieldTag K : {FieldTag::Dm4, FieldTag::Dm3, FieldTag::Dm8}) {
    auto got = enumerateHeisRationals(K, 2);
    // outputs are canonical and pairwise inequivalent
    for (const auto& p : got) CHECK(canonicalHeisRational(p) == p);
    for (size_t i = 0; i < got.size(); ++i)
      for (size_t j = i + 1; j < got.size(); ++j)
        CHECK(!heisEquivalent(got[i], got[j]));

    // raw-triple oracle: every valid triple with small entries and |c| <= 2
    // is equivalent to exactly one output
    int checked = 0;
    for (i64 cx = -2; cx <= 2; ++cx)
      for (i64 cy = -2; cy <= 2; ++cy) {
        ImagQuadInteger c(cx, cy, K);
        if (c.isZero() || c.norm() > 4) continue;
        for (i64 bx = -4; bx <= 4; ++bx)
          for (i64 by = -4; by <= 4; ++by) {
            ImagQuadInteger b(bx, by, K);
            for (i64 ax = -12; ax <= 12; ++ax)
              for (i64 ay = -12; ay <= 12; ++ay) {
                ImagQuadInteger a(ax, ay, K);
                if ((a * c.conj()).twoRe() != b.norm()) continue;
                if (!isUnit(iqGcd(iqGcd(a, b), c))) continue;
                HeisRationalPoint raw(a, b, c);
                int hits = 0;
                for (const auto& p : got)
                  if (heisEquivalent(raw, p)) ++hits;
                REQUIRE(hits == 1);
                ++checked;
              }
          }
      }
    CHECK(checked > 20);
  }

  auto a = enumerateHeisRationals(FieldTag::Dm4, 5, 1);
  auto b = enumerateHeisRationals(FieldTag::Dm4, 5, 4);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  // counts nondecreasing in s
  CHECK(enumerateHeisRationals(FieldTag::Dm4, 3).size() <= a.size());
}

TEST_CASE("countIntegralHeisBall") {
  CHECK(countIntegralHeisBall(1.0) == 1);
  CHECK(countIntegralHeisBall(std::sqrt(2.0)) == 7);

  // xyz-gauge oracle at moderate radius
  for (double R : {2.0, 3.5, 5.0}) {
    std::int64_t oracle = 0;
    for (i64 wx = -8; wx <= 8; ++wx)
      for (i64 wy = -8; wy <= 8; ++wy) {
        i64 n = wx * wx + wy * wy;
        if (n % 2 != 0) continue;
        for (i64 ti = -60; ti <= 60; ++ti) {
          double g4 = static_cast<double>(n) * n + 4.0 * ti * ti;
          if (g4 <= R * R * R * R * (1 + 1e-12)) ++oracle;
        }
      }
    CHECK(countIntegralHeisBall(R) == oracle);
  }
  CHECK(countIntegralHeisBall(10) >= countIntegralHeisBall(9));
}

TEST_CASE("enumerateChains") {
  Chain c0 = verticalChain(Cplx(1, 1));
  auto e1 = enumerateChains(FieldTag::Dm4, c0, 0.2, 3);
  CHECK(e1.truncated);
  CHECK(!e1.items.empty());
  for (const auto& it : e1.items) {
    CHECK(it.diamMod >= 0.2);
    CHECK(it.chain.isFinite);
    // sandwich between the gauges holds for diameters too
    CHECK(it.diamMod <= it.diamCyg * (1 + 1e-9));
    CHECK(it.diamCyg <= it.diamMod * std::sqrt(2.0) * (1 + 1e-9));
  }
  auto e2 = enumerateChains(FieldTag::Dm4, c0, 0.2, 4);
  CHECK(e1.items.size() <= e2.items.size());
  auto e3 = enumerateChains(FieldTag::Dm4, c0, 0.5, 4);
  CHECK(e3.items.size() <= e2.items.size());

  // non-arithmetic input is rejected
  double s2 = std::sqrt(2.0);
  Chain bad = chainFromLine({1, s2, 1}, {1, -s2, 1});
  CHECK_THROWS_AS(enumerateChains(FieldTag::Dm4, bad, 0.1, 3), DomainError);
}
