#include "orbitcount/forms.hpp"

#include <algorithm>
#include <cmath>

namespace oc {

namespace {

bool isPerfectSquare(const Int& n) {
  if (n < 0) return false;
  Int r = sqrt(n);
  return r * r == n;
}

}  // namespace

BinaryQuadraticForm::BinaryQuadraticForm(Int A, Int B, Int C)
    : A_(std::move(A)), B_(std::move(B)), C_(std::move(C)) {
  if (A_ == 0) throw DomainError("BinaryQuadraticForm: A must be nonzero");
  Int D = disc();
  if (D <= 0 || isPerfectSquare(D))
    throw DomainError("BinaryQuadraticForm: disc must be positive non-square");
  Int g = gcd(gcd(A_, B_), C_);
  if (g != 1) throw DomainError("BinaryQuadraticForm: form must be primitive");
}

bool BinaryQuadraticForm::operator<(const BinaryQuadraticForm& o) const {
  if (A_ != o.A_) return A_ < o.A_;
  if (B_ != o.B_) return B_ < o.B_;
  return C_ < o.C_;
}

QuadraticIrrational rootOfForm(const BinaryQuadraticForm& f) {
  Int D = f.disc();
  // split D = e^2 * d with d squarefree
  Int e = 1, rem = D;
  for (Int p = 2; p * p <= rem; ++p) {
    while (rem % (p * p) == 0) {
      rem /= p * p;
      e *= p;
    }
  }
  long d = rem.get_si();
  Rat a = Rat(-f.B()) / Rat(2 * f.A());
  Rat b = Rat(e) / Rat(2 * f.A());
  return QuadraticIrrational(RealQuadratic(a, b, d));
}

BinaryQuadraticForm formOfQI(const QuadraticIrrational& alpha) {
  // minimal polynomial x^2 - t x + n, cleared to a primitive integer form
  Rat t = alpha.value().trace();
  Rat n = alpha.value().norm();
  Int den = lcm(t.get_den(), n.get_den());
  Int A = den;
  Int B = Rat(-t * den).get_num();
  Int C = Rat(n * den).get_num();
  Int g = gcd(gcd(A, B), C);
  A /= g;
  B /= g;
  C /= g;
  if (sgn(alpha.value().b()) < 0) {
    A = -A;
    B = -B;
    C = -C;
  }
  return {A, B, C};
}

namespace {

// One Gauss reduction step. For positive non-square discriminant, a form is
// reduced iff |sqrt(D) - 2|A|| < B < sqrt(D).
bool isReduced(const BinaryQuadraticForm& f, const Int& sq) {
  // sq = floor(sqrt(D)); use exact integer comparisons:
  //   B > 0, B <= sq (B < sqrt(D) since D non-square), and
  //   (sqrt(D) - 2|A|) < B  <=>  D < (B + 2|A|)^2
  if (f.B() <= 0 || f.B() > sq) return false;
  Int twoAbsA = 2 * abs(f.A());
  Int s = f.B() + twoAbsA;
  return f.disc() < s * s;
}

BinaryQuadraticForm rho(const BinaryQuadraticForm& f, const Int& sq) {
  Int A2 = f.C();
  Int m = 2 * abs(A2);
  // choose B2 = -B mod 2|C| in the target window
  Int B2;
  if (abs(A2) > sq) {
    // |r| minimal: -|C| < r <= |C|
    Int r = (-f.B()) % m;
    if (r <= -abs(A2)) r += m;
    if (r > abs(A2)) r -= m;
    B2 = r;
  } else {
    // sqrt(D) - 2|C| < r < sqrt(D): take the largest residue <= sq
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), Int(-f.B()).get_mpz_t(), m.get_mpz_t());
    Int k;
    mpz_fdiv_q(k.get_mpz_t(), Int(sq - r).get_mpz_t(), m.get_mpz_t());
    B2 = r + k * m;
  }
  Int C2 = (B2 * B2 - f.disc()) / (4 * A2);
  return {A2, B2, C2};
}

}  // namespace

std::vector<BinaryQuadraticForm> gaussReduceCycle(const BinaryQuadraticForm& f) {
  Int sq = sqrt(f.disc());
  BinaryQuadraticForm g = f;
  for (int i = 0; i < 10000 && !isReduced(g, sq); ++i) g = rho(g, sq);
  if (!isReduced(g, sq)) throw DomainError("gaussReduceCycle: reduction failed");
  std::vector<BinaryQuadraticForm> cycle{g};
  BinaryQuadraticForm h = rho(g, sq);
  while (!(h == g)) {
    cycle.push_back(h);
    h = rho(h, sq);
  }
  std::sort(cycle.begin(), cycle.end());
  return cycle;
}

bool equivalentForms(const BinaryQuadraticForm& f, const BinaryQuadraticForm& g) {
  if (f.disc() != g.disc()) return false;
  return gaussReduceCycle(f) == gaussReduceCycle(g);
}

PellSolution fundamentalPell(const Int& D) {
  if (D <= 0 || isPerfectSquare(D))
    throw DomainError("fundamentalPell: D must be positive non-square");
  // units of the order of discriminant D ordered by their u-coordinate;
  // scan u upward, preferring the -4 solution (smaller unit) at equal u
  for (Int u = 1; u < 100000000; ++u) {
    Int m = D * u * u - 4;
    if (m > 0 && isPerfectSquare(m)) return {sqrt(m), u, -4};
    Int p = D * u * u + 4;
    if (isPerfectSquare(p)) return {sqrt(p), u, +4};
  }
  throw DomainError("fundamentalPell: search budget exhausted");
}

UnimodularMatrix fundamentalAutomorph(const BinaryQuadraticForm& f) {
  Int D = f.disc();
  PellSolution s = fundamentalPell(D);
  Int t = s.t, u = s.u;
  if (s.rhs == -4) {
    // square the unit: (t + u sqrt(D))/2 squared -> ((t^2+Du^2)/2, t*u)
    Int t2 = (t * t + D * u * u) / 2;
    u = t * u;
    t = t2;
  }
  return {(t - f.B() * u) / 2, -f.C() * u, f.A() * u, (t + f.B() * u) / 2};
}

bool isIntegralQI(const QuadraticIrrational& alpha) {
  return alpha.value().trace().get_den() == 1 &&
         alpha.value().norm().get_den() == 1;
}

double regulatorOfLattice(const QuadraticIrrational& alpha0) {
  if (!isIntegralQI(alpha0))
    throw DomainError("regulatorOfLattice: alpha0 must be an algebraic integer");
  Int t = alpha0.value().trace().get_num();
  Int n = alpha0.value().norm().get_num();
  Int D = t * t - 4 * n;  // discriminant of Z + Z*alpha0
  PellSolution s = fundamentalPell(D);
  double eps = (s.t.get_d() + s.u.get_d() * std::sqrt(D.get_d())) / 2.0;
  return std::log(eps);
}

double stabilizerRegulator(const QuadraticIrrational& alpha0) {
  if (!isIntegralQI(alpha0))
    throw DomainError("stabilizerRegulator: alpha0 must be an algebraic integer");
  Int t = alpha0.value().trace().get_num();
  Int n = alpha0.value().norm().get_num();
  Int D = t * t - 4 * n;
  PellSolution s = fundamentalPell(D);
  double eps = (s.t.get_d() + s.u.get_d() * std::sqrt(D.get_d())) / 2.0;
  // a norm -1 fundamental unit squares to the norm-one generator
  return (s.rhs == -4 ? 2.0 : 1.0) * std::log(eps);
}

}  // namespace oc
