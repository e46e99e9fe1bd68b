#include "orbitcount/zeta.hpp"

#include <cmath>
#include <vector>

namespace oc {

FieldTag fieldTagFromDisc(int disc) {
  switch (disc) {
    case 0: return FieldTag::Rational;
    case -3: return FieldTag::Dm3;
    case -4: return FieldTag::Dm4;
    case -8: return FieldTag::Dm8;
    default: throw std::domain_error("unsupported field discriminant");
  }
}

double hurwitzZeta(double s, double a, int cutoff) {
  if (s <= 1.0 || a <= 0.0)
    throw std::domain_error("hurwitzZeta: need s > 1, a > 0");
  // Euler-Maclaurin with Bernoulli corrections
  static const double B[] = {1.0 / 6,  -1.0 / 30, 1.0 / 42,   -1.0 / 30,
                             5.0 / 66, -691.0 / 2730, 7.0 / 6};
  double sum = 0.0;
  int N = cutoff;
  for (int n = 0; n < N; ++n) sum += std::pow(n + a, -s);
  double x = N + a;
  sum += std::pow(x, 1.0 - s) / (s - 1.0);
  sum += 0.5 * std::pow(x, -s);
  double term = s * std::pow(x, -s - 1.0);  // d/dx of -x^{-s}, running factor
  double fact = 1.0;
  for (std::size_t k = 0; k < sizeof(B) / sizeof(B[0]); ++k) {
    // B_{2k+2}/(2k+2)! * s(s+1)...(s+2k) * x^{-s-2k-1}
    fact = 1.0;
    double poch = 1.0;
    for (int j = 0; j < 2 * static_cast<int>(k) + 1; ++j) poch *= (s + j);
    double f = 1.0;
    for (int j = 1; j <= 2 * static_cast<int>(k) + 2; ++j) f *= j;
    sum += B[k] / f * poch * std::pow(x, -s - 2.0 * k - 1.0);
    (void)term;
    (void)fact;
  }
  return sum;
}

double riemannZeta(double s, int cutoff) { return hurwitzZeta(s, 1.0, cutoff); }

double dirichletL(int disc, double s, int cutoff) {
  // L(s, chi) = m^{-s} sum_{r=1..m} chi(r) zeta(s, r/m)
  std::vector<int> chi;
  int m;
  switch (disc) {
    case -3: m = 3; chi = {0, 1, -1}; break;
    case -4: m = 4; chi = {0, 1, 0, -1}; break;
    case -8: m = 8; chi = {0, 1, 0, 1, 0, -1, 0, -1}; break;
    default: throw std::domain_error("dirichletL: unsupported discriminant");
  }
  double sum = 0.0;
  for (int r = 1; r < m; ++r) {
    if (chi[r] != 0)
      sum += chi[r] * hurwitzZeta(s, static_cast<double>(r) / m, cutoff);
  }
  return sum * std::pow(static_cast<double>(m), -s);
}

double zetaConstants(FieldTag K, int s, int cutoff) {
  if (s != 2 && s != 3)
    throw std::domain_error("zetaConstants: s must be 2 or 3");
  double z = riemannZeta(s, cutoff);
  if (K == FieldTag::Rational) return z;
  return z * dirichletL(static_cast<int>(K), s, cutoff);
}

int unitCount(FieldTag K) {
  switch (K) {
    case FieldTag::Dm3: return 6;
    case FieldTag::Dm4: return 4;
    case FieldTag::Dm8: return 2;
    default: throw std::domain_error("unitCount: imaginary quadratic tags only");
  }
}

int absDisc(FieldTag K) {
  switch (K) {
    case FieldTag::Dm3: return 3;
    case FieldTag::Dm4: return 4;
    case FieldTag::Dm8: return 8;
    default: throw std::domain_error("absDisc: imaginary quadratic tags only");
  }
}

}  // namespace oc
