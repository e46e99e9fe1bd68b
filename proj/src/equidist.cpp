#include "orbitcount/equidist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "orbitcount/heisenberg.hpp"
#include "orbitcount/quadirr.hpp"

namespace oc {

namespace {

/** Neumaier-compensated sum. */
double compensatedSum(const std::vector<double>& xs) {
  double sum = 0, carry = 0;
  for (double x : xs) {
    double t = sum + x;
    carry += (std::abs(sum) >= std::abs(x)) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  return sum + carry;
}

/** Antiderivative of 1/(a(t-r1)(t-r2)) away from the roots. */
double reciprocalFormPrimitive(double a, double r1, double r2, double t) {
  return std::log(std::abs((t - r2) / (t - r1))) / (a * (r2 - r1));
}

/** Integral of dt/|a t^2 + b t + c| over a root-free interval [lo, hi]. */
double reciprocalFormIntegral(double a, double b, double c, double lo,
                              double hi) {
  double disc = b * b - 4 * a * c;
  if (disc <= 0)
    throw std::domain_error("reciprocalForm: needs two distinct real roots");
  double r1 = (-b - std::sqrt(disc)) / (2 * a);
  double r2 = (-b + std::sqrt(disc)) / (2 * a);
  if (r1 > r2) std::swap(r1, r2);
  if ((lo < r1 && hi > r1) || (lo < r2 && hi > r2))
    throw std::domain_error("reciprocalForm: window contains a root");
  return std::abs(reciprocalFormPrimitive(a, r1, r2, hi) -
                  reciprocalFormPrimitive(a, r1, r2, lo));
}

/** Unnormalized 1-d target mass of [lo, hi] within one window interval. */
double rawIntervalMass(const TargetDensity& nu, double lo, double hi) {
  if (nu.kind == TargetDensity::Kind::UniformInterval) return hi - lo;
  return reciprocalFormIntegral(nu.qa, nu.qb, nu.qc, lo, hi);
}

/** Total unnormalized 1-d target mass over the window. */
double rawWindowMass(const TargetDensity& nu) {
  double total = 0;
  for (const auto& [lo, hi] : nu.intervals) total += rawIntervalMass(nu, lo, hi);
  return total;
}

/** One discrepancy bin: an interval (1-d) or a box cell. */
struct Cell {
  std::array<double, 3> lo{}, hi{};
};

/** Equal subdivision of each window interval, bin counts proportional to
 *  length (largest remainder, total exactly `bins`), ordered by position. */
std::vector<Cell> cells1D(const TargetDensity& nu, int bins) {
  double total = 0;
  for (const auto& [lo, hi] : nu.intervals) total += hi - lo;
  std::size_t n = nu.intervals.size();
  std::vector<int> counts(n, 1);
  std::vector<double> remainder(n);
  int assigned = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double share = bins * (nu.intervals[i].second - nu.intervals[i].first) / total;
    counts[i] = std::max(1, static_cast<int>(std::floor(share)));
    remainder[i] = share - counts[i];
    assigned += counts[i];
  }
  while (assigned < bins) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (remainder[i] > remainder[best]) best = i;
    ++counts[best];
    remainder[best] -= 1;
    ++assigned;
  }
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < n; ++i) {
    auto [lo, hi] = nu.intervals[i];
    for (int k = 0; k < counts[i]; ++k) {
      Cell c;
      c.lo[0] = lo + (hi - lo) * k / counts[i];
      c.hi[0] = lo + (hi - lo) * (k + 1) / counts[i];
      cells.push_back(c);
    }
  }
  return cells;
}

bool is1D(const TargetDensity& nu) {
  return nu.kind == TargetDensity::Kind::UniformInterval ||
         nu.kind == TargetDensity::Kind::ReciprocalForm;
}

int densityDim(const TargetDensity& nu) {
  switch (nu.kind) {
    case TargetDensity::Kind::UniformInterval:
    case TargetDensity::Kind::ReciprocalForm:
      return 1;
    case TargetDensity::Kind::UniformPlanarBox:
      return 2;
    case TargetDensity::Kind::HeisenbergHaarBox:
      return 3;
  }
  return 1;
}

/** Empirical mass of a cell; the window's top face is closed. */
double empiricalCellMass(const EmpiricalMeasure& mu, const Cell& c,
                         const std::array<double, 3>& windowHi, int dim) {
  double mass = 0;
  for (std::size_t i = 0; i < mu.points.size(); ++i) {
    bool in = true;
    for (int k = 0; k < dim && in; ++k) {
      double x = mu.points[i][k];
      bool top = c.hi[k] == windowHi[k];
      in = x >= c.lo[k] && (top ? x <= c.hi[k] : x < c.hi[k]);
    }
    if (in) mass += mu.weights[i];
  }
  return mass / mu.totalMass;
}

}  // namespace

EmpiricalMeasure EmpiricalMeasure::fromValues(const std::vector<double>& xs) {
  EmpiricalMeasure mu;
  mu.dim = 1;
  for (double x : xs) {
    mu.points.push_back({x, 0, 0});
    mu.weights.push_back(1.0);
  }
  mu.totalMass = compensatedSum(mu.weights);
  return mu;
}

EmpiricalMeasure EmpiricalMeasure::fromPoints(
    int dim, const std::vector<std::array<double, 3>>& xs) {
  if (dim < 1 || dim > 3)
    throw std::domain_error("EmpiricalMeasure: dim must be 1, 2 or 3");
  EmpiricalMeasure mu;
  mu.dim = dim;
  mu.points = xs;
  mu.weights.assign(xs.size(), 1.0);
  mu.totalMass = compensatedSum(mu.weights);
  return mu;
}

void EmpiricalMeasure::add(const std::array<double, 3>& x, double weight) {
  if (weight <= 0)
    throw std::domain_error("EmpiricalMeasure: weights must be positive");
  points.push_back(x);
  weights.push_back(weight);
  totalMass = compensatedSum(weights);
}

TargetDensity TargetDensity::uniformOnInterval(double lo, double hi) {
  return uniformOnIntervals({{lo, hi}});
}

TargetDensity TargetDensity::uniformOnIntervals(
    const std::vector<std::pair<double, double>>& intervals) {
  if (intervals.empty())
    throw std::domain_error("TargetDensity: empty window");
  for (const auto& [lo, hi] : intervals)
    if (lo >= hi) throw std::domain_error("TargetDensity: empty interval");
  TargetDensity nu;
  nu.kind = Kind::UniformInterval;
  nu.intervals = intervals;
  return nu;
}

TargetDensity TargetDensity::reciprocalForm(
    double a, double b, double c,
    const std::vector<std::pair<double, double>>& intervals) {
  TargetDensity nu = uniformOnIntervals(intervals);
  nu.kind = Kind::ReciprocalForm;
  nu.qa = a;
  nu.qb = b;
  nu.qc = c;
  for (const auto& [lo, hi] : intervals)
    reciprocalFormIntegral(a, b, c, lo, hi);  // validates root-free window
  return nu;
}

TargetDensity TargetDensity::uniformOnBox(double xLo, double xHi, double yLo,
                                          double yHi) {
  if (xLo >= xHi || yLo >= yHi)
    throw std::domain_error("TargetDensity: empty box");
  TargetDensity nu;
  nu.kind = Kind::UniformPlanarBox;
  nu.lo = {xLo, yLo, 0};
  nu.hi = {xHi, yHi, 0};
  return nu;
}

TargetDensity TargetDensity::heisenbergHaarBox(const std::array<double, 3>& lo,
                                               const std::array<double, 3>& hi) {
  for (int k = 0; k < 3; ++k)
    if (lo[k] >= hi[k]) throw std::domain_error("TargetDensity: empty box");
  TargetDensity nu;
  nu.kind = Kind::HeisenbergHaarBox;
  nu.lo = lo;
  nu.hi = hi;
  return nu;
}

double TargetDensity::cellMass(const std::array<double, 3>& cellLo,
                               const std::array<double, 3>& cellHi) const {
  switch (kind) {
    case Kind::UniformInterval:
    case Kind::ReciprocalForm: {
      return rawIntervalMass(*this, cellLo[0], cellHi[0]) /
             rawWindowMass(*this);
    }
    // The Haar density (1/2) dx dy dt is a constant multiple of Lebesgue in
    // (x, y, t) coordinates, so both box kinds normalize to volume ratio.
    case Kind::UniformPlanarBox:
    case Kind::HeisenbergHaarBox: {
      int dim = kind == Kind::UniformPlanarBox ? 2 : 3;
      double frac = 1;
      for (int k = 0; k < dim; ++k)
        frac *= (cellHi[k] - cellLo[k]) / (hi[k] - lo[k]);
      return frac;
    }
  }
  return 0;
}

double discrepancy(const EmpiricalMeasure& mu, const TargetDensity& nu,
                   int bins) {
  if (mu.points.empty()) throw EmptyMeasureError("discrepancy: empty measure");
  if (bins < 1) throw std::domain_error("discrepancy: bins must be positive");
  int dim = densityDim(nu);
  if (mu.dim != dim)
    throw std::domain_error("discrepancy: dimension mismatch");

  if (is1D(nu)) {
    // Sup over unions of consecutive bins, by prefix-sum differences.
    std::vector<Cell> cells = cells1D(nu, bins);
    std::array<double, 3> windowHi = {nu.intervals.back().second, 0, 0};
    double diff = 0, lo = 0, hi = 0;
    for (const Cell& c : cells) {
      diff += empiricalCellMass(mu, c, windowHi, 1) - nu.cellMass(c.lo, c.hi);
      lo = std::min(lo, diff);
      hi = std::max(hi, diff);
    }
    return hi - lo;
  }

  // Product grid, per-cell max.
  double worst = 0;
  int nx = bins, ny = bins, nz = dim == 3 ? bins : 1;
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      for (int k = 0; k < nz; ++k) {
        std::array<int, 3> idx = {i, j, k};
        Cell c;
        std::array<int, 3> counts = {nx, ny, nz};
        for (int a = 0; a < dim; ++a) {
          c.lo[a] = nu.lo[a] + (nu.hi[a] - nu.lo[a]) * idx[a] / counts[a];
          c.hi[a] = nu.lo[a] + (nu.hi[a] - nu.lo[a]) * (idx[a] + 1) / counts[a];
        }
        worst = std::max(worst, std::abs(empiricalCellMass(mu, c, nu.hi, dim) -
                                         nu.cellMass(c.lo, c.hi)));
      }
  return worst;
}

double ksStatistic(const EmpiricalMeasure& mu, const TargetDensity& nu) {
  if (mu.points.empty()) throw EmptyMeasureError("ksStatistic: empty measure");
  if (!is1D(nu))
    throw std::domain_error("ksStatistic: 1-d targets only");
  std::vector<std::pair<double, double>> pts;  // (x, weight)
  for (std::size_t i = 0; i < mu.points.size(); ++i)
    pts.emplace_back(mu.points[i][0], mu.weights[i]);
  std::sort(pts.begin(), pts.end());

  auto targetCdf = [&nu](double x) {
    double mass = 0;
    for (const auto& [lo, hi] : nu.intervals) {
      if (x <= lo) break;
      mass += rawIntervalMass(nu, lo, std::min(x, hi));
    }
    return mass / rawWindowMass(nu);
  };

  double sup = 0, cum = 0;
  for (const auto& [x, w] : pts) {
    double target = targetCdf(x);
    sup = std::max(sup, std::abs(cum / mu.totalMass - target));
    cum += w;
    sup = std::max(sup, std::abs(cum / mu.totalMass - target));
  }
  return sup;
}

FitResult fitPowerLaw(const std::vector<std::pair<double, double>>& samples) {
  if (samples.size() < 3)
    throw std::domain_error("fitPowerLaw: needs at least 3 samples");
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    auto [s, n] = samples[i];
    if (s <= 0 || n <= 0)
      throw std::domain_error("fitPowerLaw: samples must be positive");
    if (i > 0 && s <= samples[i - 1].first)
      throw std::domain_error("fitPowerLaw: s must be increasing");
    xs.push_back(std::log(s));
    ys.push_back(std::log(n));
  }
  double n = static_cast<double>(xs.size());
  double mx = compensatedSum(xs) / n, my = compensatedSum(ys) / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  FitResult fit;
  fit.exponent = sxy / sxx;
  fit.constant = std::exp(my - fit.exponent * mx);
  double ssRes = 0, ssTot = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double pred = my + fit.exponent * (xs[i] - mx);
    ssRes += (ys[i] - pred) * (ys[i] - pred);
    ssTot += (ys[i] - my) * (ys[i] - my);
  }
  fit.rSquared = ssTot == 0 ? 1.0 : 1.0 - ssRes / ssTot;
  return fit;
}

double theoreticalConstant(const std::string& name, const ConstantParams& p) {
  const double pi = std::numbers::pi;
  auto needField = [&p, &name]() {
    if (p.field == FieldTag::Rational)
      throw std::domain_error("theoreticalConstant: " + name +
                              " needs an imaginary quadratic field");
  };
  if (name == "farey_mertens") return 3 / (pi * pi);
  if (name == "gaussian_mertens") {
    needField();
    return 2 * pi /
           (unitCount(p.field) * absDisc(p.field) * zetaConstants(p.field, 2));
  }
  if (name == "quad_trace_density") {
    if (p.regA <= 0) throw std::domain_error("theoreticalConstant: regA > 0");
    return 3 * p.regA / (pi * pi);
  }
  if (name == "relative_count_slope") {
    if (p.regA <= 0 || p.regB <= 0)
      throw std::domain_error("theoreticalConstant: regulators > 0");
    return 48 * p.regA * p.regB / (pi * pi);
  }
  if (name == "form_mertens_density") return 6 / (pi * pi);
  if (name == "heis_mertens") {
    needField();
    return zetaConstants(FieldTag::Rational, 3) /
           (2 * pi * unitCount(p.field) * std::sqrt(absDisc(p.field)) *
            zetaConstants(p.field, 3));
  }
  if (name == "heis_equid_norm") {
    needField();
    return pi * unitCount(p.field) * std::pow(absDisc(p.field), 1.5) *
           zetaConstants(p.field, 3) / zetaConstants(FieldTag::Rational, 3);
  }
  if (name == "heis_gauss_ball") {
    needField();
    return 2 * haarBallVolume(1.0) / absDisc(p.field);
  }
  if (name == "closed_geodesic_pair") {
    if (p.n < 2 || p.lenMinus <= 0 || p.lenPlus <= 0 || p.volume <= 0)
      throw std::domain_error("theoreticalConstant: invalid pair params");
    double n = p.n;
    double geom = std::pow(pi, n / 2 - 1) *
                  std::pow(std::tgamma((n - 1) / 2), 2) /
                  (std::pow(2.0, n - 2) * (n - 1) * std::tgamma(n / 2));
    return geom * p.lenMinus * p.lenPlus / p.volume;
  }
  throw std::domain_error("theoreticalConstant: unknown name " + name);
}

}  // namespace oc
