#include "orbitcount/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "orbitcount/orbits.hpp"

namespace oc {

namespace {

/** Geometric checkpoint ladder ..., sMax/4, sMax/2, sMax (ascending). */
std::vector<double> checkpoints(double sMax, double sMin) {
  std::vector<double> cps;
  for (double s = sMax; s >= sMin; s /= 2) cps.push_back(s);
  std::reverse(cps.begin(), cps.end());
  return cps;
}

/** Family items sorted by height; throws if the target is one of them. */
std::vector<FamilyItem> sortedItems(double y, const ApproxFamily& family,
                                    double sMax) {
  if (sMax <= 0) throw DomainError("approx: sMax must be positive");
  std::vector<FamilyItem> items = family.enumerate(y, sMax);
  for (const FamilyItem& it : items)
    if (it.value == y)
      throw DegenerateTargetError("approx: target lies in the family");
  std::sort(items.begin(), items.end(),
            [](const FamilyItem& a, const FamilyItem& b) {
              return a.height < b.height;
            });
  return items;
}

}  // namespace

ApproxFamily rationalFamily(int heightExp) {
  if (heightExp != 1 && heightExp != 2)
    throw DomainError("rationalFamily: height exponent must be 1 or 2");
  ApproxFamily fam;
  fam.enumerate = [heightExp](double y, double sMax) {
    std::vector<FamilyItem> items;
    long qMax = static_cast<long>(
        std::floor(std::pow(sMax, 1.0 / heightExp) + 1e-9));
    for (long q = 1; q <= qMax; ++q) {
      double t = y * q;
      double p0 = std::floor(t);
      double frac = t - p0;
      std::vector<long> ps;
      if (frac < 0.5)
        ps.push_back(static_cast<long>(p0));
      else if (frac > 0.5)
        ps.push_back(static_cast<long>(p0) + 1);
      else {  // exact tie: keep both neighbors
        ps.push_back(static_cast<long>(p0));
        ps.push_back(static_cast<long>(p0) + 1);
      }
      for (long p : ps) {
        if (std::gcd(std::abs(p), q) != 1) continue;
        items.push_back({static_cast<double>(p) / static_cast<double>(q),
                         std::pow(static_cast<double>(q), heightExp)});
      }
    }
    return items;
  };
  return fam;
}

ApproxFamily quadOrbitFamily(const QuadraticIrrational& alpha0, double window) {
  ApproxFamily fam;
  fam.enumerate = [alpha0, window](double y, double sMax) {
    double traceWindow = 2 * (std::abs(y) + window) + 2;
    std::vector<QuadOrbitItem> orbit =
        enumerateQuadOrbitByForms(alpha0, sMax, traceWindow);
    std::vector<FamilyItem> items;
    for (const QuadOrbitItem& it : orbit) {
      double v = it.root.value().toDouble();
      if (std::abs(v - y) > window) continue;
      items.push_back({v, heightQI(it.root)});
    }
    return items;
  };
  return fam;
}

ApproximationRecord approxConstantRecord(double y, const ApproxFamily& family,
                                         double sMax) {
  std::vector<FamilyItem> items = sortedItems(y, family, sMax);
  ApproximationRecord rec;
  rec.target = y;
  double best = std::numeric_limits<double>::infinity();
  std::size_t next = 0;
  for (double s : checkpoints(sMax, 1.0)) {
    while (next < items.size() && items[next].height <= s) {
      best = std::min(best, items[next].height * std::abs(items[next].value - y));
      ++next;
    }
    if (std::isfinite(best)) rec.entries.emplace_back(s, best);
  }
  if (rec.entries.empty())
    throw DomainError("approxConstantRecord: no family points up to sMax");
  rec.finalEstimate = rec.entries.back().second;
  double tail = std::numeric_limits<double>::infinity();
  for (const FamilyItem& it : items)
    if (it.height > sMax / 2 && it.height <= sMax)
      tail = std::min(tail, it.height * std::abs(it.value - y));
  rec.tailEstimate = std::isfinite(tail) ? tail : rec.finalEstimate;
  return rec;
}

ApproximationRecord approxExponentRecord(double y, const ApproxFamily& family,
                                         double sMax) {
  std::vector<FamilyItem> items = sortedItems(y, family, sMax);
  ApproximationRecord rec;
  rec.target = y;
  double dMin = std::numeric_limits<double>::infinity();
  std::size_t next = 0;
  for (double s : checkpoints(sMax, 2.0)) {
    while (next < items.size() && items[next].height <= s) {
      dMin = std::min(dMin, std::abs(items[next].value - y));
      ++next;
    }
    if (std::isfinite(dMin) && dMin > 0)
      rec.entries.emplace_back(s, -std::log(dMin) / std::log(s));
  }
  if (rec.entries.empty())
    throw DomainError("approxExponentRecord: no family points up to sMax");
  rec.finalEstimate = rec.entries.back().second;
  rec.tailEstimate = rec.finalEstimate;
  return rec;
}

long wellApproximableCount(double y, const std::function<double(double)>& psi,
                           const ApproxFamily& family, double sMax) {
  long count = 0;
  for (const FamilyItem& it : sortedItems(y, family, sMax))
    if (std::abs(it.value - y) <= psi(it.height)) ++count;
  return count;
}

double hurwitzCheck(const std::vector<double>& samples, double sMax) {
  if (samples.empty()) throw DomainError("hurwitzCheck: empty sample list");
  double yAbs = 0;
  for (double y : samples) yAbs = std::max(yAbs, std::abs(y));
  std::vector<QuadOrbitItem> orbit =
      enumerateQuadOrbitByForms(goldenRatio(), sMax, 2 * yAbs + 10);
  std::vector<std::pair<double, double>> valueHeight;
  valueHeight.reserve(orbit.size());
  for (const QuadOrbitItem& it : orbit)
    valueHeight.emplace_back(it.root.value().toDouble(), heightQI(it.root));

  double worst = 0;
  for (double y : samples) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& [v, h] : valueHeight) {
      if (v == y)
        throw DegenerateTargetError("hurwitzCheck: target lies in the orbit");
      best = std::min(best, h * std::abs(v - y));
    }
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace oc
