#include "orbitcount/cfrac.hpp"

#include <map>

namespace oc {

ContinuedFractionExpansion cfExpand(const Rat& x, std::size_t maxTerms) {
  if (maxTerms < 1) throw DomainError("cfExpand: maxTerms must be >= 1");
  ContinuedFractionExpansion out;
  Int p = x.get_num(), q = x.get_den();
  while (q != 0 && out.preperiod.size() < maxTerms) {
    Int a, r;
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    out.preperiod.push_back(a);
    p = q;
    q = r;
  }
  if (q != 0) throw BudgetError("cfExpand: term budget exhausted");
  // canonical form: avoid trailing 1 (e.g. [3;7,15,1] -> [3;7,16])
  if (out.preperiod.size() > 1 && out.preperiod.back() == 1) {
    out.preperiod.pop_back();
    out.preperiod.back() += 1;
  }
  return out;
}

ContinuedFractionExpansion cfExpand(const QuadraticIrrational& x,
                                    std::size_t maxTerms) {
  if (maxTerms < 1) throw DomainError("cfExpand: maxTerms must be >= 1");
  // write x = (P + sqrt(N)) / Q with integers P, Q, N and Q | N - P^2
  const RealQuadratic& v = x.value();
  Rat a = v.a(), b = v.b();
  long d = v.d();
  Int denom = lcm(a.get_den(), b.get_den());
  Int A = Rat(a * denom).get_num();   // x = (A + B sqrt(d)) / denom
  Int B = Rat(b * denom).get_num();
  Int Q = denom;
  if (B < 0) {
    A = -A;
    B = -B;
    Q = -Q;
  }
  Int P = A;
  Int N = B * B * d;
  if ((N - P * P) % Q != 0) {
    P *= abs(Q);
    N *= Q * Q;
    Q *= abs(Q);
  }
  Int sq = sqrt(N);
  // exact test k <= (P + sqrt(N))/Q (N non-square, so never equality with sqrt)
  auto leqX = [&](const Int& k) {
    Int t = k * Q - P;  // compare t with sqrt(N), orientation depends on sgn(Q)
    if (Q > 0) return t <= 0 || t * t < N;
    return t >= 0 && t * t > N;
  };
  auto nextTerm = [&]() {
    // a_k = floor((P + sqrt(N))/Q), exact: double-free estimate then adjust
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), Int(P + sq).get_mpz_t(), Q.get_mpz_t());
    while (!leqX(f)) --f;
    while (leqX(f + 1)) ++f;
    Int P2 = f * Q - P;
    Int Q2 = (N - P2 * P2) / Q;
    P = P2;
    Q = Q2;
    return f;
  };
  ContinuedFractionExpansion out;
  std::vector<Int> terms;
  std::map<std::pair<Int, Int>, std::size_t> seen;  // (P,Q) before term k -> k
  for (std::size_t k = 0; k < maxTerms; ++k) {
    if (k >= 1) {
      auto key = std::make_pair(P, Q);
      auto it = seen.find(key);
      if (it != seen.end()) {
        std::size_t start = it->second;
        out.preperiod.assign(terms.begin(), terms.begin() + start);
        out.period.assign(terms.begin() + start, terms.end());
        return out;
      }
      seen.emplace(key, k);
    }
    terms.push_back(nextTerm());
  }
  throw BudgetError("cfExpand: period not found within maxTerms");
}

std::vector<Rat> convergents(const ContinuedFractionExpansion& cf,
                             std::size_t n) {
  std::vector<Rat> out;
  Int pPrev = 1, qPrev = 0, p = 0, q = 1;  // (p_{-1}, q_{-1}), (p_{-2}, q_{-2})
  std::size_t total = cf.preperiod.size();
  for (std::size_t k = 0; k < n; ++k) {
    Int a;
    if (k < cf.preperiod.size()) {
      a = cf.preperiod[k];
    } else if (!cf.period.empty()) {
      a = cf.period[(k - cf.preperiod.size()) % cf.period.size()];
    } else {
      break;  // finite expansion exhausted
    }
    Int pNew = a * pPrev + p;
    Int qNew = a * qPrev + q;
    p = pPrev;
    q = qPrev;
    pPrev = pNew;
    qPrev = qNew;
    out.emplace_back(Rat(pNew, qNew));
    (void)total;
  }
  for (auto& r : out) r.canonicalize();
  return out;
}

}  // namespace oc
