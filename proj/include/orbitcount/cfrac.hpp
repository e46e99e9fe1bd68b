#ifndef ORBITCOUNT_CFRAC_HPP
#define ORBITCOUNT_CFRAC_HPP

// Continued fraction expansions: finite for rationals, eventually periodic
// for quadratic irrationals (period detected by repetition of the (P,Q)
// state in the standard recursion), plus convergents.

#include <vector>

#include "orbitcount/quadirr.hpp"

namespace oc {

struct ContinuedFractionExpansion {
  std::vector<Int> preperiod;
  std::vector<Int> period;  // empty for rationals
};

/** Thrown when the period is not found within the term budget. */
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** Expansion of a rational number (finite; canonical with last term >= 2
 *  when length > 1). */
ContinuedFractionExpansion cfExpand(const Rat& x, std::size_t maxTerms = 10000);

/** Expansion of a quadratic irrational (preperiod + detected period). */
ContinuedFractionExpansion cfExpand(const QuadraticIrrational& x,
                                    std::size_t maxTerms = 10000);

/** Convergents p_n/q_n of the first n terms (period unrolled as needed). */
std::vector<Rat> convergents(const ContinuedFractionExpansion& cf,
                             std::size_t n);

}  // namespace oc

#endif
