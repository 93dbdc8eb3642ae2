// SPDX-License-Identifier: Apache-2.0
#ifndef MONOIDLAB_PREDICATES_HPP
#define MONOIDLAB_PREDICATES_HPP

#include <map>
#include <string>
#include <vector>

#include "monoidlab/monoid.hpp"

namespace monoidlab {

// Element-level predicates. Exact (Proven/Refuted) where divisor sets are
// finite or analytic family knowledge applies; bounded otherwise, with the
// bound recorded in the verdict.

/// Proven iff every factorization a = b*c has b or c invertible.
/// Units are Refuted immediately.
Verdict isAtom(const Monoid& m, const Element& a);

/// Refuted with witness (b, c) if a | b*c, a ∤ b, a ∤ c within the norm ball;
/// units Refuted by convention.
Verdict isPrime(const Monoid& m, const Element& a, Int bound);

/// Proven iff a has no presentation b^2 c with b non-invertible.
Verdict isSquarefree(const Monoid& m, const Element& a);

/// Refuted with witness (b; n) if a | b^n but a ∤ b, for norm(b) <= bound and
/// n <= bound.
Verdict isRadical(const Monoid& m, const Element& a, Int bound);

/// Refuted with witness (b, c) when a | b*c admits no splitting a = a1*a2
/// with a1 | b and a2 | c within the ball.
Verdict isPrimal(const Monoid& m, const Element& a, Int bound);

/// Predicate set over a norm ball: exact members plus the elements whose
/// verdict was truncated (reported separately, never silently merged).
struct PredicateSet {
  std::vector<Element> members;
  std::vector<Element> unknown;
};

PredicateSet atoms(const Monoid& m, Int bound);
PredicateSet squarefreeSet(const Monoid& m, Int bound);
PredicateSet radicalSet(const Monoid& m, Int bound);
PredicateSet primesSet(const Monoid& m, Int bound);

/// Does the scheme hold for this single element? FoundWitness carries the
/// factorization parts; Refuted means complete exhaustion or an analytic rule;
/// NotFoundUpTo means the search was truncated (level caps).
Verdict schemeHoldsFor(const Monoid& m, const Element& a, Scheme s, Int bound);

/// Monoid-level profile over a norm ball. Analytic claims are recorded with
/// their source and cross-checked against the empirical search: a claimed
/// property that is empirically refuted lands in `violations`.
struct MonoidProfile {
  Verdict atomic, accp, gcd, decomposition, atomsArePrimes;
  std::map<Scheme, Verdict> schemes;
  Int bound = 0;
  std::vector<std::string> violations;
};

MonoidProfile monoidProfile(const Monoid& m, Int bound);

/// Checks the element-level implication diagram (prime => atom, prime =>
/// radical, radical => square-free, atom => square-free) plus the monoid-level
/// diagrams on the profile, on every element of the ball. Truncated verdicts
/// never participate. Returns human-readable violations (empty = consistent).
std::vector<std::string> diagramAudit(const Monoid& m, Int bound);

}  // namespace monoidlab

#endif
