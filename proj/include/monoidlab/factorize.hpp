// SPDX-License-Identifier: Apache-2.0
#ifndef MONOIDLAB_FACTORIZE_HPP
#define MONOIDLAB_FACTORIZE_HPP

#include <vector>

#include "monoidlab/monoid.hpp"

namespace monoidlab {

/// Search limits for the generic fallback. partBound caps chain/level length,
/// powerBound caps the n scanned for scheme V.
struct SearchLimits {
  Int partBound = 16;
  Int powerBound = 32;
};

/// Constructive factorization for schemes I-IV. Dispatches to the family's
/// closed form when it has one (free commutative, B_{p,q}, L+xF[x]); otherwise
/// runs the generic bounded DFS over square-free divisors (decreasing norm,
/// depth-first, deterministic).
SchemeSearchResult factorScheme(const Monoid& m, const Element& a, Scheme s,
                                SearchLimits lim = {});

/// Square-free extraction for schemes V and VI (closed forms or search).
SchemeSearchResult extract(const Monoid& m, const Element& a, Scheme s, SearchLimits lim = {});

/// The generic search alone, bypassing closed forms (oracle cross-checks).
SchemeSearchResult searchScheme(const Monoid& m, const Element& a, Scheme s,
                                SearchLimits lim = {});

/// Re-checks every Factorization invariant with exact predicate calls:
/// recomposition equals a, designated parts square-free, scheme side
/// conditions (divisor chain for II, pairwise rpr for III, a | c^n for V).
/// Proven when all checks are exact; UnknownUpTo when recomposition and side
/// conditions hold but a square-freeness verdict was truncated (level caps).
Verdict verify(const Monoid& m, const Element& a, const Factorization& f);

/// Enumerates every factorization of `a` under the scheme within the bound
/// and compares them positionwise up to associates (after normalizing away
/// identity padding). Proven if all agree, Refuted with two distinct
/// witnesses otherwise, UnknownUpTo when the family hypothesis for the
/// uniqueness statement (radical parts for II/V, decomposition for III, GCD
/// for IV/VI) is not established or the search window was truncated.
Verdict uniquenessCheck(const Monoid& m, const Element& a, Scheme s, Int bound);

/// All factorizations found by the exhaustive search (test oracle surface).
std::vector<Factorization> allFactorizations(const Monoid& m, const Element& a, Scheme s,
                                             SearchLimits lim = {});

/// Deterministic pseudo-random element stream for reproducible sampling:
/// a 64-bit linear congruential generator, state' = state * 6364136223846793005
/// + 1442695040888963407, coordinates drawn from the high bits.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// uniform in [0, n)
  Int below(Int n);

 private:
  std::uint64_t state_;
};

}  // namespace monoidlab

#endif
