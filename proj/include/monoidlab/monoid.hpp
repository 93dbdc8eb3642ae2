// SPDX-License-Identifier: Apache-2.0
#ifndef MONOIDLAB_MONOID_HPP
#define MONOIDLAB_MONOID_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "monoidlab/core.hpp"

namespace monoidlab {

/// A monoid-level property value asserted from family knowledge rather than
/// bounded search. Claims are cross-checked against the empirical verdicts;
/// a claim must never be empirically refuted.
struct Claim {
  std::optional<bool> value;
  std::string source;
};

struct ProfileClaims {
  Claim atomic, accp, gcd, decomposition, atomsArePrimes, factorial;
  /// Monoid-level scheme claims (a value means the scheme provably holds or
  /// provably fails for every element, by a total construction or a fixed
  /// counterexample).
  std::map<Scheme, Claim> schemes;
};

/// Family-agnostic interface of a commutative cancellative monoid with exact
/// integer arithmetic. Implementations are immutable after construction and
/// all operations are pure, so concurrent use is safe.
class Monoid {
 public:
  Monoid(std::string name, std::string specText);
  virtual ~Monoid();

  Monoid(const Monoid&) = delete;
  Monoid& operator=(const Monoid&) = delete;

  const std::string& name() const { return name_; }
  /// Canonical spec stanza that rebuilds this instance.
  const std::string& specText() const { return spec_; }
  /// Instance tag carried by every element (hash of the canonical spec text,
  /// so structurally identical instances interoperate).
  std::uint64_t tag() const { return tag_; }

  Element wrap(Payload p) const;
  void requireSame(const Element& a) const;
  void requireSame(const Element& a, const Element& b) const;

  virtual Element identity() const = 0;
  bool isIdentity(const Element& a) const { return a == identity(); }

  /// The monoid operation; result is in canonical form.
  virtual Element compose(const Element& a, const Element& b) const = 0;

  /// Family-specific length surrogate: norm(identity) = 0,
  /// norm(a*b) >= max(norm a, norm b), and (in enumerable families) only
  /// finitely many elements per norm ball.
  virtual Int norm(const Element& a) const = 0;

  virtual bool isUnitExact(const Element& a) const = 0;
  Verdict isUnit(const Element& a) const;
  /// All invertible elements (finite in every family here).
  virtual std::vector<Element> units() const;

  /// Exact divisibility: Proven with the quotient as witness, or Refuted.
  virtual Verdict divides(const Element& a, const Element& b) const = 0;
  std::optional<Element> quotient(const Element& a, const Element& b) const;

  /// Proven iff a = b * unit.
  virtual Verdict associates(const Element& a, const Element& b) const;

  virtual bool enumerable() const { return true; }
  /// Exactly the elements with norm <= bound, in graded-lexicographic order
  /// (prefix-consistent across bounds). Throws NonEnumerableError otherwise.
  virtual std::vector<Element> enumerate(Int bound) const = 0;

  /// Exact divisor set {d : d | a}, units and a included, for families with
  /// finite divisor sets. For B_{p,q} this is the window at the element's
  /// minimal level. Throws NonEnumerableError otherwise.
  virtual std::vector<Element> divisors(const Element& a) const = 0;

  /// Divisors to consider in bounded searches. Defaults to divisors(); the
  /// B_{p,q} family widens this to every level up to the cap.
  virtual std::vector<Element> divisorCandidates(const Element& a) const;

  /// Greatest common divisor under divisibility. Proven with witness {g},
  /// Refuted with two maximal incomparable common divisors when no maximum
  /// exists, UnknownUpTo if undecidable within family limits.
  virtual Verdict gcd(const Element& a, const Element& b) const;

  /// Relative primality: no common non-invertible divisor. Exact where
  /// divisor sets are finite; Refuted carries a common non-unit divisor.
  virtual Verdict rpr(const Element& a, const Element& b) const;

  /// Smallest n >= 1 with a | c^n; nullopt if no such n exists; -1 if the
  /// family cannot decide. Exact in every family here except submonoid
  /// instances, which fall back to a bounded scan.
  virtual std::optional<Int> dividesPower(const Element& a, const Element& c) const;

  virtual std::string show(const Element& a) const = 0;
  virtual Element parse(const std::string& text) const = 0;

  /// Presentation order: graded-lexicographic, matching enumerate().
  virtual bool less(const Element& a, const Element& b) const;

  // Analytic family knowledge consulted by the predicate layer before any
  // search. A populated verdict is exact.
  virtual std::optional<Verdict> squarefreeHint(const Element&) const { return std::nullopt; }
  virtual std::optional<Verdict> atomHint(const Element&) const { return std::nullopt; }
  virtual std::optional<Verdict> primeHint(const Element&) const { return std::nullopt; }
  virtual std::optional<Verdict> radicalHint(const Element&) const { return std::nullopt; }
  virtual std::optional<Verdict> primalHint(const Element&) const { return std::nullopt; }
  /// Per-element scheme decision where the family has one (closed form or
  /// analytic refutation).
  virtual std::optional<SchemeSearchResult> schemeClosedForm(const Element&, Scheme) const {
    return std::nullopt;
  }

  virtual ProfileClaims profileClaims() const { return {}; }

 protected:
  Verdict dividesByDifference(const Element& a, const Element& b,
                              std::optional<Element> quotient) const;

 private:
  std::string name_;
  std::string spec_;
  std::uint64_t tag_;
};

using MonoidPtr = std::shared_ptr<const Monoid>;

// Small helpers used across modules.

Element power(const Monoid& m, const Element& a, Int k);
Element productOf(const Monoid& m, const std::vector<Element>& parts);
/// Recompose sum(parts[i]^exponents[i]).
Element recompose(const Monoid& m, const std::vector<Element>& parts,
                  const std::vector<Int>& exponents);
void sortCanonical(const Monoid& m, std::vector<Element>& v);
std::uint64_t fnv1a(const std::string& s);

}  // namespace monoidlab

#endif
