// SPDX-License-Identifier: Apache-2.0
#ifndef MONOIDLAB_FAMILIES_HPP
#define MONOIDLAB_FAMILIES_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "monoidlab/gf.hpp"
#include "monoidlab/monoid.hpp"

namespace monoidlab {

// ---------------------------------------------------------------------------
// Parsed family descriptions (the spec-file grammar's contents)

enum class FamilyKind {
  FreeCommutative,
  ShiftedNumerical,
  SubmonoidNN,
  Bpq,
  PolySubring,
  NonnegRationals,
};

/// A parsed description selecting one concrete family with parameters.
/// Validated by build(); see the README for the spec-file grammar.
struct FamilySpec {
  FamilyKind kind = FamilyKind::FreeCommutative;

  // free_commutative
  Int rank = 1;

  // shifted_numerical: carrier = {0} ∪ extras ∪ [threshold, ∞);
  // threshold = -1 means no tail (carrier = {0} ∪ extras).
  Int threshold = 0;
  std::vector<Int> extras;

  // submonoid_nn
  std::vector<std::vector<Int>> generators;

  // bpq
  Int p = 1, q = 1, levelCap = 8;

  // poly_subring: L = GF(char^baseDeg) inside F = GF(char^extDeg)
  Int characteristic = 2, baseDeg = 1, extDeg = 2, maxDegree = 6;
  std::vector<Int> irreducible;  // constant-first, degree extDeg, monic

  std::string canonicalText() const;
};

FamilySpec parseSpecText(const std::string& text);
FamilySpec loadSpecFile(const std::string& path);

/// Validates and constructs; construction errors (closure violation, zero
/// generator, reducible modulus, subfield mismatch, ...) throw SpecError
/// naming the offending field.
MonoidPtr build(const FamilySpec& spec);
MonoidPtr buildFromText(const std::string& text);

// ---------------------------------------------------------------------------
// Families

/// N^n under addition, exponent-vector payloads; the factorial reference
/// family. Atoms are the canonical basis vectors.
class FreeCommutative final : public Monoid {
 public:
  explicit FreeCommutative(Int rank);

  Int rank() const { return rank_; }
  Element make(std::vector<Int> coords) const;

  Element identity() const override;
  Element compose(const Element& a, const Element& b) const override;
  Int norm(const Element& a) const override;
  bool isUnitExact(const Element& a) const override;
  Verdict divides(const Element& a, const Element& b) const override;
  std::vector<Element> enumerate(Int bound) const override;
  std::vector<Element> divisors(const Element& a) const override;
  Verdict gcd(const Element& a, const Element& b) const override;
  Verdict rpr(const Element& a, const Element& b) const override;
  std::optional<Int> dividesPower(const Element& a, const Element& c) const override;
  std::string show(const Element& a) const override;
  Element parse(const std::string& text) const override;

  std::optional<Verdict> squarefreeHint(const Element& a) const override;
  std::optional<Verdict> atomHint(const Element& a) const override;
  std::optional<Verdict> primeHint(const Element& a) const override;
  std::optional<Verdict> radicalHint(const Element& a) const override;
  std::optional<Verdict> primalHint(const Element& a) const override;
  std::optional<SchemeSearchResult> schemeClosedForm(const Element& a, Scheme s) const override;
  ProfileClaims profileClaims() const override;

  static const std::vector<Int>& coords(const Element& a);

 private:
  Int rank_;
};

/// {0} ∪ extras ∪ [threshold, ∞) under addition. Membership is O(1); closure
/// under addition is validated at construction by checking all extra pairs.
class ShiftedNumerical final : public Monoid {
 public:
  ShiftedNumerical(Int threshold, std::vector<Int> extras);

  bool member(Int v) const;
  Int threshold() const { return threshold_; }
  const std::vector<Int>& extras() const { return extras_; }
  bool hasTail() const { return threshold_ >= 0; }
  Element make(Int v) const;
  /// Least nonzero member, or nullopt for the trivial carrier {0}.
  std::optional<Int> minNonzero() const;

  Element identity() const override;
  Element compose(const Element& a, const Element& b) const override;
  Int norm(const Element& a) const override;
  bool isUnitExact(const Element& a) const override;
  Verdict divides(const Element& a, const Element& b) const override;
  std::vector<Element> enumerate(Int bound) const override;
  std::vector<Element> divisors(const Element& a) const override;
  std::optional<Int> dividesPower(const Element& a, const Element& c) const override;
  std::string show(const Element& a) const override;
  Element parse(const std::string& text) const override;
  ProfileClaims profileClaims() const override;

  static Int value(const Element& a);

 private:
  Int threshold_;               // -1 = no tail
  std::vector<Int> extras_;     // sorted, nonzero, below threshold when a tail exists
};

/// A finitely generated submonoid of N^n viewed as a monoid in its own right.
/// Divisibility is b - a ∈ M; membership is an exact nonnegative integer
/// combination search with multiplicity witnesses.
class SubmonoidNN final : public Monoid {
 public:
  SubmonoidNN(Int rank, std::vector<std::vector<Int>> generators);

  Int rank() const { return rank_; }
  const std::vector<std::vector<Int>>& generators() const { return gens_; }
  /// Exact membership in M; Proven carries generator multiplicities.
  Verdict member(const std::vector<Int>& v) const;
  Element make(std::vector<Int> coords) const;

  Element identity() const override;
  Element compose(const Element& a, const Element& b) const override;
  Int norm(const Element& a) const override;
  bool isUnitExact(const Element& a) const override;
  Verdict divides(const Element& a, const Element& b) const override;
  std::vector<Element> enumerate(Int bound) const override;
  std::vector<Element> divisors(const Element& a) const override;
  std::string show(const Element& a) const override;
  Element parse(const std::string& text) const override;
  ProfileClaims profileClaims() const override;

  static const std::vector<Int>& coords(const Element& a);

 private:
  bool memberRec(const std::vector<Int>& v, std::vector<Int>* mults) const;

  Int rank_;
  std::vector<std::vector<Int>> gens_;
};

/// B_{p,q}: generators x_1, x_2, ..., y_1, y_2, ... subject to the level
/// rewrite y_i = x_{i+1}^p y_{i+1}^q. Elements are leveled exponent vectors
/// in canonical (minimal-level) form. The level cap is a hard construction
/// parameter: operations that would rewrite past it throw LevelCapError, and
/// bounded searches report UnknownUpTo(cap) instead of guessing.
class Bpq final : public Monoid {
 public:
  Bpq(Int p, Int q, Int levelCap);

  Int p() const { return p_; }
  Int q() const { return q_; }
  Int levelCap() const { return cap_; }

  Element make(BpqElem v) const;  // canonicalizes
  Element xGen(Int i) const;      // x_i, i >= 1
  Element yGen(Int i) const;      // y_i, 1 <= i <= cap

  /// Same element re-represented with all y-generators at level L2 >= level.
  BpqElem normalizeToLevel(const BpqElem& v, Int L2) const;
  static BpqElem canonicalize(BpqElem v, Int p, Int q);
  /// Common level at which componentwise comparison is exact: the maximum of
  /// both levels and every x-generator index present in either element
  /// (deficits below that level can never be repaired by further rewrites).
  Int comparisonLevel(const BpqElem& a, const BpqElem& b) const;

  Element identity() const override;
  Element compose(const Element& a, const Element& b) const override;
  Int norm(const Element& a) const override;
  bool isUnitExact(const Element& a) const override;
  Verdict divides(const Element& a, const Element& b) const override;
  std::vector<Element> enumerate(Int bound) const override;
  std::vector<Element> divisors(const Element& a) const override;
  std::vector<Element> divisorCandidates(const Element& a) const override;
  Verdict gcd(const Element& a, const Element& b) const override;
  Verdict rpr(const Element& a, const Element& b) const override;
  std::optional<Int> dividesPower(const Element& a, const Element& c) const override;
  std::string show(const Element& a) const override;
  Element parse(const std::string& text) const override;
  bool less(const Element& a, const Element& b) const override;

  std::optional<Verdict> squarefreeHint(const Element& a) const override;
  std::optional<Verdict> atomHint(const Element& a) const override;
  std::optional<SchemeSearchResult> schemeClosedForm(const Element& a, Scheme s) const override;
  ProfileClaims profileClaims() const override;

  static const BpqElem& view(const Element& a);

 private:
  std::vector<Int> capVector(const Element& a) const;  // (x_1..x_cap, y_cap)

  Int p_, q_, cap_;
};

/// The multiplicative monoid of L + xF[x] minus zero, for finite fields
/// L ⊂ F: nonzero polynomials over F whose constant term lies in L. Units are
/// the nonzero constants of L. max_degree bounds enumeration and searches,
/// not composition.
class PolySubring final : public Monoid {
 public:
  PolySubring(Int characteristic, Int baseDeg, Int extDeg, std::vector<Int> irreducible,
              Int maxDegree);

  const Gf& field() const { return F_; }
  Int baseDeg() const { return baseDeg_; }
  Int maxDegree() const { return maxDeg_; }
  bool inBase(Int code) const { return F_.inSubfield(code, baseDeg_); }
  bool inCarrier(const fpoly::Coeffs& c) const;
  Element make(fpoly::Coeffs c) const;

  /// All nonzero f with deg f <= d and f(0) ∈ L.
  std::vector<Element> elementsUpTo(Int d) const;

  Element identity() const override;
  Element compose(const Element& a, const Element& b) const override;
  Int norm(const Element& a) const override;
  bool isUnitExact(const Element& a) const override;
  std::vector<Element> units() const override;
  Verdict divides(const Element& a, const Element& b) const override;
  Verdict associates(const Element& a, const Element& b) const override;
  std::vector<Element> enumerate(Int bound) const override;
  std::vector<Element> divisors(const Element& a) const override;
  std::optional<Int> dividesPower(const Element& a, const Element& c) const override;
  std::string show(const Element& a) const override;
  Element parse(const std::string& text) const override;

  std::optional<SchemeSearchResult> schemeClosedForm(const Element& a, Scheme s) const override;
  ProfileClaims profileClaims() const override;

  static const fpoly::Coeffs& coeffs(const Element& a);

 private:
  Gf F_;
  Int baseDeg_;
  Int maxDeg_;
};

/// (Q≥0, +). Non-enumerable: every operation either has an analytic
/// implementation (divides is <=, gcd is min, rpr iff min = 0) or throws
/// NonEnumerableError. S(H) = {0}; there are no atoms.
class NonnegRationals final : public Monoid {
 public:
  NonnegRationals();

  Element make(Int num, Int den) const;

  Element identity() const override;
  Element compose(const Element& a, const Element& b) const override;
  Int norm(const Element& a) const override;
  bool isUnitExact(const Element& a) const override;
  Verdict divides(const Element& a, const Element& b) const override;
  bool enumerable() const override { return false; }
  std::vector<Element> enumerate(Int bound) const override;
  std::vector<Element> divisors(const Element& a) const override;
  Verdict gcd(const Element& a, const Element& b) const override;
  Verdict rpr(const Element& a, const Element& b) const override;
  std::optional<Int> dividesPower(const Element& a, const Element& c) const override;
  std::string show(const Element& a) const override;
  Element parse(const std::string& text) const override;

  std::optional<Verdict> squarefreeHint(const Element& a) const override;
  std::optional<Verdict> atomHint(const Element& a) const override;
  std::optional<Verdict> primeHint(const Element& a) const override;
  std::optional<Verdict> radicalHint(const Element& a) const override;
  std::optional<Verdict> primalHint(const Element& a) const override;
  std::optional<SchemeSearchResult> schemeClosedForm(const Element& a, Scheme s) const override;
  ProfileClaims profileClaims() const override;

  static RatElem rat(const Element& a);
};

}  // namespace monoidlab

#endif
