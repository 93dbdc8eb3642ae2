// SPDX-License-Identifier: Apache-2.0
#ifndef MONOIDLAB_CORE_HPP
#define MONOIDLAB_CORE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace monoidlab {

using Int = std::int64_t;

// ---------------------------------------------------------------------------
// Errors

/// Two elements from different monoid instances were mixed in one operation.
struct FamilyMismatchError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Operation needs to enumerate a family that has no finite norm balls.
struct NonEnumerableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A B_{p,q} computation would have to rewrite past the construction's level cap.
struct LevelCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid family description (parse error, closure violation, bad field data, ...).
struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Element payloads. Payloads are always stored in canonical form, so payload
// equality is equality in the monoid.

/// Exponent vector over N^n (also the payload of submonoids of N^n).
struct VecElem {
  std::vector<Int> c;
  friend bool operator==(const VecElem&, const VecElem&) = default;
};

/// A non-negative integer (shifted numerical monoids, additive notation).
struct NatElem {
  Int v = 0;
  friend bool operator==(const NatElem&, const NatElem&) = default;
};

/// Canonical form of a B_{p,q} element: all y-generators rewritten to one
/// level, the level minimal. x[i] is the exponent of x_{i+1}; y is the
/// exponent of y_{level}. Trailing zeros of x are trimmed; y == 0 forces
/// level == 1.
struct BpqElem {
  Int level = 1;
  std::vector<Int> x;
  Int y = 0;
  friend bool operator==(const BpqElem&, const BpqElem&) = default;
};

/// Nonzero polynomial over a finite field; c[i] is the code of the x^i
/// coefficient, leading coefficient nonzero.
struct PolyElem {
  std::vector<Int> c;
  friend bool operator==(const PolyElem&, const PolyElem&) = default;
};

/// Exact non-negative rational in lowest terms, den >= 1.
struct RatElem {
  Int num = 0;
  Int den = 1;
  friend bool operator==(const RatElem&, const RatElem&) = default;
};

using Payload = std::variant<VecElem, NatElem, BpqElem, PolyElem, RatElem>;

/// A monoid element: a family-instance tag plus a canonical payload.
struct Element {
  std::uint64_t tag = 0;
  Payload payload;

  friend bool operator==(const Element&, const Element&) = default;
};

/// Total structural order (for deterministic sets and witness minimality).
int comparePayloads(const Payload& a, const Payload& b);
bool structuralLess(const Element& a, const Element& b);

// ---------------------------------------------------------------------------
// Verdicts

enum class VerdictKind {
  Proven,        ///< exact decision (finite search space or analytic family knowledge)
  Refuted,       ///< exact refutation, witness attached
  FoundWitness,  ///< a constructive witness was found (existential claims)
  NotFoundUpTo,  ///< exhaustive search up to `bound` found nothing
  UnknownUpTo    ///< truncated search; nothing can be concluded beyond `bound`
};

const char* toString(VerdictKind k);

/// Three-valued bounded-search outcome carrying witnesses.
///
/// Refuted and FoundWitness always carry a witness; re-evaluating the defining
/// predicate on the witness reproduces the verdict. Proven is only emitted by
/// exact decision procedures, never by a truncated search.
struct Verdict {
  VerdictKind kind = VerdictKind::UnknownUpTo;
  std::vector<Element> witness;
  std::vector<Int> numbers;  ///< auxiliary integers (exponents, multiplicities)
  Int bound = 0;
  std::string note;

  bool holds() const { return kind == VerdictKind::Proven || kind == VerdictKind::FoundWitness; }
  bool failed() const { return kind == VerdictKind::Refuted; }
  bool determined() const { return holds() || failed(); }

  static Verdict proven(std::string note = {}, Int bound = 0);
  static Verdict provenWith(std::vector<Element> witness, std::string note = {},
                            std::vector<Int> numbers = {});
  static Verdict refuted(std::vector<Element> witness, std::string note = {},
                         std::vector<Int> numbers = {});
  static Verdict foundWitness(std::vector<Element> witness, std::string note = {},
                              std::vector<Int> numbers = {});
  static Verdict notFoundUpTo(Int bound, std::string note = {});
  static Verdict unknownUpTo(Int bound, std::string note = {});
};

// ---------------------------------------------------------------------------
// Square-free factorization schemes

/// The six square-free factorization/extraction patterns.
///   I   : a = s1...sn, all si square-free
///   II  : a = s1...sn, si square-free, si | s(i+1)
///   III : a = s1 s2^2 ... sn^n, si square-free, pairwise rpr
///   IV  : a = s0 s1^2 s2^4 ... sn^(2^n), si square-free
///   V   : a = b c, c square-free, a | c^n for some n >= 1
///   VI  : a = b^2 c, c square-free
enum class Scheme { I, II, III, IV, V, VI };

const char* toString(Scheme s);
std::optional<Scheme> schemeFromString(const std::string& s);

/// A tagged square-free factorization. For schemes V and VI, parts = {b, c}.
/// exponents[i] is the multiplicity of parts[i] in the recomposition
/// (all 1 for I/II, 1..n for III, 2^0..2^n for IV, {1, 1} for V, {2, 1} for VI).
/// For scheme V, power is the n with a | c^n.
struct Factorization {
  Scheme scheme = Scheme::I;
  std::vector<Element> parts;
  std::vector<Int> exponents;
  Int power = 0;
};

/// Outcome of a scheme search: FoundWitness + factorization, Refuted (complete
/// exhaustion or analytic rule), or NotFoundUpTo (truncated search).
struct SchemeSearchResult {
  Verdict verdict;
  std::optional<Factorization> fact;
};

}  // namespace monoidlab

#endif
