// SPDX-License-Identifier: Apache-2.0
#include "monoidlab/monoid.hpp"

#include <algorithm>
#include <cassert>

namespace monoidlab {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Monoid::Monoid(std::string name, std::string specText)
    : name_(std::move(name)), spec_(std::move(specText)), tag_(fnv1a(spec_)) {}

Monoid::~Monoid() = default;

Element Monoid::wrap(Payload p) const { return Element{tag_, std::move(p)}; }

void Monoid::requireSame(const Element& a) const {
  if (a.tag != tag_)
    throw FamilyMismatchError("element does not belong to " + name_);
}

void Monoid::requireSame(const Element& a, const Element& b) const {
  requireSame(a);
  requireSame(b);
}

Verdict Monoid::isUnit(const Element& a) const {
  requireSame(a);
  if (isUnitExact(a)) return Verdict::proven("invertible");
  return Verdict::refuted({a}, "non-invertible");
}

std::vector<Element> Monoid::units() const { return {identity()}; }

std::optional<Element> Monoid::quotient(const Element& a, const Element& b) const {
  Verdict v = divides(a, b);
  if (!v.holds()) return std::nullopt;
  assert(!v.witness.empty());
  return v.witness.front();
}

Verdict Monoid::associates(const Element& a, const Element& b) const {
  requireSame(a, b);
  // a ~ b iff a | b and b | a (then the two quotients are mutually inverse).
  Verdict ab = divides(a, b);
  if (!ab.holds()) return Verdict::refuted({a, b}, "no divisibility either way");
  Verdict ba = divides(b, a);
  if (!ba.holds()) return Verdict::refuted({a, b}, "one-sided divisibility");
  return Verdict::proven("mutual divisibility");
}

std::vector<Element> Monoid::divisorCandidates(const Element& a) const { return divisors(a); }

Verdict Monoid::gcd(const Element& a, const Element& b) const {
  requireSame(a, b);
  std::vector<Element> common;
  for (const Element& d : divisors(a))
    if (divides(d, b).holds()) common.push_back(d);
  // maximum under divisibility: g with d | g for every common divisor d
  std::vector<Element> maximal;
  for (const Element& g : common) {
    bool isMax = true;
    for (const Element& d : common)
      if (!divides(d, g).holds()) {
        isMax = false;
        break;
      }
    if (isMax) maximal.push_back(g);
  }
  if (!maximal.empty()) {
    sortCanonical(*this, maximal);
    return Verdict::provenWith({maximal.front()}, "maximum of the common divisor set");
  }
  // no maximum: exhibit two maximal incomparable common divisors
  std::vector<Element> tops;
  for (const Element& g : common) {
    bool dominated = false;
    for (const Element& d : common)
      if (!(d == g) && divides(g, d).holds() && !divides(d, g).holds()) {
        dominated = true;
        break;
      }
    if (!dominated) tops.push_back(g);
  }
  sortCanonical(*this, tops);
  assert(tops.size() >= 2);
  return Verdict::refuted({tops[0], tops[1]}, "two maximal incomparable common divisors");
}

Verdict Monoid::rpr(const Element& a, const Element& b) const {
  requireSame(a, b);
  for (const Element& d : divisors(a)) {
    if (isUnitExact(d)) continue;
    if (divides(d, b).holds())
      return Verdict::refuted({d}, "common non-invertible divisor");
  }
  return Verdict::proven("all common divisors invertible");
}

std::optional<Int> Monoid::dividesPower(const Element& a, const Element& c) const {
  requireSame(a, c);
  // Bounded fallback; families with an exact rule override this.
  Element acc = c;
  for (Int n = 1; n <= 64; ++n) {
    if (divides(a, acc).holds()) return n;
    acc = compose(acc, c);
  }
  return -1;  // undecided
}

bool Monoid::less(const Element& a, const Element& b) const {
  Int na = norm(a), nb = norm(b);
  if (na != nb) return na < nb;
  return comparePayloads(a.payload, b.payload) < 0;
}

Verdict Monoid::dividesByDifference(const Element& a, const Element& b,
                                    std::optional<Element> q) const {
  if (q) return Verdict::provenWith({*q});
  return Verdict::refuted({a, b}, "no quotient in the carrier");
}

Element power(const Monoid& m, const Element& a, Int k) {
  assert(k >= 0);
  Element acc = m.identity();
  for (Int i = 0; i < k; ++i) acc = m.compose(acc, a);
  return acc;
}

Element productOf(const Monoid& m, const std::vector<Element>& parts) {
  Element acc = m.identity();
  for (const Element& p : parts) acc = m.compose(acc, p);
  return acc;
}

Element recompose(const Monoid& m, const std::vector<Element>& parts,
                  const std::vector<Int>& exponents) {
  assert(parts.size() == exponents.size());
  Element acc = m.identity();
  for (size_t i = 0; i < parts.size(); ++i) acc = m.compose(acc, power(m, parts[i], exponents[i]));
  return acc;
}

void sortCanonical(const Monoid& m, std::vector<Element>& v) {
  std::sort(v.begin(), v.end(), [&](const Element& a, const Element& b) { return m.less(a, b); });
}

}  // namespace monoidlab
