// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

#include "monoidlab/families.hpp"

namespace monoidlab {

namespace {

std::string shiftedSpecText(Int threshold, const std::vector<Int>& extras) {
  std::ostringstream os;
  os << "family = shifted_numerical { threshold = " << threshold << ", extras = [";
  for (size_t i = 0; i < extras.size(); ++i) {
    if (i) os << ", ";
    os << extras[i];
  }
  os << "] }";
  return os.str();
}

std::string shiftedName(Int threshold, const std::vector<Int>& extras) {
  std::ostringstream os;
  if (threshold < 0)
    os << "{0}";
  else
    os << "N>=" << threshold << (extras.empty() ? "+{0}" : "+{0,...}");
  return os.str();
}

}  // namespace

ShiftedNumerical::ShiftedNumerical(Int threshold, std::vector<Int> extrasIn)
    : Monoid(shiftedName(threshold, extrasIn), shiftedSpecText(threshold, extrasIn)),
      threshold_(threshold) {
  std::set<Int> ex;
  for (Int e : extrasIn) {
    if (e < 0) throw SpecError("extras: negative entry");
    if (e == 0) continue;  // 0 is always in the carrier
    if (threshold_ >= 0 && e >= threshold_) continue;  // already in the tail
    ex.insert(e);
  }
  extras_.assign(ex.begin(), ex.end());
  // closure under addition: it suffices to check sums of two extras (extra +
  // tail and tail + tail land in the tail automatically)
  for (Int a : extras_)
    for (Int b : extras_)
      if (!member(a + b))
        throw SpecError("extras: carrier not closed under addition (" + std::to_string(a) + "+" +
                        std::to_string(b) + "=" + std::to_string(a + b) + " missing)");
  if (threshold_ < 0 && !extras_.empty())
    throw SpecError("extras: a tail-free carrier beyond {0} cannot be closed under addition");
}

bool ShiftedNumerical::member(Int v) const {
  if (v == 0) return true;
  if (v < 0) return false;
  if (threshold_ >= 0 && v >= threshold_) return true;
  return std::binary_search(extras_.begin(), extras_.end(), v);
}

std::optional<Int> ShiftedNumerical::minNonzero() const {
  if (!extras_.empty()) return extras_.front();
  if (threshold_ >= 0) return std::max<Int>(threshold_, 1);
  return std::nullopt;
}

Element ShiftedNumerical::make(Int v) const {
  if (!member(v)) throw SpecError(std::to_string(v) + " is not in the carrier");
  return wrap(NatElem{v});
}

Int ShiftedNumerical::value(const Element& a) { return std::get<NatElem>(a.payload).v; }

Element ShiftedNumerical::identity() const { return wrap(NatElem{0}); }

Element ShiftedNumerical::compose(const Element& a, const Element& b) const {
  requireSame(a, b);
  return wrap(NatElem{value(a) + value(b)});
}

Int ShiftedNumerical::norm(const Element& a) const {
  requireSame(a);
  return value(a);
}

bool ShiftedNumerical::isUnitExact(const Element& a) const {
  requireSame(a);
  return value(a) == 0;
}

Verdict ShiftedNumerical::divides(const Element& a, const Element& b) const {
  requireSame(a, b);
  Int d = value(b) - value(a);
  if (d >= 0 && member(d)) return Verdict::provenWith({wrap(NatElem{d})});
  return Verdict::refuted({a, b}, "difference not in the carrier");
}

std::vector<Element> ShiftedNumerical::enumerate(Int bound) const {
  std::vector<Element> out;
  for (Int v = 0; v <= bound; ++v)
    if (member(v)) out.push_back(wrap(NatElem{v}));
  return out;
}

std::vector<Element> ShiftedNumerical::divisors(const Element& a) const {
  requireSame(a);
  std::vector<Element> out;
  Int va = value(a);
  for (Int d = 0; d <= va; ++d)
    if (member(d) && member(va - d)) out.push_back(wrap(NatElem{d}));
  return out;
}

std::optional<Int> ShiftedNumerical::dividesPower(const Element& a, const Element& c) const {
  requireSame(a, c);
  Int va = value(a), vc = value(c);
  if (vc == 0) return va == 0 ? std::optional<Int>(1) : std::nullopt;
  // n*c - a is eventually >= threshold, so some n always works; the cap is a
  // generous bound on the first such n
  Int cap = va + std::max<Int>(threshold_, 1) + 2;
  for (Int n = 1; n <= cap; ++n) {
    Int diff = n * vc - va;
    if (diff >= 0 && member(diff)) return n;
  }
  return std::nullopt;
}

std::string ShiftedNumerical::show(const Element& a) const { return std::to_string(value(a)); }

Element ShiftedNumerical::parse(const std::string& text) const { return make(std::stoll(text)); }

ProfileClaims ShiftedNumerical::profileClaims() const {
  ProfileClaims pc;
  // a proper divisor has strictly smaller value, so divisibility chains
  // terminate: ACCP, hence atomic
  std::string src = "value strictly decreases along proper divisibility";
  pc.accp = {true, src};
  pc.atomic = {true, src};
  pc.schemes[Scheme::I] = {true, "atomic, and atoms are square-free"};
  return pc;
}

}  // namespace monoidlab
