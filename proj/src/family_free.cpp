// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cassert>
#include <sstream>

#include "monoidlab/families.hpp"

namespace monoidlab {

namespace {

std::string freeSpecText(Int rank) {
  return "family = free_commutative { rank = " + std::to_string(rank) + " }";
}

void ballRec(Int rank, Int bound, std::vector<Int>& cur, Int used,
             std::vector<std::vector<Int>>& out) {
  if ((Int)cur.size() == rank) {
    out.push_back(cur);
    return;
  }
  for (Int v = 0; v <= bound - used; ++v) {
    cur.push_back(v);
    ballRec(rank, bound, cur, used + v, out);
    cur.pop_back();
  }
}

}  // namespace

FreeCommutative::FreeCommutative(Int rank)
    : Monoid("N^" + std::to_string(rank), freeSpecText(rank)), rank_(rank) {
  if (rank < 1) throw SpecError("rank: must be >= 1");
}

const std::vector<Int>& FreeCommutative::coords(const Element& a) {
  return std::get<VecElem>(a.payload).c;
}

Element FreeCommutative::make(std::vector<Int> c) const {
  if ((Int)c.size() != rank_) throw SpecError("coordinate count does not match rank");
  for (Int v : c)
    if (v < 0) throw SpecError("negative exponent");
  return wrap(VecElem{std::move(c)});
}

Element FreeCommutative::identity() const { return wrap(VecElem{std::vector<Int>(rank_, 0)}); }

Element FreeCommutative::compose(const Element& a, const Element& b) const {
  requireSame(a, b);
  std::vector<Int> r = coords(a);
  const auto& cb = coords(b);
  for (Int i = 0; i < rank_; ++i) r[i] += cb[i];
  return wrap(VecElem{std::move(r)});
}

Int FreeCommutative::norm(const Element& a) const {
  requireSame(a);
  Int s = 0;
  for (Int v : coords(a)) s += v;
  return s;
}

bool FreeCommutative::isUnitExact(const Element& a) const {
  requireSame(a);
  return norm(a) == 0;
}

Verdict FreeCommutative::divides(const Element& a, const Element& b) const {
  requireSame(a, b);
  std::vector<Int> diff = coords(b);
  const auto& ca = coords(a);
  for (Int i = 0; i < rank_; ++i) {
    diff[i] -= ca[i];
    if (diff[i] < 0) return Verdict::refuted({a, b}, "negative exponent in the difference");
  }
  return Verdict::provenWith({wrap(VecElem{std::move(diff)})});
}

std::vector<Element> FreeCommutative::enumerate(Int bound) const {
  std::vector<std::vector<Int>> coords;
  std::vector<Int> cur;
  ballRec(rank_, bound, cur, 0, coords);
  std::vector<Element> out;
  out.reserve(coords.size());
  for (auto& c : coords) out.push_back(wrap(VecElem{std::move(c)}));
  sortCanonical(*this, out);
  return out;
}

std::vector<Element> FreeCommutative::divisors(const Element& a) const {
  requireSame(a);
  std::vector<Element> out;
  std::vector<Int> cur(rank_, 0);
  const auto& ca = coords(a);
  while (true) {
    out.push_back(wrap(VecElem{cur}));
    Int i = 0;
    while (i < rank_ && cur[i] == ca[i]) cur[i++] = 0;
    if (i == rank_) break;
    ++cur[i];
  }
  sortCanonical(*this, out);
  return out;
}

Verdict FreeCommutative::gcd(const Element& a, const Element& b) const {
  requireSame(a, b);
  std::vector<Int> g = coords(a);
  const auto& cb = coords(b);
  for (Int i = 0; i < rank_; ++i) g[i] = std::min(g[i], cb[i]);
  return Verdict::provenWith({wrap(VecElem{std::move(g)})}, "componentwise minimum");
}

Verdict FreeCommutative::rpr(const Element& a, const Element& b) const {
  requireSame(a, b);
  const auto& ca = coords(a);
  const auto& cb = coords(b);
  for (Int i = 0; i < rank_; ++i)
    if (ca[i] > 0 && cb[i] > 0) {
      std::vector<Int> w(rank_, 0);
      w[i] = 1;
      return Verdict::refuted({wrap(VecElem{std::move(w)})}, "shared support coordinate");
    }
  return Verdict::proven("disjoint supports");
}

std::optional<Int> FreeCommutative::dividesPower(const Element& a, const Element& c) const {
  requireSame(a, c);
  const auto& ca = coords(a);
  const auto& cc = coords(c);
  Int n = 1;
  for (Int i = 0; i < rank_; ++i) {
    if (ca[i] == 0) continue;
    if (cc[i] == 0) return std::nullopt;
    n = std::max(n, (ca[i] + cc[i] - 1) / cc[i]);
  }
  return n;
}

std::string FreeCommutative::show(const Element& a) const {
  std::ostringstream os;
  os << '(';
  const auto& c = coords(a);
  for (Int i = 0; i < rank_; ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ')';
  return os.str();
}

Element FreeCommutative::parse(const std::string& text) const {
  std::vector<Int> c;
  std::string t;
  for (char ch : text)
    if (ch != '(' && ch != ')' && ch != ' ') t += ch;
  std::istringstream is(t);
  std::string tok;
  while (std::getline(is, tok, ',')) c.push_back(std::stoll(tok));
  return make(std::move(c));
}

std::optional<Verdict> FreeCommutative::squarefreeHint(const Element& a) const {
  // square-free iff every exponent is <= 1; cross-checked against the generic
  // divisor search in the test suite
  const auto& c = coords(a);
  for (Int i = 0; i < rank_; ++i)
    if (c[i] >= 2) {
      std::vector<Int> b(rank_, 0);
      b[i] = 1;
      Element be = wrap(VecElem{b});
      Element ce = *quotient(compose(be, be), a);
      return Verdict::refuted({be, ce}, "doubled coordinate");
    }
  return Verdict::proven("all exponents <= 1");
}

std::optional<Verdict> FreeCommutative::atomHint(const Element& a) const {
  Int n = norm(a);
  if (n == 0) return Verdict::refuted({a}, "invertible");
  if (n == 1) return Verdict::proven("canonical basis vector");
  // split off one basis coordinate
  const auto& c = coords(a);
  for (Int i = 0; i < rank_; ++i)
    if (c[i] > 0) {
      std::vector<Int> b(rank_, 0);
      b[i] = 1;
      Element be = wrap(VecElem{b});
      return Verdict::refuted({be, *quotient(be, a)}, "nontrivial split");
    }
  return std::nullopt;
}

std::optional<Verdict> FreeCommutative::primeHint(const Element& a) const {
  Int n = norm(a);
  if (n == 0) return Verdict::refuted({a}, "invertible");
  if (n == 1) return Verdict::proven("free generator");
  const auto& c = coords(a);
  for (Int i = 0; i < rank_; ++i)
    if (c[i] > 0) {
      std::vector<Int> d(rank_, 0);
      d[i] = 1;
      Element de = wrap(VecElem{d});
      Element rest = *quotient(de, a);
      // a | de * rest = a, yet a divides neither proper part
      return Verdict::refuted({de, rest}, "divides the product of two proper parts");
    }
  return std::nullopt;
}

std::optional<Verdict> FreeCommutative::radicalHint(const Element& a) const {
  // factorial, hence a decomposition monoid: radical coincides with square-free
  const auto& c = coords(a);
  bool sf = true;
  for (Int v : c) sf = sf && v <= 1;
  if (sf) return Verdict::proven("square-free in a decomposition monoid");
  std::vector<Int> supp(rank_, 0);
  Int maxExp = 0;
  for (Int i = 0; i < rank_; ++i) {
    supp[i] = c[i] > 0 ? 1 : 0;
    maxExp = std::max(maxExp, c[i]);
  }
  // a | supp^n but a does not divide supp
  return Verdict::refuted({wrap(VecElem{std::move(supp)})}, "divides a power of its support",
                          {maxExp});
}

std::optional<Verdict> FreeCommutative::primalHint(const Element& a) const {
  (void)a;
  return Verdict::proven("gcd monoid: split off gcd(a, b)");
}

ProfileClaims FreeCommutative::profileClaims() const {
  ProfileClaims pc;
  std::string src = "free commutative monoid (factorial)";
  pc.atomic = {true, src};
  pc.accp = {true, src};
  pc.gcd = {true, src};
  pc.decomposition = {true, src};
  pc.atomsArePrimes = {true, src};
  pc.factorial = {true, src};
  for (Scheme s : {Scheme::I, Scheme::II, Scheme::III, Scheme::IV, Scheme::V, Scheme::VI})
    pc.schemes[s] = {true, "total closed-form construction"};
  return pc;
}

}  // namespace monoidlab
