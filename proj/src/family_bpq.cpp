// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

#include "monoidlab/families.hpp"

namespace monoidlab {

namespace {

std::string bpqSpecText(Int p, Int q, Int cap) {
  std::ostringstream os;
  os << "family = bpq { p = " << p << ", q = " << q << ", level_cap = " << cap << " }";
  return os.str();
}

Int maxXIndex(const BpqElem& v) { return static_cast<Int>(v.x.size()); }

std::vector<Int> trimmed(std::vector<Int> x) {
  while (!x.empty() && x.back() == 0) x.pop_back();
  return x;
}

// exponent slots of the level-L representation: (x_1, ..., x_m, y_L)
std::vector<Int> slots(const BpqElem& rep, Int minLen) {
  std::vector<Int> s = rep.x;
  if ((Int)s.size() < minLen) s.resize(minLen, 0);
  s.push_back(rep.y);
  return s;
}

}  // namespace

Bpq::Bpq(Int p, Int q, Int levelCap)
    : Monoid("B_{" + std::to_string(p) + "," + std::to_string(q) + "}", bpqSpecText(p, q, levelCap)),
      p_(p),
      q_(q),
      cap_(levelCap) {
  if (p < 1) throw SpecError("p: must be >= 1");
  if (q < 1) throw SpecError("q: must be >= 1");
  if (levelCap < 2) throw SpecError("level_cap: must be >= 2");
}

const BpqElem& Bpq::view(const Element& a) { return std::get<BpqElem>(a.payload); }

BpqElem Bpq::canonicalize(BpqElem v, Int p, Int q) {
  v.x = trimmed(std::move(v.x));
  if (v.y == 0) {
    v.level = 1;
    return v;
  }
  // undo the level rewrite while the whole y-block can be pulled down
  while (v.level > 1 && v.y % q == 0) {
    Int yDown = v.y / q;
    Int xIdx = v.level - 1;  // slot of x_{level}
    Int have = xIdx < (Int)v.x.size() ? v.x[xIdx] : 0;
    if (have < p * yDown) break;
    v.x[xIdx] = have - p * yDown;
    v.y = yDown;
    v.level -= 1;
    v.x = trimmed(std::move(v.x));
  }
  return v;
}

BpqElem Bpq::normalizeToLevel(const BpqElem& v, Int L2) const {
  if (L2 < v.level) throw SpecError("normalize_to_level: target below the element's level");
  if (L2 > cap_) throw LevelCapError("level cap exceeded during normalization");
  BpqElem r = v;
  while (r.level < L2) {
    if ((Int)r.x.size() < r.level + 1) r.x.resize(r.level + 1, 0);
    r.x[r.level] += p_ * r.y;  // x_{level+1}
    r.y *= q_;
    r.level += 1;
  }
  return r;
}

Int Bpq::comparisonLevel(const BpqElem& a, const BpqElem& b) const {
  // x-deficits below the common level can never be repaired by further
  // rewrites, so the level must dominate every x-generator index in play
  return std::max({a.level, b.level, maxXIndex(a), maxXIndex(b), Int{1}});
}

Element Bpq::make(BpqElem v) const {
  if (v.level < 1 || v.level > cap_) throw SpecError("level out of range");
  if (v.y < 0) throw SpecError("negative y-exponent");
  for (Int e : v.x)
    if (e < 0) throw SpecError("negative x-exponent");
  return wrap(canonicalize(std::move(v), p_, q_));
}

Element Bpq::xGen(Int i) const {
  if (i < 1) throw SpecError("x-generator index must be >= 1");
  BpqElem v;
  v.x.assign(i, 0);
  v.x[i - 1] = 1;
  return wrap(canonicalize(std::move(v), p_, q_));
}

Element Bpq::yGen(Int i) const {
  if (i < 1 || i > cap_) throw SpecError("y-generator index out of range");
  BpqElem v;
  v.level = i;
  v.y = 1;
  return wrap(canonicalize(std::move(v), p_, q_));
}

Element Bpq::identity() const { return wrap(BpqElem{}); }

Element Bpq::compose(const Element& a, const Element& b) const {
  requireSame(a, b);
  const BpqElem& va = view(a);
  const BpqElem& vb = view(b);
  Int L = std::max(va.level, vb.level);
  BpqElem ra = normalizeToLevel(va, L);
  BpqElem rb = normalizeToLevel(vb, L);
  BpqElem sum;
  sum.level = L;
  sum.x.resize(std::max(ra.x.size(), rb.x.size()), 0);
  for (size_t i = 0; i < sum.x.size(); ++i) {
    Int xa = i < ra.x.size() ? ra.x[i] : 0;
    Int xb = i < rb.x.size() ? rb.x[i] : 0;
    sum.x[i] = xa + xb;
  }
  sum.y = ra.y + rb.y;
  return wrap(canonicalize(std::move(sum), p_, q_));
}

std::vector<Int> Bpq::capVector(const Element& a) const {
  BpqElem r = normalizeToLevel(view(a), cap_);
  return slots(r, cap_);
}

Int Bpq::norm(const Element& a) const {
  requireSame(a);
  Int s = 0;
  for (Int v : capVector(a)) s += v;
  return s;
}

bool Bpq::isUnitExact(const Element& a) const {
  requireSame(a);
  const BpqElem& v = view(a);
  return v.y == 0 && v.x.empty();
}

Verdict Bpq::divides(const Element& a, const Element& b) const {
  requireSame(a, b);
  const BpqElem& va = view(a);
  const BpqElem& vb = view(b);
  Int L = comparisonLevel(va, vb);
  if (L > cap_) throw LevelCapError("level cap exceeded during normalization");
  BpqElem ra = normalizeToLevel(va, L);
  BpqElem rb = normalizeToLevel(vb, L);
  std::vector<Int> sa = slots(ra, L), sb = slots(rb, L);
  size_t n = std::max(sa.size(), sb.size());
  sa.resize(n, 0);
  sb.resize(n, 0);
  BpqElem diff;
  diff.level = L;
  diff.y = sb.back() - sa.back();
  if (diff.y < 0) return Verdict::refuted({a, b}, "y-deficit propagates to every level");
  diff.x.assign(sb.begin(), sb.end() - 1);
  for (size_t i = 0; i + 1 < n; ++i) {
    diff.x[i] -= sa[i];
    if (diff.x[i] < 0)
      return Verdict::refuted({a, b}, "x-deficit below the comparison level is permanent");
  }
  return Verdict::provenWith({wrap(canonicalize(std::move(diff), p_, q_))});
}

std::vector<Element> Bpq::enumerate(Int bound) const {
  // the enumeration window: elements representable at the level cap with
  // x-generator indices <= cap; distinct cap-level vectors are distinct
  // elements
  std::vector<Element> out;
  std::vector<Int> cur(cap_ + 1, 0);  // (x_1..x_cap, y_cap)
  while (true) {
    Int s = 0;
    for (Int v : cur) s += v;
    if (s <= bound) {
      BpqElem v;
      v.level = cap_;
      v.x.assign(cur.begin(), cur.end() - 1);
      v.y = cur.back();
      out.push_back(wrap(canonicalize(std::move(v), p_, q_)));
    }
    size_t i = 0;
    while (i < cur.size() && cur[i] == bound) cur[i++] = 0;
    if (i == cur.size()) break;
    ++cur[i];
  }
  sortCanonical(*this, out);
  return out;
}

std::vector<Element> Bpq::divisors(const Element& a) const {
  requireSame(a);
  // the finite window at the element's minimal level
  const BpqElem& v = view(a);
  std::vector<Int> s = slots(v, maxXIndex(v));
  std::vector<Element> out;
  std::vector<Int> cur(s.size(), 0);
  while (true) {
    BpqElem d;
    d.level = v.level;
    d.x.assign(cur.begin(), cur.end() - 1);
    d.y = cur.back();
    out.push_back(wrap(canonicalize(std::move(d), p_, q_)));
    size_t i = 0;
    while (i < cur.size() && cur[i] == s[i]) cur[i++] = 0;
    if (i == cur.size()) break;
    ++cur[i];
  }
  sortCanonical(*this, out);
  return out;
}

std::vector<Element> Bpq::divisorCandidates(const Element& a) const {
  requireSame(a);
  const BpqElem& v = view(a);
  std::set<Element, decltype(&structuralLess)> seen(&structuralLess);
  for (Int L = v.level; L <= cap_; ++L) {
    BpqElem rep = normalizeToLevel(v, L);
    std::vector<Int> s = slots(rep, maxXIndex(rep));
    // budget guard: representations blow up for q >= 2; the exact analytic
    // rules cover those cases, the candidate list only feeds searches
    long double count = 1;
    for (Int e : s) count *= (e + 1);
    if (count > 20000) break;
    std::vector<Int> cur(s.size(), 0);
    while (true) {
      BpqElem d;
      d.level = L;
      d.x.assign(cur.begin(), cur.end() - 1);
      d.y = cur.back();
      seen.insert(wrap(canonicalize(std::move(d), p_, q_)));
      size_t i = 0;
      while (i < cur.size() && cur[i] == s[i]) cur[i++] = 0;
      if (i == cur.size()) break;
      ++cur[i];
    }
  }
  std::vector<Element> out(seen.begin(), seen.end());
  sortCanonical(*this, out);
  return out;
}

Verdict Bpq::gcd(const Element& a, const Element& b) const {
  requireSame(a, b);
  const BpqElem& va = view(a);
  const BpqElem& vb = view(b);
  Int L = comparisonLevel(va, vb);
  if (L + 1 > cap_)
    return Verdict::unknownUpTo(cap_, "level cap reached before the minimum could be re-tested");
  auto minAt = [&](Int lvl) {
    BpqElem ra = normalizeToLevel(va, lvl);
    BpqElem rb = normalizeToLevel(vb, lvl);
    std::vector<Int> sa = slots(ra, lvl), sb = slots(rb, lvl);
    size_t n = std::max(sa.size(), sb.size());
    sa.resize(n, 0);
    sb.resize(n, 0);
    BpqElem g;
    g.level = lvl;
    g.x.resize(n - 1);
    for (size_t i = 0; i + 1 < n; ++i) g.x[i] = std::min(sa[i], sb[i]);
    g.y = std::min(sa.back(), sb.back());
    return wrap(canonicalize(std::move(g), p_, q_));
  };
  Element g1 = minAt(L);
  Element g2 = minAt(L + 1);
  if (g1 == g2)
    return Verdict::provenWith({g1}, "componentwise minimum, stable under one more rewrite");
  return Verdict::unknownUpTo(cap_, "minimum did not stabilize");  // not reachable mathematically
}

Verdict Bpq::rpr(const Element& a, const Element& b) const {
  Verdict g = gcd(a, b);
  if (g.kind == VerdictKind::UnknownUpTo) return g;
  assert(g.holds());
  if (isUnitExact(g.witness.front())) return Verdict::proven("trivial gcd");
  return Verdict::refuted({g.witness.front()}, "common non-invertible divisor");
}

std::optional<Int> Bpq::dividesPower(const Element& a, const Element& c) const {
  requireSame(a, c);
  const BpqElem& va = view(a);
  const BpqElem& vc = view(c);
  if (va.y == 0 && va.x.empty()) return 1;
  Int L = comparisonLevel(va, vc);
  if (L > cap_) return -1;
  BpqElem ra = normalizeToLevel(va, L);
  BpqElem rc = normalizeToLevel(vc, L);
  std::vector<Int> sa = slots(ra, L), sc = slots(rc, L);
  size_t n = std::max(sa.size(), sc.size());
  sa.resize(n, 0);
  sc.resize(n, 0);
  Int need = 1;
  for (size_t i = 0; i < n; ++i) {
    if (sa[i] == 0) continue;
    if (sc[i] == 0) return std::nullopt;  // support deficit is level-stable
    need = std::max(need, (sa[i] + sc[i] - 1) / sc[i]);
  }
  return need;
}

std::string Bpq::show(const Element& a) const {
  const BpqElem& v = view(a);
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < v.x.size(); ++i) {
    if (v.x[i] == 0) continue;
    if (!first) os << ' ';
    first = false;
    os << 'x' << (i + 1);
    if (v.x[i] > 1) os << '^' << v.x[i];
  }
  if (v.y > 0) {
    if (!first) os << ' ';
    first = false;
    os << 'y' << v.level;
    if (v.y > 1) os << '^' << v.y;
  }
  if (first) os << 'e';
  return os.str();
}

Element Bpq::parse(const std::string& text) const {
  Element acc = identity();
  std::string tok;
  std::istringstream is(text);
  std::string norm = text;
  for (char& c : norm)
    if (c == '*') c = ' ';
  std::istringstream is2(norm);
  while (is2 >> tok) {
    if (tok == "e" || tok == "1") continue;
    if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'y'))
      throw SpecError("cannot parse generator token '" + tok + "'");
    size_t caret = tok.find('^');
    Int idx = std::stoll(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
    Int exp = caret == std::string::npos ? 1 : std::stoll(tok.substr(caret + 1));
    Element g = tok[0] == 'x' ? xGen(idx) : yGen(idx);
    acc = compose(acc, power(*this, g, exp));
  }
  return acc;
}

bool Bpq::less(const Element& a, const Element& b) const {
  Int na = norm(a), nb = norm(b);
  if (na != nb) return na < nb;
  std::vector<Int> va = capVector(a), vb = capVector(b);
  size_t n = std::max(va.size(), vb.size());
  va.resize(n, 0);
  vb.resize(n, 0);
  return va < vb;
}

std::optional<Verdict> Bpq::squarefreeHint(const Element& a) const {
  requireSame(a);
  const BpqElem& v = view(a);
  auto refutedBy = [&](const Element& b) {
    Element c = *quotient(compose(b, b), a);
    return Verdict::refuted({b, c}, "square divisor");
  };
  if (v.y == 0) {
    // divisor sets of pure-x elements are level-independent
    for (size_t i = 0; i < v.x.size(); ++i)
      if (v.x[i] >= 2) return refutedBy(xGen(i + 1));
    return Verdict::proven("multiplicity-free x-vector");
  }
  Int L = std::max(v.level, maxXIndex(v));
  if (L > cap_) return Verdict::unknownUpTo(cap_, "level cap");
  BpqElem rep = normalizeToLevel(v, L);
  for (size_t i = 0; i < rep.x.size(); ++i)
    if (rep.x[i] >= 2) return refutedBy(xGen(i + 1));
  if (rep.y >= 2) return refutedBy(wrap(BpqElem{L, {}, 1}));
  // all exponents <= 1 at the comparison level, y-exponent exactly 1
  if (q_ >= 2) {
    if (L + 1 > cap_) return Verdict::unknownUpTo(cap_, "level cap");
    return refutedBy(wrap(BpqElem{L + 1, {}, 1}));  // y-exponent becomes q >= 2
  }
  if (p_ >= 2) {
    if (L + 1 > cap_) return Verdict::unknownUpTo(cap_, "level cap");
    return refutedBy(xGen(L + 1));  // x_{L+1} receives exponent p >= 2
  }
  return Verdict::proven("exponent pattern stationary: every level shows exponents <= 1");
}

std::optional<Verdict> Bpq::atomHint(const Element& a) const {
  requireSame(a);
  const BpqElem& v = view(a);
  if (isUnitExact(a)) return Verdict::refuted({a}, "invertible");
  if (v.y == 0) {
    Int s = 0;
    for (Int e : v.x) s += e;
    if (s == 1) return Verdict::proven("x-generator");
    for (size_t i = 0; i < v.x.size(); ++i)
      if (v.x[i] > 0) {
        Element b = xGen(i + 1);
        return Verdict::refuted({b, *quotient(b, a)}, "nontrivial split");
      }
  }
  if (v.x.empty() && v.y == 1) {
    // a = y_L: split through the level rewrite
    if (v.level + 1 > cap_) return Verdict::unknownUpTo(cap_, "level cap");
    Element b = xGen(v.level + 1);
    return Verdict::refuted({b, *quotient(b, a)}, "level rewrite split");
  }
  Element b = wrap(BpqElem{v.level, {}, 1});
  return Verdict::refuted({b, *quotient(b, a)}, "nontrivial split");
}

namespace {

// closed-form scheme constructions on an exponent-slot vector; slot index
// maps back to x_{i+1} (or the y slot)
struct SlotFact {
  std::vector<std::vector<Int>> parts;  // 0/1 or small slot vectors
  std::vector<Int> exps;
};

Int maxSlot(const std::vector<Int>& s) {
  Int m = 0;
  for (Int v : s) m = std::max(m, v);
  return m;
}

SlotFact slotChain(const std::vector<Int>& s) {
  // descending-support chain: part i collects the slots with multiplicity
  // >= n+1-i
  SlotFact f;
  Int n = maxSlot(s);
  if (n == 0) {
    f.parts.push_back(std::vector<Int>(s.size(), 0));
    f.exps.push_back(1);
    return f;
  }
  for (Int i = 1; i <= n; ++i) {
    std::vector<Int> part(s.size(), 0);
    for (size_t j = 0; j < s.size(); ++j) part[j] = s[j] >= n + 1 - i ? 1 : 0;
    f.parts.push_back(std::move(part));
    f.exps.push_back(1);
  }
  return f;
}

SlotFact slotByExponent(const std::vector<Int>& s) {
  // group slots by multiplicity; identity parts fill absent exponent levels
  SlotFact f;
  Int n = maxSlot(s);
  if (n == 0) n = 1;
  for (Int l = 1; l <= n; ++l) {
    std::vector<Int> part(s.size(), 0);
    for (size_t j = 0; j < s.size(); ++j) part[j] = s[j] == l ? 1 : 0;
    f.parts.push_back(std::move(part));
    f.exps.push_back(l);
  }
  return f;
}

SlotFact slotBinary(const std::vector<Int>& s) {
  SlotFact f;
  Int n = maxSlot(s);
  Int bits = 1;
  while ((Int{1} << bits) <= n) ++bits;
  for (Int i = 0; i < bits; ++i) {
    std::vector<Int> part(s.size(), 0);
    for (size_t j = 0; j < s.size(); ++j) part[j] = (s[j] >> i) & 1;
    f.parts.push_back(std::move(part));
    f.exps.push_back(Int{1} << i);
  }
  return f;
}

}  // namespace

std::optional<SchemeSearchResult> Bpq::schemeClosedForm(const Element& a, Scheme s) const {
  requireSame(a);
  const BpqElem& v = view(a);
  bool pureX = v.y == 0;
  bool oneOne = p_ == 1 && q_ == 1;

  // pick the representation level for the construction
  Int L = std::max(v.level, maxXIndex(v));
  if (L > cap_) return SchemeSearchResult{Verdict::unknownUpTo(cap_, "level cap"), std::nullopt};
  BpqElem rep = normalizeToLevel(v, L);

  auto elemFromSlots = [&](const std::vector<Int>& sl) {
    BpqElem e;
    e.level = L;
    e.x.assign(sl.begin(), sl.end() - 1);
    e.y = sl.back();
    return wrap(canonicalize(std::move(e), p_, q_));
  };
  auto packed = [&](const SlotFact& sf, Scheme sch) {
    Factorization f;
    f.scheme = sch;
    for (const auto& part : sf.parts) f.parts.push_back(elemFromSlots(part));
    f.exponents = sf.exps;
    std::vector<Element> w = f.parts;
    return SchemeSearchResult{Verdict::foundWitness(std::move(w), "closed form"), f};
  };

  if (!pureX && !oneOne) {
    if (q_ % 2 == 0) {
      if (s != Scheme::VI) {
        return SchemeSearchResult{
            Verdict::refuted({a}, "square-free elements are multiplicity-free x-vectors; no "
                                  "product of them carries a y-exponent"),
            std::nullopt};
      }
      // make the y-exponent even, then halve
      Int LL = rep.y % 2 == 0 ? L : L + 1;
      if (LL > cap_)
        return SchemeSearchResult{Verdict::unknownUpTo(cap_, "level cap"), std::nullopt};
      BpqElem r2 = normalizeToLevel(v, LL);
      std::vector<Int> sl = slots(r2, LL);
      std::vector<Int> half(sl.size()), par(sl.size());
      for (size_t i = 0; i < sl.size(); ++i) {
        half[i] = sl[i] / 2;
        par[i] = sl[i] % 2;
      }
      Int saveL = L;
      L = LL;  // elemFromSlots uses L
      Factorization f;
      f.scheme = Scheme::VI;
      f.parts = {elemFromSlots(half), elemFromSlots(par)};
      f.exponents = {2, 1};
      L = saveL;
      return SchemeSearchResult{Verdict::foundWitness(f.parts, "parity split"), f};
    }
    // q odd, (p,q) != (1,1)
    if (s == Scheme::VI) {
      if (rep.y % 2 == 1) {
        return SchemeSearchResult{
            Verdict::refuted({a}, "odd y-exponent is invariant: no b^2 c with square-free c"),
            std::nullopt};
      }
      std::vector<Int> sl = slots(rep, L);
      std::vector<Int> half(sl.size()), par(sl.size());
      for (size_t i = 0; i < sl.size(); ++i) {
        half[i] = sl[i] / 2;
        par[i] = sl[i] % 2;
      }
      Factorization f;
      f.scheme = Scheme::VI;
      f.parts = {elemFromSlots(half), elemFromSlots(par)};
      f.exponents = {2, 1};
      return SchemeSearchResult{Verdict::foundWitness(f.parts, "parity split"), f};
    }
    return SchemeSearchResult{
        Verdict::refuted({a}, "square-free elements are multiplicity-free x-vectors; no product "
                              "of them carries a y-exponent"),
        std::nullopt};
  }

  // pure-x elements and the p = q = 1 monoid share the free-commutative
  // constructions on the slot vector (every 0/1 slot vector is square-free)
  std::vector<Int> sl = pureX ? slots(v, maxXIndex(v)) : slots(rep, L);
  if (pureX) L = std::max<Int>(v.level, 1);  // slots of the canonical form

  switch (s) {
    case Scheme::I:
    case Scheme::II:
      return packed(slotChain(sl), s);
    case Scheme::III:
      return packed(slotByExponent(sl), s);
    case Scheme::IV:
      return packed(slotBinary(sl), s);
    case Scheme::V: {
      std::vector<Int> supp(sl.size());
      for (size_t i = 0; i < sl.size(); ++i) supp[i] = sl[i] > 0 ? 1 : 0;
      Element c = elemFromSlots(supp);
      std::vector<Int> rest(sl.size());
      for (size_t i = 0; i < sl.size(); ++i) rest[i] = sl[i] - supp[i];
      Element b = elemFromSlots(rest);
      Factorization f;
      f.scheme = Scheme::V;
      f.parts = {b, c};
      f.exponents = {1, 1};
      f.power = std::max<Int>(maxSlot(sl), 1);
      return SchemeSearchResult{Verdict::foundWitness(f.parts, "support extraction", {f.power}), f};
    }
    case Scheme::VI: {
      std::vector<Int> half(sl.size()), par(sl.size());
      for (size_t i = 0; i < sl.size(); ++i) {
        half[i] = sl[i] / 2;
        par[i] = sl[i] % 2;
      }
      Factorization f;
      f.scheme = Scheme::VI;
      f.parts = {elemFromSlots(half), elemFromSlots(par)};
      f.exponents = {2, 1};
      return SchemeSearchResult{Verdict::foundWitness(f.parts, "parity split"), f};
    }
  }
  return std::nullopt;
}

ProfileClaims Bpq::profileClaims() const {
  ProfileClaims pc;
  pc.gcd = {true, "componentwise minimum at the comparison level is stable"};
  pc.decomposition = {true, "gcd monoid"};
  pc.atomsArePrimes = {true, "atoms are the x-generators, which are prime"};
  pc.atomic = {false, "y-generators keep a positive y-exponent at every level"};
  pc.accp = {false, "the y-chain descends strictly forever"};
  pc.factorial = {false, "non-atomic"};
  bool oneOne = p_ == 1 && q_ == 1;
  for (Scheme s : {Scheme::I, Scheme::II, Scheme::III, Scheme::IV, Scheme::V, Scheme::VI}) {
    if (oneOne)
      pc.schemes[s] = {true, "total level construction"};
    else if (q_ % 2 == 0)
      pc.schemes[s] = {s == Scheme::VI, s == Scheme::VI
                                            ? "parity split at one level up"
                                            : "square-free elements are pure x-vectors"};
    else
      pc.schemes[s] = {false, s == Scheme::VI ? "odd y-exponent is level-invariant"
                                              : "square-free elements are pure x-vectors"};
  }
  return pc;
}

}  // namespace monoidlab
