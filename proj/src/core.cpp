// SPDX-License-Identifier: Apache-2.0
#include "monoidlab/core.hpp"

#include <cassert>

namespace monoidlab {

namespace {

template <typename T>
int cmp(const T& a, const T& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

int cmpVec(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (int c = cmp(a.size(), b.size())) return c;
  for (size_t i = 0; i < a.size(); ++i)
    if (int c = cmp(a[i], b[i])) return c;
  return 0;
}

}  // namespace

int comparePayloads(const Payload& a, const Payload& b) {
  if (int c = cmp(a.index(), b.index())) return c;
  switch (a.index()) {
    case 0:
      return cmpVec(std::get<VecElem>(a).c, std::get<VecElem>(b).c);
    case 1:
      return cmp(std::get<NatElem>(a).v, std::get<NatElem>(b).v);
    case 2: {
      const auto& x = std::get<BpqElem>(a);
      const auto& y = std::get<BpqElem>(b);
      if (int c = cmp(x.level, y.level)) return c;
      if (int c = cmpVec(x.x, y.x)) return c;
      return cmp(x.y, y.y);
    }
    case 3:
      return cmpVec(std::get<PolyElem>(a).c, std::get<PolyElem>(b).c);
    case 4: {
      const auto& x = std::get<RatElem>(a);
      const auto& y = std::get<RatElem>(b);
      // canonical lowest terms: cross-multiply for value order
      if (int c = cmp(x.num * y.den, y.num * x.den)) return c;
      return 0;
    }
  }
  return 0;
}

bool structuralLess(const Element& a, const Element& b) {
  if (a.tag != b.tag) return a.tag < b.tag;
  return comparePayloads(a.payload, b.payload) < 0;
}

const char* toString(VerdictKind k) {
  switch (k) {
    case VerdictKind::Proven: return "Proven";
    case VerdictKind::Refuted: return "Refuted";
    case VerdictKind::FoundWitness: return "FoundWitness";
    case VerdictKind::NotFoundUpTo: return "NotFoundUpTo";
    case VerdictKind::UnknownUpTo: return "UnknownUpTo";
  }
  return "?";
}

Verdict Verdict::proven(std::string note, Int bound) {
  Verdict v;
  v.kind = VerdictKind::Proven;
  v.bound = bound;
  v.note = std::move(note);
  return v;
}

Verdict Verdict::provenWith(std::vector<Element> witness, std::string note,
                            std::vector<Int> numbers) {
  Verdict v;
  v.kind = VerdictKind::Proven;
  v.witness = std::move(witness);
  v.numbers = std::move(numbers);
  v.note = std::move(note);
  return v;
}

Verdict Verdict::refuted(std::vector<Element> witness, std::string note, std::vector<Int> numbers) {
  assert(!witness.empty());
  Verdict v;
  v.kind = VerdictKind::Refuted;
  v.witness = std::move(witness);
  v.numbers = std::move(numbers);
  v.note = std::move(note);
  return v;
}

Verdict Verdict::foundWitness(std::vector<Element> witness, std::string note,
                              std::vector<Int> numbers) {
  assert(!witness.empty());
  Verdict v;
  v.kind = VerdictKind::FoundWitness;
  v.witness = std::move(witness);
  v.numbers = std::move(numbers);
  v.note = std::move(note);
  return v;
}

Verdict Verdict::notFoundUpTo(Int bound, std::string note) {
  Verdict v;
  v.kind = VerdictKind::NotFoundUpTo;
  v.bound = bound;
  v.note = std::move(note);
  return v;
}

Verdict Verdict::unknownUpTo(Int bound, std::string note) {
  Verdict v;
  v.kind = VerdictKind::UnknownUpTo;
  v.bound = bound;
  v.note = std::move(note);
  return v;
}

const char* toString(Scheme s) {
  switch (s) {
    case Scheme::I: return "i";
    case Scheme::II: return "ii";
    case Scheme::III: return "iii";
    case Scheme::IV: return "iv";
    case Scheme::V: return "v";
    case Scheme::VI: return "vi";
  }
  return "?";
}

std::optional<Scheme> schemeFromString(const std::string& s) {
  if (s == "i" || s == "I") return Scheme::I;
  if (s == "ii" || s == "II") return Scheme::II;
  if (s == "iii" || s == "III") return Scheme::III;
  if (s == "iv" || s == "IV") return Scheme::IV;
  if (s == "v" || s == "V") return Scheme::V;
  if (s == "vi" || s == "VI") return Scheme::VI;
  return std::nullopt;
}

}  // namespace monoidlab
