// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

#include "monoidlab/families.hpp"

namespace monoidlab {

namespace {

std::string vecText(const std::vector<Int>& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

std::string submonoidSpecText(Int rank, const std::vector<std::vector<Int>>& gens) {
  std::ostringstream os;
  os << "family = submonoid_nn { rank = " << rank << ", gens = [";
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) os << ", ";
    os << vecText(gens[i]);
  }
  os << "] }";
  return os.str();
}

bool leq(const std::vector<Int>& a, const std::vector<Int>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

SubmonoidNN::SubmonoidNN(Int rank, std::vector<std::vector<Int>> generators)
    : Monoid("M<N^" + std::to_string(rank), submonoidSpecText(rank, generators)),
      rank_(rank),
      gens_(std::move(generators)) {
  if (rank_ < 1) throw SpecError("rank: must be >= 1");
  for (const auto& g : gens_) {
    if ((Int)g.size() != rank_) throw SpecError("gens: generator arity does not match rank");
    Int s = 0;
    for (Int v : g) {
      if (v < 0) throw SpecError("gens: negative coordinate");
      s += v;
    }
    if (s == 0) throw SpecError("gens: zero generator");
  }
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

const std::vector<Int>& SubmonoidNN::coords(const Element& a) {
  return std::get<VecElem>(a.payload).c;
}

namespace {

// local memo keyed on the remaining vector; avoids exponential re-exploration
// of refutation paths
bool memberSearch(const std::vector<std::vector<Int>>& gens, Int rank, const std::vector<Int>& v,
                  std::map<std::vector<Int>, bool>& memo, std::vector<Int>* mults) {
  bool zero = true;
  for (Int c : v) zero = zero && c == 0;
  if (zero) return true;
  if (auto it = memo.find(v); it != memo.end() && !it->second) return false;
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    if (!leq(gens[gi], v)) continue;
    std::vector<Int> rest = v;
    for (Int i = 0; i < rank; ++i) rest[i] -= gens[gi][i];
    if (memberSearch(gens, rank, rest, memo, mults)) {
      if (mults) ++(*mults)[gi];
      return true;
    }
  }
  memo[v] = false;
  return false;
}

}  // namespace

bool SubmonoidNN::memberRec(const std::vector<Int>& v, std::vector<Int>* mults) const {
  std::map<std::vector<Int>, bool> memo;
  return memberSearch(gens_, rank_, v, memo, mults);
}

Verdict SubmonoidNN::member(const std::vector<Int>& v) const {
  std::vector<Int> mults(gens_.size(), 0);
  if (memberRec(v, &mults)) {
    Verdict out = Verdict::proven("nonnegative integer combination of the generators");
    out.numbers = mults;
    return out;
  }
  return Verdict::refuted({wrap(VecElem{v})}, "no nonnegative integer combination");
}

Element SubmonoidNN::make(std::vector<Int> c) const {
  if ((Int)c.size() != rank_) throw SpecError("coordinate count does not match rank");
  if (!member(c).holds()) throw SpecError(vecText(c) + " is not a member");
  return wrap(VecElem{std::move(c)});
}

Element SubmonoidNN::identity() const { return wrap(VecElem{std::vector<Int>(rank_, 0)}); }

Element SubmonoidNN::compose(const Element& a, const Element& b) const {
  requireSame(a, b);
  std::vector<Int> r = coords(a);
  const auto& cb = coords(b);
  for (Int i = 0; i < rank_; ++i) r[i] += cb[i];
  return wrap(VecElem{std::move(r)});
}

Int SubmonoidNN::norm(const Element& a) const {
  requireSame(a);
  Int s = 0;
  for (Int v : coords(a)) s += v;
  return s;
}

bool SubmonoidNN::isUnitExact(const Element& a) const {
  requireSame(a);
  return norm(a) == 0;
}

Verdict SubmonoidNN::divides(const Element& a, const Element& b) const {
  requireSame(a, b);
  std::vector<Int> diff = coords(b);
  const auto& ca = coords(a);
  for (Int i = 0; i < rank_; ++i) {
    diff[i] -= ca[i];
    if (diff[i] < 0) return Verdict::refuted({a, b}, "negative exponent in the difference");
  }
  if (!member(diff).holds()) return Verdict::refuted({a, b}, "difference not a member");
  return Verdict::provenWith({wrap(VecElem{std::move(diff)})});
}

std::vector<Element> SubmonoidNN::enumerate(Int bound) const {
  // members of the ambient norm ball
  std::vector<Element> out;
  std::vector<Int> cur(rank_, 0);
  // odometer over the box [0, bound]^rank, filtered by norm and membership
  while (true) {
    Int s = 0;
    for (Int v : cur) s += v;
    if (s <= bound && member(cur).holds()) out.push_back(wrap(VecElem{cur}));
    Int i = 0;
    while (i < rank_ && cur[i] == bound) cur[i++] = 0;
    if (i == rank_) break;
    ++cur[i];
  }
  sortCanonical(*this, out);
  return out;
}

std::vector<Element> SubmonoidNN::divisors(const Element& a) const {
  requireSame(a);
  std::vector<Element> out;
  const auto& ca = coords(a);
  std::vector<Int> cur(rank_, 0);
  while (true) {
    std::vector<Int> rest = ca;
    for (Int i = 0; i < rank_; ++i) rest[i] -= cur[i];
    if (member(cur).holds() && member(rest).holds()) out.push_back(wrap(VecElem{cur}));
    Int i = 0;
    while (i < rank_ && cur[i] == ca[i]) cur[i++] = 0;
    if (i == rank_) break;
    ++cur[i];
  }
  sortCanonical(*this, out);
  return out;
}

std::string SubmonoidNN::show(const Element& a) const { return vecText(coords(a)); }

Element SubmonoidNN::parse(const std::string& text) const {
  std::vector<Int> c;
  std::string t;
  for (char ch : text)
    if (ch != '(' && ch != ')' && ch != ' ') t += ch;
  std::istringstream is(t);
  std::string tok;
  while (std::getline(is, tok, ',')) c.push_back(std::stoll(tok));
  return make(std::move(c));
}

ProfileClaims SubmonoidNN::profileClaims() const {
  ProfileClaims pc;
  std::string src = "reduced submonoid of N^n: norm strictly decreases along proper divisibility";
  pc.accp = {true, src};
  pc.atomic = {true, src};
  pc.schemes[Scheme::I] = {true, "atomic, and atoms are square-free"};
  return pc;
}

}  // namespace monoidlab
