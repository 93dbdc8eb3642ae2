// SPDX-License-Identifier: Apache-2.0
#include "monoidlab/gf.hpp"

#include <algorithm>
#include <cassert>

namespace monoidlab {

namespace {

std::vector<Int> codeToDigits(Int code, Int p, Int k) {
  std::vector<Int> d(k, 0);
  for (Int i = 0; i < k && code > 0; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

Int digitsToCode(const std::vector<Int>& d, Int p) {
  Int code = 0;
  for (size_t i = d.size(); i-- > 0;) code = code * p + (i < d.size() ? d[i] : 0);
  return code;
}

// polynomial multiplication of digit vectors mod (modulus, p)
Int mulMod(Int a, Int b, Int p, Int k, const std::vector<Int>& mod) {
  std::vector<Int> da = codeToDigits(a, p, k), db = codeToDigits(b, p, k);
  std::vector<Int> prod(2 * k, 0);
  for (Int i = 0; i < k; ++i)
    for (Int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  // reduce by the monic modulus of degree k
  for (Int d = 2 * k - 2; d >= k; --d) {
    Int c = prod[d] % p;
    if (c == 0) continue;
    prod[d] = 0;
    for (Int i = 0; i < k; ++i) {
      Int t = prod[d - k + i] - c * mod[i] % p;
      prod[d - k + i] = ((t % p) + p) % p;
    }
  }
  prod.resize(k);
  return digitsToCode(prod, p);
}

}  // namespace

Gf::Gf(Int p, Int k, std::vector<Int> modulus) : p_(p), k_(k), mod_(std::move(modulus)) {
  if (p < 2) throw SpecError("characteristic must be a prime >= 2");
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw SpecError("characteristic is not prime");
  if (k < 1) throw SpecError("extension degree must be >= 1");
  if (k == 1 && mod_.empty()) mod_ = {0, 1};  // GF(p) itself, modulus irrelevant
  if ((Int)mod_.size() != k + 1) throw SpecError("irreducible: need degree = extension degree");
  for (Int& c : mod_) c = ((c % p) + p) % p;
  if (mod_.back() != 1) throw SpecError("irreducible: must be monic");
  q_ = 1;
  for (Int i = 0; i < k; ++i) q_ *= p;
  if (q_ > 4096) throw SpecError("field too large for table construction");

  mulTable_.assign(q_, std::vector<Int>(q_, 0));
  for (Int a = 0; a < q_; ++a)
    for (Int b = a; b < q_; ++b) mulTable_[a][b] = mulTable_[b][a] = mulMod(a, b, p_, k_, mod_);

  // validate irreducibility: no zero divisors among nonzero codes
  if (k > 1) {
    for (Int a = 1; a < q_; ++a)
      for (Int b = 1; b < q_; ++b)
        if (mulTable_[a][b] == 0)
          throw SpecError("irreducible: the modulus polynomial is reducible");
  }

  invTable_.assign(q_, 0);
  for (Int a = 1; a < q_; ++a)
    for (Int b = 1; b < q_; ++b)
      if (mulTable_[a][b] == 1) {
        invTable_[a] = b;
        break;
      }
}

Int Gf::add(Int a, Int b) const {
  std::vector<Int> da = codeToDigits(a, p_, k_), db = codeToDigits(b, p_, k_);
  for (Int i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
  return digitsToCode(da, p_);
}

Int Gf::sub(Int a, Int b) const { return add(a, neg(b)); }

Int Gf::neg(Int a) const {
  std::vector<Int> d = codeToDigits(a, p_, k_);
  for (Int i = 0; i < k_; ++i) d[i] = (p_ - d[i]) % p_;
  return digitsToCode(d, p_);
}

Int Gf::mul(Int a, Int b) const { return mulTable_[a][b]; }

Int Gf::inv(Int a) const {
  assert(a != 0);
  return invTable_[a];
}

Int Gf::pow(Int a, Int e) const {
  Int acc = 1;
  for (Int i = 0; i < e; ++i) acc = mul(acc, a);
  return acc;
}

bool Gf::inSubfield(Int a, Int j) const {
  // fixed points of the j-th Frobenius power: a^(p^j) == a
  Int pj = 1;
  for (Int i = 0; i < j; ++i) pj *= p_;
  return pow(a, pj) == a;
}

std::string Gf::show(Int a) const { return std::to_string(a); }

namespace fpoly {

Coeffs trim(Coeffs c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

bool isZero(const Coeffs& c) { return c.empty(); }

Int degree(const Coeffs& c) { return static_cast<Int>(c.size()) - 1; }

Coeffs add(const Gf& F, const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    Int x = i < a.size() ? a[i] : 0;
    Int y = i < b.size() ? b[i] : 0;
    r[i] = F.add(x, y);
  }
  return trim(std::move(r));
}

Coeffs sub(const Gf& F, const Coeffs& a, const Coeffs& b) {
  Coeffs nb = b;
  for (Int& c : nb) c = F.neg(c);
  return add(F, a, nb);
}

Coeffs mul(const Gf& F, const Coeffs& a, const Coeffs& b) {
  if (isZero(a) || isZero(b)) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  return trim(std::move(r));
}

Coeffs scale(const Gf& F, const Coeffs& a, Int s) {
  Coeffs r = a;
  for (Int& c : r) c = F.mul(c, s);
  return trim(std::move(r));
}

std::pair<Coeffs, Coeffs> divmod(const Gf& F, const Coeffs& a, const Coeffs& b) {
  assert(!isZero(b));
  Coeffs rem = a;
  Int db = degree(b);
  if (degree(a) < db) return {{}, trim(std::move(rem))};
  Coeffs quot(degree(a) - db + 1, 0);
  Int lcInv = F.inv(b.back());
  for (Int d = degree(a); d >= db; --d) {
    if (rem[d] == 0) continue;
    Int c = F.mul(rem[d], lcInv);
    Int shift = d - db;
    quot[shift] = c;
    for (size_t i = 0; i < b.size(); ++i)
      rem[shift + i] = F.sub(rem[shift + i], F.mul(c, b[i]));
  }
  return {trim(std::move(quot)), trim(std::move(rem))};
}

bool dividesExactly(const Gf& F, const Coeffs& a, const Coeffs& b, Coeffs* quot) {
  if (isZero(a)) return isZero(b);
  auto [q, r] = divmod(F, b, a);
  if (!isZero(r)) return false;
  if (quot) *quot = q;
  return true;
}

Coeffs monic(const Gf& F, const Coeffs& a) {
  if (isZero(a)) return a;
  return scale(F, a, F.inv(a.back()));
}

Coeffs gcd(const Gf& F, Coeffs a, Coeffs b) {
  while (!isZero(b)) {
    auto [q, r] = divmod(F, a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

Coeffs derivative(const Gf& F, const Coeffs& a) {
  Coeffs r;
  for (size_t i = 1; i < a.size(); ++i) {
    // i * a[i] in characteristic p
    Int m = static_cast<Int>(i) % F.p();
    Int c = 0;
    for (Int j = 0; j < m; ++j) c = F.add(c, a[i]);
    r.push_back(c);
  }
  return trim(std::move(r));
}

Int evalAtZero(const Coeffs& a) { return a.empty() ? 0 : a.front(); }

std::vector<Coeffs> allMonicOfDegree(const Gf& F, Int d) {
  std::vector<Coeffs> out;
  Int q = F.q();
  Int count = 1;
  for (Int i = 0; i < d; ++i) count *= q;
  for (Int code = 0; code < count; ++code) {
    Coeffs c(d + 1, 0);
    Int t = code;
    for (Int i = 0; i < d; ++i) {
      c[i] = t % q;
      t /= q;
    }
    c[d] = 1;
    out.push_back(std::move(c));
  }
  return out;
}

bool isIrreducible(const Gf& F, const Coeffs& a) {
  Int d = degree(a);
  if (d <= 0) return false;
  if (d == 1) return true;
  for (Int e = 1; 2 * e <= d; ++e)
    for (const Coeffs& m : allMonicOfDegree(F, e))
      if (dividesExactly(F, m, a)) return false;
  return true;
}

Factored factor(const Gf& F, const Coeffs& a) {
  assert(!isZero(a));
  Factored out;
  Coeffs rest = a;
  out.unit = rest.back();
  rest = monic(F, rest);
  for (Int d = 1; degree(rest) > 0 && d <= degree(rest); ++d) {
    for (const Coeffs& m : allMonicOfDegree(F, d)) {
      if (degree(rest) < d) break;
      if (!isIrreducible(F, m)) continue;
      Int mult = 0;
      Coeffs q;
      while (dividesExactly(F, m, rest, &q)) {
        rest = q;
        ++mult;
      }
      if (mult > 0) out.factors.push_back({m, mult});
    }
  }
  assert(degree(rest) <= 0);
  return out;
}

bool squarefreeInFx(const Gf& F, const Coeffs& a) {
  if (degree(a) <= 0) return !isZero(a);
  Coeffs d = derivative(F, a);
  if (isZero(d)) return false;  // a = g(x^p) = (h(x))^p over a perfect field
  return degree(gcd(F, a, d)) == 0;
}

}  // namespace fpoly

}  // namespace monoidlab
