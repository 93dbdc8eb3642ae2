// SPDX-License-Identifier: Apache-2.0
#ifndef MONOIDLAB_GF_HPP
#define MONOIDLAB_GF_HPP

#include <string>
#include <vector>

#include "monoidlab/core.hpp"

namespace monoidlab {

/// GF(p^k) with an explicit irreducible modulus, elements coded as integers
/// in [0, p^k): the code is the base-p digit vector of the polynomial
/// representation, least significant digit = constant term. Fixing the
/// modulus in the spec text keeps runs reproducible bit for bit.
class Gf {
 public:
  /// modulus: degree-k monic irreducible over GF(p), constant-first
  /// coefficient list of length k+1. Irreducibility is validated.
  Gf(Int p, Int k, std::vector<Int> modulus);

  Int p() const { return p_; }
  Int k() const { return k_; }
  Int q() const { return q_; }

  Int add(Int a, Int b) const;
  Int sub(Int a, Int b) const;
  Int neg(Int a) const;
  Int mul(Int a, Int b) const;
  Int inv(Int a) const;
  Int pow(Int a, Int e) const;

  /// true iff a lies in the subfield GF(p^j) (requires j | k), i.e. a^(p^j) = a.
  bool inSubfield(Int a, Int j) const;

  std::string show(Int a) const;

 private:
  Int p_, k_, q_;
  std::vector<Int> mod_;  // constant-first
  std::vector<std::vector<Int>> mulTable_;
  std::vector<Int> invTable_;
};

/// Dense univariate polynomial arithmetic over a Gf. Coefficient vectors are
/// constant-first and trimmed: the zero polynomial is the empty vector.
namespace fpoly {

using Coeffs = std::vector<Int>;

Coeffs trim(Coeffs c);
bool isZero(const Coeffs& c);
Int degree(const Coeffs& c);  // -1 for the zero polynomial
Coeffs add(const Gf& F, const Coeffs& a, const Coeffs& b);
Coeffs sub(const Gf& F, const Coeffs& a, const Coeffs& b);
Coeffs mul(const Gf& F, const Coeffs& a, const Coeffs& b);
Coeffs scale(const Gf& F, const Coeffs& a, Int s);
/// Quotient and remainder; b must be nonzero.
std::pair<Coeffs, Coeffs> divmod(const Gf& F, const Coeffs& a, const Coeffs& b);
bool dividesExactly(const Gf& F, const Coeffs& a, const Coeffs& b, Coeffs* quot = nullptr);
Coeffs monic(const Gf& F, const Coeffs& a);
Coeffs gcd(const Gf& F, Coeffs a, Coeffs b);
Coeffs derivative(const Gf& F, const Coeffs& a);
Int evalAtZero(const Coeffs& a);

/// Monic irreducible factorization by trial division over enumerated monic
/// polynomials in degree order; returns (factor, multiplicity) pairs sorted
/// by (degree, coefficient order), plus the leading unit.
struct Factored {
  Int unit = 1;
  std::vector<std::pair<Coeffs, Int>> factors;
};
Factored factor(const Gf& F, const Coeffs& a);
bool isIrreducible(const Gf& F, const Coeffs& a);

/// Square-free test via gcd(f, f'); in characteristic p, f' = 0 means f is a
/// p-th power (finite fields are perfect), hence not square-free unless
/// constant.
bool squarefreeInFx(const Gf& F, const Coeffs& a);

std::vector<Coeffs> allMonicOfDegree(const Gf& F, Int d);

}  // namespace fpoly

}  // namespace monoidlab

#endif
