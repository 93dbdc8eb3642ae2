// SPDX-License-Identifier: Apache-2.0
#ifndef MONOIDLAB_SUBMONOID_HPP
#define MONOIDLAB_SUBMONOID_HPP

#include <array>
#include <map>
#include <memory>
#include <vector>

#include "monoidlab/families.hpp"

namespace monoidlab {

/// Harness for a finitely generated submonoid M of the factorial ambient
/// H = N^n (both reduced, so M^x = H^x automatically). elementBound is the
/// norm ball for quantified elements of H; products formed during checks may
/// use up to productBound (default 3x).
struct SubmonoidContext {
  std::shared_ptr<const FreeCommutative> ambient;
  std::vector<std::vector<Int>> generators;
  Int elementBound = 6;
  Int productBound = 0;  // 0 = 3 * elementBound

  Int products() const { return productBound > 0 ? productBound : 3 * elementBound; }
};

SubmonoidContext makeContext(Int rank, std::vector<std::vector<Int>> generators,
                             Int elementBound = 6, Int productBound = 0);

/// Exact membership h ∈ M with generator-multiplicity witness.
Verdict membership(const SubmonoidContext& ctx, const Element& h);

/// Exact atoms of M with norm <= elementBound: members with no splitting into
/// two nontrivial members.
std::vector<Element> atomsOfM(const SubmonoidContext& ctx);

/// The four submonoid transfer properties:
///   AtomsSquarefree        — every atom of M is square-free in H
///   SquarefreesSquarefree  — every square-free element of M is square-free in H
///   SquarePartsInM         — a^2 b ∈ M (b square-free) implies a, b ∈ M
///   SquarePartsInMWeak     — a^2 b ∈ M (b square-free) implies a, ab ∈ M
enum class TransferProperty { AtomsSquarefree, SquarefreesSquarefree, SquarePartsInM,
                              SquarePartsInMWeak };

/// Bounded exhaustive check. Refuted carries the offending tuple, minimal in
/// graded-lex scan order so recorded counterexamples reproduce exactly. The
/// two square-free-set properties are exact on the ball (atom/square-free
/// sets of N^n are exact), reported as Proven at that bound; the two
/// quantified implications report NotFoundUpTo on a clean pass.
Verdict checkTransfer(const SubmonoidContext& ctx, TransferProperty p);

/// Five equivalent forms of the square-extraction property
/// (SquarePartsInMWeak): (1) a^2 b ∈ M => a, ab ∈ M; (2) binary-tower
/// membership cascades; (3) pairwise-rpr staircase suffixes; (4) square-free
/// divisor chains split; (5) ab ∈ M with a | b^n => a, b ∈ M.
Verdict squareExtractionCondition(const SubmonoidContext& ctx, int cond);

/// Eight equivalent forms of square-free inheritance (S(M) ⊂ S(H)):
/// (1) inheritance itself; (2) atoms square-free + rpr transfer;
/// (3) atoms square-free + non-associated atoms rpr in H; (4) M is freely
/// generated by pairwise-rpr square-free elements; (5) staircase products
/// split; (6) binary digit slices of members are members; (7) binary towers
/// split; (8) a^2 b ∈ M => a, b ∈ M.
Verdict squarefreeInheritanceCondition(const SubmonoidContext& ctx, int cond);

/// Runs a whole condition suite; the equivalence predicts all-or-none
/// refutation, so `consistent` is the harness's own pass/fail.
struct ConditionSuiteReport {
  std::vector<Verdict> conditions;
  bool consistent = false;
  int refutedCount = 0;
};

ConditionSuiteReport squareExtractionReport(const SubmonoidContext& ctx);
ConditionSuiteReport squarefreeInheritanceReport(const SubmonoidContext& ctx);

/// root closed: a^n ∈ M => a ∈ M; quotient closed: every ambient element
/// expressible as m1 - m2 lies in M; divisor closed: ab ∈ M => a, b ∈ M
/// (checked jointly with its square-free-parts form — the two verdicts must
/// agree on every context).
struct ClosureReport {
  Verdict rootClosed, quotientClosed, divisorClosed, divisorClosedSqfreeForm;
};

ClosureReport closureChecks(const SubmonoidContext& ctx);

}  // namespace monoidlab

#endif
