// SPDX-License-Identifier: Apache-2.0
#ifndef MONOIDLAB_LAB_HPP
#define MONOIDLAB_LAB_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monoidlab/predicates.hpp"

namespace monoidlab {

// ---------------------------------------------------------------------------
// Reports: a line-oriented key/value + array format with stable field order,
// plus a human-readable rendering with identical verdicts.

struct Report {
  std::vector<std::pair<std::string, std::string>> fields;

  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, Int value);
  void section(const std::string& name);
  std::string structured() const;  ///< machine-readable, byte-stable
  std::string text() const;        ///< human-readable
};

std::string verdictLine(const Monoid& m, const Verdict& v);

// ---------------------------------------------------------------------------
// Classification rows

/// Value of a paired property column: 2 = both hold, 1 = only the weaker
/// (atomicity / decomposition), 0 = neither; nullopt when truncated verdicts
/// leave it undetermined. qualifier records how it was decided.
struct PairedValue {
  std::optional<int> value;
  std::string qualifier;  // "exact", "claimed", "bounded"
};

/// One classification row: the ACCP/atomicity value, the GCD/decomposition
/// value, and the six scheme verdicts at a bound.
struct ClassificationRow {
  std::string label;
  Verdict atomic, accp, gcd, decomposition;
  std::map<Scheme, Verdict> schemes;
  Int bound = 0;

  PairedValue accpAtm() const;
  PairedValue gcdDecomp() const;
};

ClassificationRow classify(const Monoid& m, Int bound);

/// Proven iff every row's determined entries fit the implication diagram
/// ((ii)=>(iii)=>(i), (iv)=>(i), (ii)=>(v), (iv)=>(vi), ACCP=>(iv),
/// atomic=>(i), plus the decomposition/GCD equivalences and the rule that
/// atomic+decomposition without ACCP+GCD is impossible). Refuted pinpoints
/// the row and arrow. Truncated entries never participate.
Verdict tableConsistency(const std::vector<ClassificationRow>& rows);

// ---------------------------------------------------------------------------
// Square-free counting

struct CountResult {
  std::optional<Int> count;      ///< nullopt = not finitely determined
  std::vector<Element> set;      ///< the square-free elements found
  bool exact = false;            ///< true when S(H) is provably the whole set
  std::string note;
};

/// Exact for shifted numerical carriers (S(H) is contained in
/// [0, 2*min-nonzero + threshold): beyond that frontier every element is a
/// square times a carrier element); analytic for Q≥0; bounded otherwise.
CountResult countSquarefree(const Monoid& m, Int bound);

/// The recorded construction with exactly n square-free elements (n >= 1):
/// n=1 -> {0}; n=2 -> N≥0; n=3 -> N≥2 ∪ {0}; n=2m (m>=2) -> N≥2m ∪ {0,m};
/// n=2m-1 (m>=3) -> N≥2m-1 ∪ {0,m}.
FamilySpec witnessForCount(Int n);

// ---------------------------------------------------------------------------
// Catalog: recorded expected facts about the bundled example monoids, loaded
// from a data file so coverage is auditable. Every mismatch is a failure
// entry in the report.

struct CatalogResult {
  Report report;
  int failures = 0;
  int checks = 0;
};

CatalogResult runCatalog(const std::string& dataDir);

/// Rows produced while running the catalog (fed to tableConsistency).
std::vector<ClassificationRow> catalogRows(const std::string& dataDir);

}  // namespace monoidlab

#endif
