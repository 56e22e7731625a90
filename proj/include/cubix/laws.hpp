#pragma once

#include "cubix/structure.hpp"
#include "cubix/types.hpp"

namespace cubix {

// Law suites over a finite single-set structure. Every suite enumerates the
// ground instances of its axioms (guards filter the quantifier domains),
// counts them, and reports each failed instance as a Violation carrying a
// stable axiom identifier; the identifier table lives in the README.
// Reports are deterministic and independent of the thread count: instances
// are partitioned into contiguous chunks, per-chunk results are merged in
// chunk order, and violations are sorted canonically at the end.

/// Per-direction category laws: associativity (definedness equivalence and
/// value equality), units, locality of the composition domain, plus the
/// absorption/fixedness consequences checked as sanity conditions.
CheckReport check_category_axioms(const SingleSetStructure& s, int threads = 1);

/// Cross-direction cubical laws: face commutation, faces of composites,
/// interchange (enumerated over composable quadruples), symmetry typing,
/// bijectivity, compatibility and fixedness.
CheckReport check_cubical_axioms(const SingleSetStructure& s, int threads = 1);

/// Connection laws (faces, corner decompositions, fixedness, zigzags,
/// commutation, symmetry shift). Skipped with a note when the structure has
/// no connection tables.
CheckReport check_connection_axioms(const SingleSetStructure& s, int threads = 1);

/// Consequences of the axioms, checked exhaustively; failures are marked
/// Severity::theorem_violation because on an axiom-clean structure they can
/// only mean a checker bug. Includes the symmetry/face interplay, the
/// inverse-symmetry laws, the mixed-sign connection faces, the alternative
/// corner forms, and uniqueness of directed inverses.
CheckReport check_derived_lemmas(const SingleSetStructure& s, int threads = 1);

/// Runs every applicable suite; on a clean pass flags the structure validated.
CheckReport validate(SingleSetStructure& s, int threads = 1);

}  // namespace cubix
