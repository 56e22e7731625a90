#pragma once

#include <vector>

#include "cubix/classical.hpp"
#include "cubix/structure.hpp"
#include "cubix/types.hpp"

namespace cubix {

/// Per-level carrier maps of a single-set structure: carrier[k] lists the
/// cells fixed in every direction above k in ascending order, to_level[k]
/// inverts that list (no_cell for cells outside the level).
struct LevelIndex {
  std::vector<std::vector<Cell>> carrier;
  std::vector<std::vector<Cell>> to_level;
};

LevelIndex level_index(const SingleSetStructure& s);

/// Graded presentation of a validated single-set structure. Level k collects
/// the cells fixed above k; a level-k face composes the direction-i face with
/// the symmetry ladder up to direction k-1, a degeneracy rides the reverse
/// ladder back down, a connection folds on top of that ladder, and
/// compositions restrict level by level. The output is re-validated and the
/// call aborts if that fails.
ClassicalStructure fc(const SingleSetStructure& s, int threads = 1);

/// Single-set structure on the top level of a validated graded structure:
/// faces re-embed through the matching degeneracy, symmetries combine a
/// negative face with the degeneracy one direction over, connections ride on
/// their own face, and compositions are the top-level ones. The output is
/// re-validated and the call aborts if that fails.
SingleSetStructure fs(const ClassicalStructure& c, int threads = 1);

/// Compares a structure against the round trip fs(fc(.)) on the shared
/// carrier (ids MU.*): faces and compositions must agree exactly; symmetries
/// and connections agree after collapsing onto the matching boundary, and
/// exactly on the cells fixed in their direction.
CheckReport check_mu(const SingleSetStructure& s, int threads = 1);

/// Compares a graded structure against the round trip fc(fs(.)) (ids ETA.*).
/// Level-k cells are padded with the diagonal degeneracies; that padding must
/// be a bijection onto the round-trip level, undone by the diagonal negative
/// faces, and compatible with faces, degeneracies, connections and
/// compositions. Degeneracy injectivity is checked first: without it the
/// padded representatives do not determine classes, so the round trip is
/// skipped and only the well-definedness violations are reported.
CheckReport check_eta(const ClassicalStructure& c, int threads = 1);

/// Checks that directed invertibility survives translation (ids ITR.*):
/// every direction-i invertible cell on a level maps to a graded cell whose
/// graded inverse is the image of its inverse; every graded inverse comes
/// back through the top-level collapse as a single-set inverse; and
/// divisibility above p holds on both sides or on neither.
CheckReport check_inverse_transport(const SingleSetStructure& s, int p,
                                    int threads = 1);

}  // namespace cubix
