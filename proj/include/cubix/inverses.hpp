#pragma once

#include <optional>

#include "cubix/structure.hpp"
#include "cubix/types.hpp"

namespace cubix {

/// Witness that `inverse` undoes `cell` in `direction`: the two composites
/// exist and collapse to the matching faces of `cell`. A certificate is only
/// handed out with all four evidence flags true.
struct InverseCertificate {
  int direction = 0;
  Cell cell = no_cell;
  Cell inverse = no_cell;
  bool composable_fwd = false;  // cell composes with inverse
  bool collapses_fwd = false;   // cell . inverse == face(direction, -, cell)
  bool composable_bwd = false;  // inverse composes with cell
  bool collapses_bwd = false;   // inverse . cell == face(direction, +, cell)

  bool valid() const {
    return composable_fwd && collapses_fwd && composable_bwd && collapses_bwd;
  }
};

/// Scans for the directed inverse of x in direction i. Inverses are unique
/// on a structure whose category laws hold; two distinct witnesses raise
/// StructureError(inconsistency).
std::optional<InverseCertificate> ri_inverse(const SingleSetStructure& s,
                                             int i, Cell x);

/// True iff every face of x in directions 1..k other than i has a directed
/// inverse in direction i. Requires x fixed above level k and 1 <= i <= k
/// (StructureError(domain) otherwise).
bool shell_invertible(const SingleSetStructure& s, int k, int i, Cell x);

/// Divisibility above p: for every level k in p+1..n, every direction
/// i <= k and every cell fixed above k whose shell is invertible in
/// direction i, the cell itself must have a directed inverse. Missing
/// inverses are reported under axiom id INV.np with bindings (k, i, cell).
CheckReport check_np(const SingleSetStructure& s, int p, int threads = 1);

/// Builds the directed inverse of x in direction i recursively from
/// inverses of its faces: each face is raised through the symmetry ladder,
/// inverted recursively (in direction i-1 when the face direction lies
/// below i), lowered back and audited; the unique cell consistent with the
/// assembled boundary and the two composition equations is returned as a
/// certificate. A missing or failing face inverse means the structure is
/// not divisible above 0; the error names the offending face.
InverseCertificate synthesize_inverse_dim0(const SingleSetStructure& s, int i,
                                           Cell x);

/// Compatibility of directed inverses with the signature: faces, composites,
/// symmetry and connection images of invertible cells are invertible with
/// the expected inverses, and inversion preserves the level. Failures are
/// theorem violations (axiom ids INVLEM.*).
CheckReport check_inverse_lemmas(const SingleSetStructure& s, int threads = 1);

}  // namespace cubix
