#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cubix/structure.hpp"
#include "cubix/types.hpp"

namespace cubix {

/// Graded cell id: the ordinal alone is meaningless without its level, so
/// the two travel together and every table access re-checks them.
struct CCell {
  int level = -1;
  Cell idx = no_cell;

  friend bool operator==(const CCell&, const CCell&) = default;
  friend auto operator<=>(const CCell&, const CCell&) = default;
};

/// Graded cubical structure: levels C_0..C_n with per-level faces (level k
/// has face and composition directions 1..k), degeneracies C_{k-1} -> C_k,
/// optional connections C_{k-1} -> C_k for directions 1..k-1, and partial
/// compositions per direction. All maps are total tables except comp.
struct ClassicalStructure {
  int dim = 0;
  bool validated = false;
  std::vector<std::vector<std::string>> names;  // names[k], k = 0..dim

  // cface[k][i-1][sign]: C_k -> C_{k-1} for 1 <= i <= k
  std::vector<std::vector<std::array<std::vector<Cell>, 2>>> cface;
  // deg[k][i-1]: C_{k-1} -> C_k for 1 <= i <= k
  std::vector<std::vector<std::vector<Cell>>> deg;
  // cconn[k][i-1][sign]: C_{k-1} -> C_k for 1 <= i <= k-1; empty when absent
  std::vector<std::vector<std::array<std::vector<Cell>, 2>>> cconn;
  // ccomp[k][i-1]: partial C_k x C_k -> C_k for 1 <= i <= k
  std::vector<std::vector<CompTable>> ccomp;

  std::size_t size(int k) const { return names[std::size_t(k)].size(); }
  bool has_connections() const { return !cconn.empty(); }
  const std::string& name(CCell a) const { return names[a.level][a.idx]; }

  /// face(i, a, x): boundary of x in direction i (1 <= i <= x.level).
  CCell face(int i, Sign a, CCell x) const;
  /// degenerate(i, x): the degenerate cell one level above x, direction
  /// 1 <= i <= x.level + 1.
  CCell degenerate(int i, CCell x) const;
  /// connection(i, a, x): the folded cell one level above x, direction
  /// 1 <= i <= x.level.
  CCell connection(int i, Sign a, CCell x) const;

  bool composable(int i, CCell a, CCell b) const;
  std::optional<CCell> comp(int i, CCell a, CCell b) const;

  /// Allocates zeroed tables; counts[k] is |C_k|. Names default to
  /// "k<level>:c<ordinal>".
  void init_levels(int dim, const std::vector<std::size_t>& counts,
                   bool with_connections);
  void set_comp(int i, CCell a, CCell b, CCell c);
  void seal();

  std::pair<const std::pair<Cell, Cell>*, const std::pair<Cell, Cell>*>
  comp_pairs_of(int i, CCell a) const;

private:
  void check_ccell(CCell a, const char* op) const;
};

/// Exhaustive run of the graded axioms (ids CC.*) and, when connections are
/// present, the graded connection axioms (ids CCG.*). Includes the
/// composition-domain condition (CC.0-locality). Degeneracy injectivity is a
/// loader invariant, not a report item; a break in it still surfaces here
/// through the face/degeneracy identity.
CheckReport check_classical_axioms(const ClassicalStructure& c, int threads = 1);

/// The directed inverse of a in composition direction i at a's level:
/// composing either way yields the degenerate image of the matching face.
/// Two distinct witnesses raise StructureError(inconsistency).
std::optional<CCell> R_inverse(const ClassicalStructure& c, int i, CCell a);

/// True iff every face of a in directions j != i has the directed inverse
/// its level demands: direction i-1 below the omitted direction, i above it.
bool classical_shell_invertible(const ClassicalStructure& c, int i, CCell a);

/// Graded divisibility above p (axiom id CINV.np), mirroring check_np level
/// by level with the graded shell convention.
CheckReport check_classical_np(const ClassicalStructure& c, int p,
                               int threads = 1);

/// Runs the axiom suite; on a clean pass flags the structure validated.
CheckReport validate(ClassicalStructure& c, int threads = 1);

}  // namespace cubix
