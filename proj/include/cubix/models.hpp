#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubix/structure.hpp"

namespace cubix {

/// Thin base category: at most one arrow between any two objects, encoded as
/// a reachability matrix. Bases must be reflexive and transitive so that
/// cube pastings stay inside the labeling set.
struct ThinCategory {
  std::size_t objects = 0;
  std::vector<std::vector<char>> hom;  // hom[a][b] != 0  iff  a -> b exists

  bool arrow(std::size_t a, std::size_t b) const { return hom[a][b] != 0; }
};

enum class BaseKind { pair_groupoid, chain_poset, discrete, cyclic_group_thin };

BaseKind parse_base_kind(const std::string& name);
std::string to_string(BaseKind kind);

/// pair_groupoid: all arrows. chain_poset: a -> b iff a <= b. discrete:
/// identities only. cyclic_group_thin: the thin quotient of a cyclic group,
/// i.e. a single object with its identity.
ThinCategory base_category(BaseKind kind, std::size_t size);

std::size_t default_cell_budget();  // CUBIX_CELL_BUDGET, else 100000

/// Cube nerve of a thin category: cells are the functorial labelings of the
/// n-cube (vertex maps whose 0->1 edges are arrows), faces restrict a
/// coordinate, compositions paste along a coordinate, symmetries transpose
/// adjacent coordinates and connections fold with min/max. The result is
/// fully validated; construction throws if the labeling count would exceed
/// the budget.
SingleSetStructure cube_nerve(const ThinCategory& base, int dim,
                              bool with_connections = true,
                              std::size_t budget = default_cell_budget(),
                              int threads = 1);

SingleSetStructure cube_nerve(BaseKind kind, std::size_t size, int dim,
                              bool with_connections = true,
                              std::size_t budget = default_cell_budget(),
                              int threads = 1);

/// Address of one table entry of a single-set structure.
struct TableLocation {
  enum class Table { face, sym, inv_sym, conn, comp };
  Table table{};
  int dir = 0;
  Sign sign = Sign::minus;  // face / conn only
  Cell x = no_cell;
  Cell y = no_cell;  // comp only
};

std::string to_string(const TableLocation& loc, const SingleSetStructure& s);

struct Mutation {
  TableLocation loc;
  Cell value = no_cell;  // replacement entry, differs from the original
};

/// Returns a copy with one table entry overwritten (comp mutations keep the
/// pair domain and only change the composite value). The copy is unvalidated.
SingleSetStructure mutate(const SingleSetStructure& s, const TableLocation& loc,
                          Cell value);

/// Samples distinct corruptions of law-constrained entries: every face and
/// composition entry, plus sym/inv_sym/conn entries on the subsets the
/// axioms constrain. Deterministic in (structure, count, seed).
std::vector<Mutation> sample_mutations(const SingleSetStructure& s,
                                       std::size_t count, std::uint64_t seed);

}  // namespace cubix
