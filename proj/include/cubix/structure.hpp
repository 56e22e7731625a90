#pragma once

#include <array>
#include <optional>
#include <unordered_map>
#include <utility>

#include "cubix/types.hpp"

namespace cubix {

/// One generator symbol of the single-set signature.
struct Generator {
  enum class Kind : std::uint8_t { face, sym, inv_sym, conn };
  Kind kind;
  int index = 1;            // direction, 1-based
  Sign sign = Sign::minus;  // used by face and conn only
};

std::string to_string(const Generator& g);

/// Partial binary operation on cell ordinals with its domain frozen into a
/// sorted pair list (see seal functions) for deterministic iteration.
struct CompTable {
  std::unordered_map<std::uint64_t, Cell> map;  // pair_key(x,y) -> composite
  std::vector<std::pair<Cell, Cell>> pairs;     // sorted domain
};

/// Finite single-set cubical structure: one carrier holding the cells of
/// every dimension, with total face/symmetry/connection tables and partial
/// composition tables, all extensional (indexed by cell ordinal).
///
/// Directions are 1-based: face and comp run over 1..dim, sym/inv_sym/conn
/// over 1..dim-1. Connections are optional (conn_ empty when absent).
/// Entries of sym/inv_sym/conn at off-type arguments are stored but carry no
/// meaning; the law suites only constrain typed arguments.
struct SingleSetStructure {
  int dim = 0;
  std::vector<std::string> names;
  bool validated = false;  // set by validate() after every suite passes clean

  std::vector<std::array<std::vector<Cell>, 2>> face_;  // face_[i-1][sign]
  std::vector<std::vector<Cell>> sym_;                  // sym_[i-1]
  std::vector<std::vector<Cell>> inv_sym_;
  std::vector<std::array<std::vector<Cell>, 2>> conn_;  // empty when absent

  std::vector<CompTable> comp_;  // comp_[i-1]

  std::size_t size() const { return names.size(); }
  bool has_connections() const { return !conn_.empty(); }

  Cell face(int i, Sign a, Cell x) const;
  Cell sym(int i, Cell x) const;
  Cell inv_sym(int i, Cell x) const;
  Cell conn(int i, Sign a, Cell x) const;

  /// Membership in the composition table's domain (not the face condition;
  /// on valid structures the two coincide).
  bool composable(int i, Cell x, Cell y) const;
  std::optional<Cell> comp(int i, Cell x, Cell y) const;

  bool is_fixed(int i, Cell x) const;  // face(i,-,x) == x
  int dimension(Cell x) const;         // number of non-fixed directions
  int level(Cell x) const;             // largest non-fixed direction, 0 if none

  /// Allocates zeroed tables for the given carrier size; names default to
  /// "c0", "c1", ...
  void init_tables(int dim, std::size_t cells, bool with_connections);
  void set_comp(int i, Cell x, Cell y, Cell z);
  /// Freezes the comp domains into sorted pair lists; call after building.
  void seal();

  /// Defined pairs (x, .) in direction i, ascending; valid after seal().
  std::pair<const std::pair<Cell, Cell>*, const std::pair<Cell, Cell>*>
  comp_pairs_of(int i, Cell x) const;

private:
  void check_dir(int i, int hi, const char* generator) const;
  void check_cell(Cell x, const char* generator) const;
};

constexpr std::uint64_t pair_key(Cell x, Cell y) {
  return (std::uint64_t(x) << 32) | y;
}

Cell apply_generator(const SingleSetStructure& s, const Generator& g, Cell x);

/// Cells fixed by every direction in dirs (1-based); empty dirs = all cells.
std::vector<Cell> fixed_set(const SingleSetStructure& s, const std::vector<int>& dirs);
bool fixed_all(const SingleSetStructure& s, const std::vector<int>& dirs, Cell x);

/// Cells grouped by their (i, a) face value; bucket vectors ascending.
using FaceBuckets = std::unordered_map<Cell, std::vector<Cell>>;
FaceBuckets face_buckets(const SingleSetStructure& s, int i, Sign a);

/// Restriction to the cells fixed in every direction above m, with tables cut
/// to directions <= m (comp, face) and <= m-1 (sym, inv_sym, conn). Typed
/// entries always survive; an off-type symmetry/connection entry whose value
/// escapes the carrier is redirected to the identity, which keeps truncation
/// idempotent and never affects entries the law suites constrain.
SingleSetStructure truncate(const SingleSetStructure& s, int m);

}  // namespace cubix
