#include "cubix/structure.hpp"

#include <algorithm>
#include <sstream>

namespace cubix {

std::string to_string(const Generator& g) {
  std::ostringstream os;
  switch (g.kind) {
    case Generator::Kind::face: os << "face_" << g.index << sign_char(g.sign); break;
    case Generator::Kind::sym: os << "sym_" << g.index; break;
    case Generator::Kind::inv_sym: os << "inv_sym_" << g.index; break;
    case Generator::Kind::conn: os << "conn_" << g.index << sign_char(g.sign); break;
  }
  return os.str();
}

void SingleSetStructure::check_dir(int i, int hi, const char* generator) const {
  if (i < 1 || i > hi) {
    std::ostringstream os;
    os << generator << "_" << i << ": direction out of range (valid 1.." << hi << ")";
    throw StructureError(StructureError::Kind::range, os.str());
  }
}

void SingleSetStructure::check_cell(Cell x, const char* generator) const {
  if (x >= size()) {
    std::ostringstream os;
    os << generator << ": cell " << x << " out of range (carrier size " << size() << ")";
    throw StructureError(StructureError::Kind::range, os.str());
  }
}

Cell SingleSetStructure::face(int i, Sign a, Cell x) const {
  check_dir(i, dim, "face");
  check_cell(x, "face");
  return face_[i - 1][sign_index(a)][x];
}

Cell SingleSetStructure::sym(int i, Cell x) const {
  check_dir(i, dim - 1, "sym");
  check_cell(x, "sym");
  return sym_[i - 1][x];
}

Cell SingleSetStructure::inv_sym(int i, Cell x) const {
  check_dir(i, dim - 1, "inv_sym");
  check_cell(x, "inv_sym");
  return inv_sym_[i - 1][x];
}

Cell SingleSetStructure::conn(int i, Sign a, Cell x) const {
  if (!has_connections())
    throw StructureError(StructureError::Kind::config,
                         "conn: structure has no connection tables");
  check_dir(i, dim - 1, "conn");
  check_cell(x, "conn");
  return conn_[i - 1][sign_index(a)][x];
}

bool SingleSetStructure::composable(int i, Cell x, Cell y) const {
  check_dir(i, dim, "comp");
  check_cell(x, "comp");
  check_cell(y, "comp");
  return comp_[i - 1].map.count(pair_key(x, y)) != 0;
}

std::optional<Cell> SingleSetStructure::comp(int i, Cell x, Cell y) const {
  check_dir(i, dim, "comp");
  check_cell(x, "comp");
  check_cell(y, "comp");
  auto it = comp_[i - 1].map.find(pair_key(x, y));
  if (it == comp_[i - 1].map.end()) return std::nullopt;
  return it->second;
}

bool SingleSetStructure::is_fixed(int i, Cell x) const {
  return face(i, Sign::minus, x) == x;
}

int SingleSetStructure::dimension(Cell x) const {
  int d = 0;
  for (int i = 1; i <= dim; ++i)
    if (!is_fixed(i, x)) ++d;
  return d;
}

int SingleSetStructure::level(Cell x) const {
  for (int i = dim; i >= 1; --i)
    if (!is_fixed(i, x)) return i;
  return 0;
}

void SingleSetStructure::init_tables(int n, std::size_t cells, bool with_connections) {
  dim = n;
  names.resize(cells);
  for (std::size_t c = 0; c < cells; ++c) names[c] = "c" + std::to_string(c);
  face_.assign(n, {});
  for (auto& t : face_) t[0].assign(cells, 0), t[1].assign(cells, 0);
  int ns = n > 1 ? n - 1 : 0;
  sym_.assign(ns, std::vector<Cell>(cells, 0));
  inv_sym_.assign(ns, std::vector<Cell>(cells, 0));
  if (with_connections) {
    conn_.assign(ns, {});
    for (auto& t : conn_) t[0].assign(cells, 0), t[1].assign(cells, 0);
  } else {
    conn_.clear();
  }
  comp_.assign(n, {});
}

void SingleSetStructure::set_comp(int i, Cell x, Cell y, Cell z) {
  check_dir(i, dim, "comp");
  comp_[i - 1].map[pair_key(x, y)] = z;
}

void SingleSetStructure::seal() {
  for (auto& t : comp_) {
    t.pairs.clear();
    t.pairs.reserve(t.map.size());
    for (const auto& [k, z] : t.map)
      t.pairs.emplace_back(Cell(k >> 32), Cell(k & 0xffffffffu));
    std::sort(t.pairs.begin(), t.pairs.end());
  }
}

std::pair<const std::pair<Cell, Cell>*, const std::pair<Cell, Cell>*>
SingleSetStructure::comp_pairs_of(int i, Cell x) const {
  check_dir(i, dim, "comp");
  const auto& pairs = comp_[i - 1].pairs;
  auto lo = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(x, Cell(0)));
  auto hi = std::lower_bound(pairs.begin(), pairs.end(),
                             std::make_pair(x, no_cell));
  return {pairs.data() + (lo - pairs.begin()), pairs.data() + (hi - pairs.begin())};
}

Cell apply_generator(const SingleSetStructure& s, const Generator& g, Cell x) {
  switch (g.kind) {
    case Generator::Kind::face: return s.face(g.index, g.sign, x);
    case Generator::Kind::sym: return s.sym(g.index, x);
    case Generator::Kind::inv_sym: return s.inv_sym(g.index, x);
    case Generator::Kind::conn: return s.conn(g.index, g.sign, x);
  }
  throw StructureError(StructureError::Kind::range, "apply_generator: bad kind");
}

bool fixed_all(const SingleSetStructure& s, const std::vector<int>& dirs, Cell x) {
  for (int i : dirs)
    if (!s.is_fixed(i, x)) return false;
  return true;
}

std::vector<Cell> fixed_set(const SingleSetStructure& s, const std::vector<int>& dirs) {
  std::vector<Cell> out;
  for (Cell x = 0; x < s.size(); ++x)
    if (fixed_all(s, dirs, x)) out.push_back(x);
  return out;
}

FaceBuckets face_buckets(const SingleSetStructure& s, int i, Sign a) {
  FaceBuckets b;
  for (Cell x = 0; x < s.size(); ++x) b[s.face(i, a, x)].push_back(x);
  return b;
}

SingleSetStructure truncate(const SingleSetStructure& s, int m) {
  if (m < 0 || m > s.dim)
    throw StructureError(StructureError::Kind::range,
                         "truncate: level " + std::to_string(m) + " out of range (valid 0.." +
                             std::to_string(s.dim) + ")");
  std::vector<int> above;
  for (int i = m + 1; i <= s.dim; ++i) above.push_back(i);
  std::vector<Cell> carrier = fixed_set(s, above);
  std::vector<Cell> old_to_new(s.size(), no_cell);
  for (std::size_t k = 0; k < carrier.size(); ++k) old_to_new[carrier[k]] = Cell(k);

  SingleSetStructure t;
  t.init_tables(m, carrier.size(), s.has_connections() && m > 1);
  for (std::size_t k = 0; k < carrier.size(); ++k) t.names[k] = s.names[carrier[k]];

  // Total tables; escaped off-type entries fall back to the identity.
  auto remap = [&](Cell old_value, Cell self) {
    Cell v = old_to_new[old_value];
    return v == no_cell ? self : v;
  };
  for (std::size_t k = 0; k < carrier.size(); ++k) {
    Cell x = carrier[k];
    for (int i = 1; i <= m; ++i) {
      t.face_[i - 1][0][k] = remap(s.face(i, Sign::minus, x), Cell(k));
      t.face_[i - 1][1][k] = remap(s.face(i, Sign::plus, x), Cell(k));
    }
    for (int i = 1; i + 1 <= m; ++i) {
      t.sym_[i - 1][k] = remap(s.sym(i, x), Cell(k));
      t.inv_sym_[i - 1][k] = remap(s.inv_sym(i, x), Cell(k));
      if (t.has_connections()) {
        t.conn_[i - 1][0][k] = remap(s.conn(i, Sign::minus, x), Cell(k));
        t.conn_[i - 1][1][k] = remap(s.conn(i, Sign::plus, x), Cell(k));
      }
    }
  }
  // Composition entries survive when both arguments and the value do.
  for (int i = 1; i <= m; ++i) {
    for (const auto& [key, z] : s.comp_[i - 1].map) {
      Cell x = old_to_new[Cell(key >> 32)];
      Cell y = old_to_new[Cell(key & 0xffffffffu)];
      Cell zz = old_to_new[z];
      if (x != no_cell && y != no_cell && zz != no_cell) t.set_comp(i, x, y, zz);
    }
  }
  t.seal();
  t.validated = s.validated;
  return t;
}

}  // namespace cubix
