#include "cubix/models.hpp"

#include <cstdlib>
#include <random>
#include <sstream>
#include <unordered_map>

#include "cubix/laws.hpp"

namespace cubix {

namespace {

std::string object_label(std::size_t k, std::size_t total) {
  if (total <= 26) return std::string(1, char('a' + k));
  return "o" + std::to_string(k);
}

[[noreturn]] void config_error(const std::string& msg) {
  throw StructureError(StructureError::Kind::config, msg);
}

}  // namespace

BaseKind parse_base_kind(const std::string& name) {
  if (name == "pair_groupoid") return BaseKind::pair_groupoid;
  if (name == "chain_poset") return BaseKind::chain_poset;
  if (name == "discrete") return BaseKind::discrete;
  if (name == "cyclic_group_thin") return BaseKind::cyclic_group_thin;
  config_error("unknown base kind '" + name + "'");
}

std::string to_string(BaseKind kind) {
  switch (kind) {
    case BaseKind::pair_groupoid: return "pair_groupoid";
    case BaseKind::chain_poset: return "chain_poset";
    case BaseKind::discrete: return "discrete";
    case BaseKind::cyclic_group_thin: return "cyclic_group_thin";
  }
  return "?";
}

ThinCategory base_category(BaseKind kind, std::size_t size) {
  if (size == 0)
    throw StructureError(StructureError::Kind::range,
                         "base category needs at least one object");
  ThinCategory cat;
  // The thin quotient of a cyclic group identifies all arrows on its single
  // object, so the size parameter only has to be positive.
  cat.objects = kind == BaseKind::cyclic_group_thin ? 1 : size;
  cat.hom.assign(cat.objects, std::vector<char>(cat.objects, 0));
  for (std::size_t a = 0; a < cat.objects; ++a)
    for (std::size_t b = 0; b < cat.objects; ++b) {
      bool arrow = false;
      switch (kind) {
        case BaseKind::pair_groupoid: arrow = true; break;
        case BaseKind::chain_poset: arrow = a <= b; break;
        case BaseKind::discrete: arrow = a == b; break;
        case BaseKind::cyclic_group_thin: arrow = true; break;
      }
      cat.hom[a][b] = arrow ? 1 : 0;
    }
  return cat;
}

std::size_t default_cell_budget() {
  if (const char* env = std::getenv("CUBIX_CELL_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return std::size_t(v);
  }
  return 100000;
}

SingleSetStructure cube_nerve(const ThinCategory& base, int dim,
                              bool with_connections, std::size_t budget,
                              int threads) {
  if (dim < 1) config_error("nerve dimension must be at least 1");
  if (dim >= 20) config_error("nerve dimension too large");
  const std::size_t m = base.objects;
  if (m == 0) config_error("base category has no objects");
  for (std::size_t a = 0; a < m; ++a) {
    if (!base.arrow(a, a)) config_error("base category is missing an identity");
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        if (base.arrow(a, b) && base.arrow(b, c) && !base.arrow(a, c))
          config_error("base category is not transitive");
  }

  const int n = dim;
  const std::size_t V = std::size_t(1) << n;
  std::size_t upper = 1;
  for (std::size_t v = 0; v < V; ++v) {
    if (upper > budget / m + 1) upper = budget + 1;
    else upper *= m;
    if (upper > budget)
      config_error("labeling bound " + std::to_string(m) + "^" +
                   std::to_string(V) + " exceeds cell budget " +
                   std::to_string(budget));
  }

  // Vertex v encodes (t_1 .. t_n) with t_1 as the most significant bit, so
  // coordinate i lives at bit position n - i.
  auto bit_of = [n](int i) { return std::size_t(1) << (n - i); };

  // Enumerate functorial labelings in lexicographic order.
  std::vector<std::vector<std::uint8_t>> codes;
  std::vector<std::uint8_t> lab(V, 0);
  auto valid = [&]() {
    for (std::size_t v = 0; v < V; ++v)
      for (int p = 0; p < n; ++p) {
        std::size_t b = std::size_t(1) << p;
        if ((v & b) == 0 && !base.arrow(lab[v], lab[v | b])) return false;
      }
    return true;
  };
  for (;;) {
    if (valid()) codes.push_back(lab);
    bool rolled_over = false;
    std::size_t pos = V;
    for (;;) {
      if (pos == 0) {
        rolled_over = true;
        break;
      }
      --pos;
      if (std::size_t(lab[pos]) + 1 < m) {
        ++lab[pos];
        break;
      }
      lab[pos] = 0;
    }
    if (rolled_over) break;
  }
  if (codes.empty()) config_error("base category produced no labelings");

  std::unordered_map<std::string, Cell> index;
  index.reserve(codes.size());
  auto key = [](const std::vector<std::uint8_t>& c) {
    return std::string(c.begin(), c.end());
  };
  for (std::size_t k = 0; k < codes.size(); ++k)
    index.emplace(key(codes[k]), Cell(k));
  auto lookup = [&](const std::vector<std::uint8_t>& c) {
    auto it = index.find(key(c));
    if (it == index.end())
      throw StructureError(StructureError::Kind::inconsistency,
                           "pasting left the labeling set");
    return it->second;
  };

  SingleSetStructure s;
  s.init_tables(n, codes.size(), with_connections && n >= 2);
  for (std::size_t k = 0; k < codes.size(); ++k) {
    std::ostringstream os;
    os << '(';
    for (std::size_t v = 0; v < V; ++v) {
      if (v) os << ',';
      os << object_label(codes[k][v], m);
    }
    os << ')';
    s.names[k] = os.str();
  }

  std::vector<std::uint8_t> tmp(V);
  auto remap = [&](const std::vector<std::uint8_t>& src, auto&& vertex) {
    for (std::size_t v = 0; v < V; ++v) tmp[v] = src[vertex(v)];
    return lookup(tmp);
  };

  for (std::size_t k = 0; k < codes.size(); ++k) {
    const auto& c = codes[k];
    for (int i = 1; i <= n; ++i) {
      std::size_t b = bit_of(i);
      s.face_[i - 1][0][k] = remap(c, [&](std::size_t v) { return v & ~b; });
      s.face_[i - 1][1][k] = remap(c, [&](std::size_t v) { return v | b; });
    }
    for (int i = 1; i + 1 <= n; ++i) {
      std::size_t bi = bit_of(i), bj = bit_of(i + 1);
      auto swap_bits = [&](std::size_t v) {
        bool ti = v & bi, tj = v & bj;
        std::size_t w = v & ~(bi | bj);
        if (ti) w |= bj;
        if (tj) w |= bi;
        return w;
      };
      Cell t = remap(c, swap_bits);
      s.sym_[i - 1][k] = t;
      s.inv_sym_[i - 1][k] = t;  // transposition is an involution
      if (s.has_connections()) {
        s.conn_[i - 1][1][k] = remap(c, [&](std::size_t v) {
          return (v & bi) && (v & bj) ? v : v & ~bj;  // fold with min
        });
        s.conn_[i - 1][0][k] = remap(c, [&](std::size_t v) {
          return (v & bi) || (v & bj) ? v | bj : v;  // fold with max
        });
      }
    }
  }

  for (int i = 1; i <= n; ++i) {
    std::unordered_map<Cell, std::vector<Cell>> by_minus;
    for (std::size_t k = 0; k < codes.size(); ++k)
      by_minus[s.face_[i - 1][0][k]].push_back(Cell(k));
    std::size_t b = bit_of(i);
    for (std::size_t k = 0; k < codes.size(); ++k) {
      auto it = by_minus.find(s.face_[i - 1][1][k]);
      if (it == by_minus.end()) continue;
      for (Cell y : it->second) {
        for (std::size_t v = 0; v < V; ++v)
          tmp[v] = (v & b) ? codes[y][v] : codes[k][v];
        s.set_comp(i, Cell(k), y, lookup(tmp));
      }
    }
  }
  s.seal();

  CheckReport rep = validate(s, threads);
  if (!rep.passed())
    throw StructureError(StructureError::Kind::inconsistency,
                         "nerve failed self-validation, first: " +
                             rep.violations.front().axiom_id + " " +
                             rep.violations.front().detail);
  return s;
}

SingleSetStructure cube_nerve(BaseKind kind, std::size_t size, int dim,
                              bool with_connections, std::size_t budget,
                              int threads) {
  return cube_nerve(base_category(kind, size), dim, with_connections, budget,
                    threads);
}

std::string to_string(const TableLocation& loc, const SingleSetStructure& s) {
  std::ostringstream os;
  switch (loc.table) {
    case TableLocation::Table::face:
      os << "face[" << loc.dir << ',' << sign_char(loc.sign) << ','
         << s.names[loc.x] << ']';
      break;
    case TableLocation::Table::sym:
      os << "sym[" << loc.dir << ',' << s.names[loc.x] << ']';
      break;
    case TableLocation::Table::inv_sym:
      os << "inv_sym[" << loc.dir << ',' << s.names[loc.x] << ']';
      break;
    case TableLocation::Table::conn:
      os << "conn[" << loc.dir << ',' << sign_char(loc.sign) << ','
         << s.names[loc.x] << ']';
      break;
    case TableLocation::Table::comp:
      os << "comp[" << loc.dir << ',' << s.names[loc.x] << ','
         << s.names[loc.y] << ']';
      break;
  }
  return os.str();
}

namespace {

Cell read_entry(const SingleSetStructure& s, const TableLocation& loc) {
  switch (loc.table) {
    case TableLocation::Table::face:
      return s.face_[loc.dir - 1][sign_index(loc.sign)][loc.x];
    case TableLocation::Table::sym: return s.sym_[loc.dir - 1][loc.x];
    case TableLocation::Table::inv_sym: return s.inv_sym_[loc.dir - 1][loc.x];
    case TableLocation::Table::conn:
      return s.conn_[loc.dir - 1][sign_index(loc.sign)][loc.x];
    case TableLocation::Table::comp: return *s.comp(loc.dir, loc.x, loc.y);
  }
  return no_cell;
}

}  // namespace

SingleSetStructure mutate(const SingleSetStructure& s, const TableLocation& loc,
                          Cell value) {
  if (value >= s.size())
    throw StructureError(StructureError::Kind::range, "mutation value out of range");
  SingleSetStructure out = s;
  switch (loc.table) {
    case TableLocation::Table::face:
      out.face_[loc.dir - 1][sign_index(loc.sign)][loc.x] = value;
      break;
    case TableLocation::Table::sym: out.sym_[loc.dir - 1][loc.x] = value; break;
    case TableLocation::Table::inv_sym:
      out.inv_sym_[loc.dir - 1][loc.x] = value;
      break;
    case TableLocation::Table::conn:
      out.conn_[loc.dir - 1][sign_index(loc.sign)][loc.x] = value;
      break;
    case TableLocation::Table::comp: {
      auto it = out.comp_[loc.dir - 1].map.find(pair_key(loc.x, loc.y));
      if (it == out.comp_[loc.dir - 1].map.end())
        throw StructureError(StructureError::Kind::domain,
                             "mutation targets an undefined pair");
      it->second = value;
      break;
    }
  }
  out.validated = false;
  return out;
}

std::vector<Mutation> sample_mutations(const SingleSetStructure& s,
                                       std::size_t count, std::uint64_t seed) {
  if (s.size() < 2)
    throw StructureError(StructureError::Kind::config,
                         "mutation sampling needs at least two cells");
  std::vector<TableLocation> pool;
  const int n = s.dim;
  for (int i = 1; i <= n; ++i)
    for (Sign a : {Sign::minus, Sign::plus})
      for (Cell x = 0; x < s.size(); ++x)
        pool.push_back({TableLocation::Table::face, i, a, x, no_cell});
  for (int i = 1; i + 1 <= n; ++i)
    for (Cell x = 0; x < s.size(); ++x) {
      if (s.is_fixed(i, x))
        pool.push_back({TableLocation::Table::sym, i, Sign::minus, x, no_cell});
      if (s.is_fixed(i + 1, x))
        pool.push_back(
            {TableLocation::Table::inv_sym, i, Sign::minus, x, no_cell});
    }
  if (s.has_connections())
    for (int i = 1; i + 1 <= n; ++i)
      for (Sign a : {Sign::minus, Sign::plus})
        for (Cell x = 0; x < s.size(); ++x)
          if (s.is_fixed(i, x))
            pool.push_back({TableLocation::Table::conn, i, a, x, no_cell});
  for (int i = 1; i <= n; ++i)
    for (const auto& [x, y] : s.comp_[i - 1].pairs)
      pool.push_back({TableLocation::Table::comp, i, Sign::minus, x, y});

  if (count > pool.size()) count = pool.size();
  std::mt19937_64 rng(seed);
  std::vector<Mutation> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t j = k + rng() % (pool.size() - k);
    std::swap(pool[k], pool[j]);
    Cell old = read_entry(s, pool[k]);
    Cell r = Cell(rng() % (s.size() - 1));
    Mutation mut{pool[k], r >= old ? r + 1 : r};
    out.push_back(mut);
  }
  return out;
}

}  // namespace cubix
