#include "cubix/classical.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "report_runner.hpp"

namespace cubix {

using detail::kViol;

namespace {

[[noreturn]] void range_error(const std::string& msg) {
  throw StructureError(StructureError::Kind::range, msg);
}

}  // namespace

void ClassicalStructure::check_ccell(CCell a, const char* op) const {
  if (a.level < 0 || a.level > dim)
    range_error(std::string(op) + ": level " + std::to_string(a.level) +
                " outside 0.." + std::to_string(dim));
  if (a.idx >= size(a.level))
    range_error(std::string(op) + ": cell ordinal out of range at level " +
                std::to_string(a.level));
}

CCell ClassicalStructure::face(int i, Sign a, CCell x) const {
  check_ccell(x, "face");
  if (i < 1 || i > x.level)
    range_error("face: direction " + std::to_string(i) + " outside 1.." +
                std::to_string(x.level));
  return {x.level - 1, cface[x.level][i - 1][sign_index(a)][x.idx]};
}

CCell ClassicalStructure::degenerate(int i, CCell x) const {
  check_ccell(x, "degenerate");
  int k = x.level + 1;
  if (k > dim) range_error("degenerate: no level above " + std::to_string(x.level));
  if (i < 1 || i > k)
    range_error("degenerate: direction " + std::to_string(i) + " outside 1.." +
                std::to_string(k));
  return {k, deg[k][i - 1][x.idx]};
}

CCell ClassicalStructure::connection(int i, Sign a, CCell x) const {
  check_ccell(x, "connection");
  if (!has_connections())
    throw StructureError(StructureError::Kind::config,
                         "structure has no connection tables");
  int k = x.level + 1;
  if (k > dim) range_error("connection: no level above " + std::to_string(x.level));
  if (i < 1 || i > k - 1)
    range_error("connection: direction " + std::to_string(i) + " outside 1.." +
                std::to_string(k - 1));
  return {k, cconn[k][i - 1][sign_index(a)][x.idx]};
}

bool ClassicalStructure::composable(int i, CCell a, CCell b) const {
  check_ccell(a, "comp");
  check_ccell(b, "comp");
  if (a.level != b.level || i < 1 || i > a.level) return false;
  const auto& t = ccomp[a.level][i - 1];
  return t.map.find(pair_key(a.idx, b.idx)) != t.map.end();
}

std::optional<CCell> ClassicalStructure::comp(int i, CCell a, CCell b) const {
  check_ccell(a, "comp");
  check_ccell(b, "comp");
  if (a.level != b.level)
    range_error("comp: operands live at different levels");
  if (i < 1 || i > a.level)
    range_error("comp: direction " + std::to_string(i) + " outside 1.." +
                std::to_string(a.level));
  const auto& t = ccomp[a.level][i - 1];
  auto it = t.map.find(pair_key(a.idx, b.idx));
  if (it == t.map.end()) return std::nullopt;
  return CCell{a.level, it->second};
}

void ClassicalStructure::init_levels(int n, const std::vector<std::size_t>& counts,
                                     bool with_connections) {
  if (n < 0 || counts.size() != std::size_t(n) + 1)
    throw StructureError(StructureError::Kind::config,
                         "init_levels: need one cell count per level 0..n");
  dim = n;
  validated = false;
  names.assign(n + 1, {});
  cface.assign(n + 1, {});
  deg.assign(n + 1, {});
  cconn.clear();
  if (with_connections) cconn.assign(n + 1, {});
  ccomp.assign(n + 1, {});
  for (int k = 0; k <= n; ++k) {
    names[k].resize(counts[k]);
    for (std::size_t c = 0; c < counts[k]; ++c)
      names[k][c] = "k" + std::to_string(k) + ":c" + std::to_string(c);
    if (k == 0) continue;
    cface[k].assign(k, {std::vector<Cell>(counts[k], 0),
                        std::vector<Cell>(counts[k], 0)});
    deg[k].assign(k, std::vector<Cell>(counts[k - 1], 0));
    if (with_connections && k >= 2)
      cconn[k].assign(k - 1, {std::vector<Cell>(counts[k - 1], 0),
                              std::vector<Cell>(counts[k - 1], 0)});
    ccomp[k].assign(k, {});
  }
}

void ClassicalStructure::set_comp(int i, CCell a, CCell b, CCell c) {
  check_ccell(a, "set_comp");
  check_ccell(b, "set_comp");
  check_ccell(c, "set_comp");
  if (a.level != b.level || a.level != c.level)
    range_error("set_comp: operands live at different levels");
  if (i < 1 || i > a.level)
    range_error("set_comp: direction out of range");
  ccomp[a.level][i - 1].map[pair_key(a.idx, b.idx)] = c.idx;
}

void ClassicalStructure::seal() {
  for (int k = 1; k <= dim; ++k)
    for (auto& t : ccomp[k]) {
      t.pairs.clear();
      t.pairs.reserve(t.map.size());
      for (const auto& [key, val] : t.map) {
        (void)val;
        t.pairs.emplace_back(Cell(key >> 32), Cell(key & 0xffffffffu));
      }
      std::sort(t.pairs.begin(), t.pairs.end());
    }
}

std::pair<const std::pair<Cell, Cell>*, const std::pair<Cell, Cell>*>
ClassicalStructure::comp_pairs_of(int i, CCell a) const {
  check_ccell(a, "comp_pairs_of");
  if (i < 1 || i > a.level) range_error("comp_pairs_of: direction out of range");
  const auto& p = ccomp[a.level][i - 1].pairs;
  auto lo = std::lower_bound(p.begin(), p.end(), std::make_pair(a.idx, Cell(0)));
  auto hi = a.idx == 0xffffffffu
                ? p.end()
                : std::lower_bound(p.begin(), p.end(),
                                   std::make_pair(a.idx + 1, Cell(0)));
  return {p.data() + (lo - p.begin()), p.data() + (hi - p.begin())};
}

namespace {

struct CName {
  const ClassicalStructure* C;
  CCell c;
};
std::ostream& operator<<(std::ostream& os, const CName& n) {
  return os << 'C' << n.c.level << ':' << n.C->name(n.c);
}

struct COpt {
  const ClassicalStructure* C;
  std::optional<CCell> c;
};
std::ostream& operator<<(std::ostream& os, const COpt& n) {
  if (!n.c) return os << "undef";
  return os << CName{n.C, *n.c};
}

template <class... Args>
void cinst(detail::Ctx& cx, const ClassicalStructure& C, const char* id,
           Severity sev, std::optional<CCell> lhs, std::optional<CCell> rhs,
           Args&&... args) {
  cx.count(id);
  if (lhs && rhs && *lhs == *rhs) return;
  cx.fail(id, sev, args..., "lhs", COpt{&C, lhs}, "rhs", COpt{&C, rhs});
}

const std::vector<std::string> no_names;

using Bucket = std::unordered_map<Cell, std::vector<Cell>>;

}  // namespace

CheckReport check_classical_axioms(const ClassicalStructure& C, int threads) {
  CheckReport rep;
  const int n = C.dim;
  const bool conn = C.has_connections();

  // Face buckets per (level, direction): cells grouped by their minus/plus
  // face ordinal, for locality and the associativity definedness sides.
  std::vector<std::vector<std::array<Bucket, 2>>> buckets(n + 1);
  for (int k = 1; k <= n; ++k) {
    buckets[k].resize(k);
    for (int i = 1; i <= k; ++i)
      for (Cell a = 0; a < C.size(k); ++a) {
        buckets[k][i - 1][0][C.cface[k][i - 1][0][a]].push_back(a);
        buckets[k][i - 1][1][C.cface[k][i - 1][1][a]].push_back(a);
      }
  }
  auto in_bucket = [](const Bucket& b, Cell f) -> const std::vector<Cell>* {
    auto it = b.find(f);
    return it == b.end() ? nullptr : &it->second;
  };

  std::vector<CCell> cells;
  for (int k = 0; k <= n; ++k)
    for (Cell a = 0; a < C.size(k); ++a) cells.push_back({k, a});

  detail::run_items(no_names, cells.size(), threads, rep, [&](detail::Ctx& cx,
                                                              std::size_t ci) {
    CCell a = cells[ci];
    const int k = a.level;
    auto N = [&](CCell c) { return CName{&C, c}; };

    // Laws quantified over a cell at its own level.
    for (int i = 1; i <= k; ++i) {
      cinst(cx, C, "CC.ii-unit-right", kViol,
            C.comp(i, a, C.degenerate(i, C.face(i, Sign::plus, a))), a, "k", k,
            "i", i, "a", N(a));
      cinst(cx, C, "CC.ii-unit-left", kViol,
            C.comp(i, C.degenerate(i, C.face(i, Sign::minus, a)), a), a, "k", k,
            "i", i, "a", N(a));
      // Composition domain is exactly the face-matching pairs.
      Cell plus_face = C.cface[k][i - 1][1][a.idx];
      if (const auto* bs = in_bucket(buckets[k][i - 1][0], plus_face)) {
        for (Cell b : *bs) {
          cx.count("CC.0-locality");
          if (!C.composable(i, a, CCell{k, b}))
            cx.fail("CC.0-locality", kViol, "k", k, "i", i, "a", N(a), "b",
                    N(CCell{k, b}), "why", "faces match but pair undefined");
        }
      }
      auto [pb, pe] = C.comp_pairs_of(i, a);
      for (auto* p = pb; p != pe; ++p)
        if (C.cface[k][i - 1][0][p->second] != plus_face) {
          cx.count("CC.0-locality");
          cx.fail("CC.0-locality", kViol, "k", k, "i", i, "a", N(a), "b",
                  N(CCell{k, p->second}), "why",
                  "pair defined but faces differ");
        }
      for (int j = i + 1; j <= k; ++j)
        for (Sign al : {Sign::minus, Sign::plus})
          for (Sign be : {Sign::minus, Sign::plus})
            cinst(cx, C, "CC.iii-face-face", kViol,
                  C.face(i, al, C.face(j, be, a)),
                  C.face(j - 1, be, C.face(i, al, a)), "k", k, "i", i, "j", j,
                  "alpha", al, "beta", be, "a", N(a));
    }

    // Interchange over composable quadruples at level k.
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        auto [xb, xe] = C.comp_pairs_of(i, a);
        auto [yb, ye] = C.comp_pairs_of(j, a);
        for (auto* px = xb; px != xe; ++px) {
          CCell x{k, px->second};
          for (auto* py = yb; py != ye; ++py) {
            CCell y{k, py->second};
            auto [zb1, ze1] = C.comp_pairs_of(i, y);
            auto [zb2, ze2] = C.comp_pairs_of(j, x);
            auto* u = zb1;
            auto* v = zb2;
            while (u != ze1 && v != ze2) {
              if (u->second < v->second) ++u;
              else if (v->second < u->second) ++v;
              else {
                CCell z{k, u->second};
                cinst(cx, C, "CC.v-interchange", kViol,
                      C.comp(j, *C.comp(i, a, x), *C.comp(i, y, z)),
                      C.comp(i, *C.comp(j, a, y), *C.comp(j, x, z)), "k", k,
                      "i", i, "j", j, "w", N(a), "x", N(x), "y", N(y), "z",
                      N(z));
                ++u, ++v;
              }
            }
          }
        }
      }

    // Laws whose subject lives one level up (k+1 <= n).
    if (k + 1 <= n) {
      const int ku = k + 1;
      for (int i = 1; i <= ku; ++i)
        for (int j = 1; j <= ku; ++j)
          for (Sign al : {Sign::minus, Sign::plus}) {
            CCell lhs = C.face(i, al, C.degenerate(j, a));
            CCell rhs = i < j   ? C.degenerate(j - 1, C.face(i, al, a))
                        : i == j ? a
                                 : C.degenerate(j, C.face(i - 1, al, a));
            cinst(cx, C, "CC.vi-face-deg", kViol, lhs, rhs, "k", ku, "i", i,
                  "j", j, "alpha", al, "a", N(a));
          }
      if (conn) {
        for (int j = 1; j + 1 <= ku; ++j)
          for (Sign be : {Sign::minus, Sign::plus}) {
            CCell g = C.connection(j, be, a);
            for (int i = 1; i <= ku; ++i)
              for (Sign al : {Sign::minus, Sign::plus}) {
                std::optional<CCell> rhs;
                if (i < j)
                  rhs = C.connection(j - 1, be, C.face(i, al, a));
                else if (i == j || i == j + 1)
                  rhs = al == be ? a
                                 : C.degenerate(j, C.face(j, al, a));
                else
                  rhs = C.connection(j, be, C.face(i - 1, al, a));
                cinst(cx, C, "CCG.i-face-conn", kViol, C.face(i, al, g), rhs,
                      "k", ku, "i", i, "j", j, "alpha", al, "beta", be, "a",
                      N(a));
              }
          }
        for (int i = 1; i + 1 <= ku; ++i) {
          CCell gp = C.connection(i, Sign::plus, a);
          CCell gm = C.connection(i, Sign::minus, a);
          cinst(cx, C, "CCG.iii-zigzag", kViol, C.comp(i, gp, gm),
                C.degenerate(i + 1, a), "k", ku, "i", i, "a", N(a), "form",
                "low");
          cinst(cx, C, "CCG.iii-zigzag", kViol, C.comp(i + 1, gp, gm),
                C.degenerate(i, a), "k", ku, "i", i, "a", N(a), "form", "high");
        }
      }
    }
    if (k + 2 <= n) {
      const int ku = k + 1;
      for (int j = 1; j <= ku; ++j) {
        CCell ej = C.degenerate(j, a);
        for (int i = 1; i <= ku + 1; ++i) {
          if (i <= j)
            cinst(cx, C, "CC.viii-deg-deg", kViol, C.degenerate(i, ej),
                  C.degenerate(j + 1, C.degenerate(i, a)), "k", ku, "i", i, "j",
                  j, "a", N(a));
        }
        if (conn) {
          for (int i = 1; i <= ku; ++i)
            for (Sign al : {Sign::minus, Sign::plus}) {
              std::optional<CCell> rhs;
              if (i < j)
                rhs = C.degenerate(j + 1, C.connection(i, al, a));
              else if (i == j)
                rhs = C.degenerate(i, C.degenerate(i, a));
              else
                rhs = C.degenerate(j, C.connection(i - 1, al, a));
              cinst(cx, C, "CCG.iv-conn-deg", kViol, C.connection(i, al, ej),
                    rhs, "k", ku, "i", i, "j", j, "alpha", al, "a", N(a));
            }
          for (int j2 = 1; j2 + 1 <= ku; ++j2)
            for (Sign be : {Sign::minus, Sign::plus}) {
              CCell gj = C.connection(j2, be, a);
              for (int i = 1; i <= ku; ++i)
                for (Sign al : {Sign::minus, Sign::plus}) {
                  if (i < j2)
                    cinst(cx, C, "CCG.v-conn-conn", kViol,
                          C.connection(i, al, gj),
                          C.connection(j2 + 1, be, C.connection(i, al, a)),
                          "k", ku, "i", i, "j", j2, "alpha", al, "beta", be,
                          "a", N(a));
                  else if (i == j2 && al == be)
                    cinst(cx, C, "CCG.v-conn-conn", kViol,
                          C.connection(i, al, gj),
                          C.connection(i + 1, al, C.connection(i, al, a)),
                          "k", ku, "i", i, "j", j2, "alpha", al, "beta", be,
                          "a", N(a));
                }
            }
        }
      }
    }
  });

  // Pairwise laws over the defined compositions of every level/direction.
  struct PairItem {
    int k, j;
    std::size_t p;
  };
  std::vector<PairItem> items;
  for (int k = 1; k <= n; ++k)
    for (int j = 1; j <= k; ++j)
      for (std::size_t p = 0; p < C.ccomp[k][j - 1].pairs.size(); ++p)
        items.push_back({k, j, p});

  detail::run_items(no_names, items.size(), threads, rep, [&](detail::Ctx& cx,
                                                              std::size_t ii) {
    auto [k, j, pi] = items[ii];
    auto [ai, bi] = C.ccomp[k][j - 1].pairs[pi];
    CCell a{k, ai}, b{k, bi};
    CCell ab = *C.comp(j, a, b);
    auto N = [&](CCell c) { return CName{&C, c}; };
    auto comp_oo = [&](int d, std::optional<CCell> x,
                       std::optional<CCell> y) -> std::optional<CCell> {
      if (!x || !y) return std::nullopt;
      return C.comp(d, *x, *y);
    };

    // Associativity: side A extends (a, b) to the right; side B treats
    // (a, b) as the right pair and extends left, skipping triples side A
    // already covers.
    {
      Cell plus_ab = C.cface[k][j - 1][1][ab.idx];
      auto itb = buckets[k][j - 1][0].find(plus_ab);
      if (itb != buckets[k][j - 1][0].end())
        for (Cell zi : itb->second) {
          CCell z{k, zi};
          if (!C.composable(j, ab, z)) continue;  // locality reports this
          cx.count("CC.i-assoc");
          auto bz = C.comp(j, b, z);
          if (!bz || !C.composable(j, a, *bz)) {
            cx.fail("CC.i-assoc", kViol, "k", k, "i", j, "a", N(a), "b", N(b),
                    "c", N(z), "why",
                    "left nesting defined, right nesting undefined");
          } else {
            auto lhs = C.comp(j, ab, z);
            auto rhs = C.comp(j, a, *bz);
            if (!lhs || !rhs || !(*lhs == *rhs))
              cx.fail("CC.i-assoc", kViol, "k", k, "i", j, "a", N(a), "b",
                      N(b), "c", N(z), "lhs", COpt{&C, lhs}, "rhs",
                      COpt{&C, rhs});
          }
        }
      Cell minus_ab = C.cface[k][j - 1][0][ab.idx];
      auto itw = buckets[k][j - 1][1].find(minus_ab);
      if (itw != buckets[k][j - 1][1].end())
        for (Cell wi : itw->second) {
          CCell w{k, wi};
          if (!C.composable(j, w, ab)) continue;
          bool in_a = false;
          if (C.composable(j, w, a)) in_a = C.composable(j, *C.comp(j, w, a), b);
          if (in_a) continue;
          cx.count("CC.i-assoc");
          cx.fail("CC.i-assoc", kViol, "k", k, "i", j, "a", N(w), "b", N(a),
                  "c", N(b), "why",
                  "right nesting defined, left nesting undefined");
        }
    }

    // Faces of a composite, with the printed index shift.
    for (int i = 1; i <= k; ++i)
      for (Sign al : {Sign::minus, Sign::plus}) {
        std::optional<CCell> rhs;
        if (i < j)
          rhs = comp_oo(j - 1, C.face(i, al, a), C.face(i, al, b));
        else if (i == j)
          rhs = al == Sign::minus ? C.face(j, Sign::minus, a)
                                  : C.face(j, Sign::plus, b);
        else
          rhs = comp_oo(j, C.face(i, al, a), C.face(i, al, b));
        cinst(cx, C, "CC.iv-face-comp", kViol, C.face(i, al, ab), rhs, "k", k,
              "i", i, "j", j, "alpha", al, "a", N(a), "b", N(b));
      }

    if (k + 1 <= n) {
      for (int i = 1; i <= k + 1; ++i) {
        int dir = i <= j ? j + 1 : j;
        cinst(cx, C, "CC.vii-deg-comp", kViol, C.degenerate(i, ab),
              comp_oo(dir, C.degenerate(i, a), C.degenerate(i, b)), "k", k,
              "i", i, "j", j, "a", N(a), "b", N(b));
      }
      if (conn)
        for (int i = 1; i <= k; ++i)
          for (Sign al : {Sign::minus, Sign::plus}) {
            std::optional<CCell> rhs;
            if (i < j) {
              rhs = comp_oo(j + 1, C.connection(i, al, a),
                            C.connection(i, al, b));
            } else if (i > j) {
              rhs = comp_oo(j, C.connection(i, al, a), C.connection(i, al, b));
            } else if (al == Sign::minus) {
              auto left = comp_oo(i, C.connection(i, Sign::minus, a),
                                  C.degenerate(i + 1, b));
              auto right = comp_oo(i, C.degenerate(i, b),
                                   C.connection(i, Sign::minus, b));
              rhs = comp_oo(i + 1, left, right);
            } else {
              auto left = comp_oo(i, C.connection(i, Sign::plus, a),
                                  C.degenerate(i, a));
              auto right = comp_oo(i, C.degenerate(i + 1, a),
                                   C.connection(i, Sign::plus, b));
              rhs = comp_oo(i + 1, left, right);
            }
            cinst(cx, C, "CCG.ii-conn-comp", kViol, C.connection(i, al, ab),
                  rhs, "k", k, "i", i, "j", j, "alpha", al, "a", N(a), "b",
                  N(b));
          }
    }
  });

  if (!conn)
    rep.notes.push_back("connections absent: graded connection axioms skipped");
  detail::finalize(rep);
  return rep;
}

namespace {

/// Witness scan; no_cell when absent, throws on duplicates.
Cell find_R(const ClassicalStructure& C, int i, CCell a) {
  CCell target_l = C.degenerate(i, C.face(i, Sign::minus, a));
  CCell target_r = C.degenerate(i, C.face(i, Sign::plus, a));
  Cell found = no_cell;
  auto [pb, pe] = C.comp_pairs_of(i, a);
  for (auto* p = pb; p != pe; ++p) {
    CCell b{a.level, p->second};
    if (C.comp(i, a, b) != std::optional<CCell>(target_l)) continue;
    if (C.comp(i, b, a) != std::optional<CCell>(target_r)) continue;
    if (found != no_cell && found != b.idx)
      throw StructureError(StructureError::Kind::inconsistency,
                           "two distinct inverses of " + C.name(a) +
                               " at level " + std::to_string(a.level) +
                               " in direction " + std::to_string(i));
    found = b.idx;
  }
  return found;
}

}  // namespace

std::optional<CCell> R_inverse(const ClassicalStructure& C, int i, CCell a) {
  if (a.level < 1)
    range_error("R_inverse: level " + std::to_string(a.level) +
                " has no compositions");
  if (i < 1 || i > a.level)
    range_error("R_inverse: direction " + std::to_string(i) + " outside 1.." +
                std::to_string(a.level));
  Cell b = find_R(C, i, a);
  if (b == no_cell) return std::nullopt;
  return CCell{a.level, b};
}

bool classical_shell_invertible(const ClassicalStructure& C, int i, CCell a) {
  const int k = a.level;
  if (k < 1 || i < 1 || i > k)
    throw StructureError(StructureError::Kind::domain,
                         "classical_shell_invertible: need 1 <= i <= level");
  for (int j = 1; j <= k; ++j) {
    if (j == i) continue;
    // Removing direction i renumbers the directions of the faces below it.
    int dir = j < i ? i - 1 : i;
    for (Sign al : {Sign::minus, Sign::plus})
      if (find_R(C, dir, C.face(j, al, a)) == no_cell) return false;
  }
  return true;
}

CheckReport check_classical_np(const ClassicalStructure& C, int p, int threads) {
  if (p < 0 || p > C.dim)
    throw StructureError(StructureError::Kind::domain,
                         "check_classical_np: p outside 0.." +
                             std::to_string(C.dim));
  CheckReport rep;
  const int n = C.dim;

  // rinv[k][i-1][a]: inverse ordinal at level k in direction i, or no_cell.
  std::vector<std::vector<std::vector<Cell>>> rinv(n + 1);
  for (int k = 1; k <= n; ++k) {
    rinv[k].resize(k);
    for (int i = 1; i <= k; ++i) {
      rinv[k][i - 1].assign(C.size(k), no_cell);
      for (Cell a = 0; a < C.size(k); ++a)
        rinv[k][i - 1][a] = find_R(C, i, CCell{k, a});
    }
  }

  struct Item {
    int k, i;
    Cell a;
  };
  std::vector<Item> items;
  for (int k = p + 1; k <= n; ++k)
    for (Cell a = 0; a < C.size(k); ++a)
      for (int i = 1; i <= k; ++i) items.push_back({k, i, a});

  detail::run_items(no_names, items.size(), threads, rep,
                    [&](detail::Ctx& cx, std::size_t idx) {
                      auto [k, i, ai] = items[idx];
                      CCell a{k, ai};
                      for (int j = 1; j <= k; ++j) {
                        if (j == i) continue;
                        int dir = j < i ? i - 1 : i;
                        for (Sign al : {Sign::minus, Sign::plus}) {
                          CCell f = C.face(j, al, a);
                          if (rinv[k - 1][dir - 1][f.idx] == no_cell) return;
                        }
                      }
                      cx.count("CINV.np");
                      if (rinv[k][i - 1][ai] == no_cell)
                        cx.fail("CINV.np", kViol, "k", k, "i", i, "a",
                                CName{&C, a});
                    });
  detail::finalize(rep);
  return rep;
}

CheckReport validate(ClassicalStructure& c, int threads) {
  CheckReport rep = check_classical_axioms(c, threads);
  c.validated = rep.passed();
  return rep;
}

}  // namespace cubix
