#include "cubix/laws.hpp"

#include <optional>

#include "report_runner.hpp"

namespace cubix {

using detail::Ctx;
using detail::finalize;
using detail::kThm;
using detail::kViol;

namespace {

// Flattened (direction, pair) index over every defined composition pair.
std::vector<std::pair<int, std::size_t>> pair_items(const SingleSetStructure& S) {
  std::vector<std::pair<int, std::size_t>> items;
  for (int i = 1; i <= S.dim; ++i)
    for (std::size_t p = 0; p < S.comp_[i - 1].pairs.size(); ++p)
      items.emplace_back(i, p);
  return items;
}

template <class Body>
void run_items(const SingleSetStructure& S, std::size_t n_items, int threads,
               CheckReport& rep, Body&& body) {
  detail::run_items(S.names, n_items, threads, rep, std::forward<Body>(body));
}

}  // namespace

CheckReport check_category_axioms(const SingleSetStructure& S, int threads) {
  CheckReport rep;
  std::vector<FaceBuckets> bmin(S.dim + 1), bplus(S.dim + 1);
  for (int i = 1; i <= S.dim; ++i) {
    bmin[i] = face_buckets(S, i, Sign::minus);
    bplus[i] = face_buckets(S, i, Sign::plus);
  }
  auto bucket = [](const FaceBuckets& b, Cell f) -> const std::vector<Cell>* {
    auto it = b.find(f);
    return it == b.end() ? nullptr : &it->second;
  };

  // Per-cell laws: units, face absorption, fixedness agreement, locality.
  run_items(S, S.size(), threads, rep, [&](Ctx& c, std::size_t k) {
    Cell x = Cell(k);
    for (int i = 1; i <= S.dim; ++i) {
      Cell fm = S.face(i, Sign::minus, x), fp = S.face(i, Sign::plus, x);
      c.instance("SSC.ii-unit-right", kViol, S.comp(i, x, fp), x, "i", i, "x", x);
      c.instance("SSC.ii-unit-left", kViol, S.comp(i, fm, x), x, "i", i, "x", x);
      for (Sign a : {Sign::minus, Sign::plus})
        for (Sign b : {Sign::minus, Sign::plus})
          c.instance("SSC.L1-face-absorb", kThm, S.face(i, a, S.face(i, b, x)),
                     S.face(i, b, x), "i", i, "alpha", a, "beta", b, "x", x);
      c.count("SSC.L2-fix-agree");
      if ((fm == x) != (fp == x))
        c.fail("SSC.L2-fix-agree", kThm, "i", i, "x", x);
      // Locality: the comp domain is exactly the face-matching pairs.
      if (const auto* ys = bucket(bmin[i], fp)) {
        for (Cell y : *ys) {
          c.count("SSC.iii-locality");
          if (!S.composable(i, x, y))
            c.fail("SSC.iii-locality", kViol, "i", i, "x", x, "y", y,
                   "why", "faces match but pair undefined");
        }
      }
      // Defined pairs with mismatching faces; matching ones were counted
      // from the bucket side above.
      auto [pb, pe] = S.comp_pairs_of(i, x);
      for (auto* p = pb; p != pe; ++p) {
        if (S.face(i, Sign::minus, p->second) != fp) {
          c.count("SSC.iii-locality");
          c.fail("SSC.iii-locality", kViol, "i", i, "x", x, "y", p->second,
                 "why", "pair defined but faces differ");
        }
      }
    }
  });

  // Associativity over composable triples: side A anchors on a defined pair
  // (x, y) and extends right; side B anchors on (y, z) and extends left,
  // skipping triples already covered by A so each ground instance is counted
  // exactly once.
  auto items = pair_items(S);
  run_items(S, items.size(), threads, rep, [&](Ctx& c, std::size_t k) {
    auto [i, p] = items[k];
    auto [x, y] = S.comp_[i - 1].pairs[p];
    Cell xy = *S.comp(i, x, y);
    if (const auto* zs = bucket(bmin[i], S.face(i, Sign::plus, xy))) {
      for (Cell z : *zs) {
        if (!S.composable(i, xy, z)) continue;  // locality reports this
        c.count("SSC.i-assoc");
        auto yz = S.comp(i, y, z);
        if (!yz || !S.composable(i, x, *yz)) {
          c.fail("SSC.i-assoc", kViol, "i", i, "x", x, "y", y, "z", z,
                 "why", "left nesting defined, right nesting undefined");
        } else {
          auto lhs = S.comp(i, xy, z);
          auto rhs = S.comp(i, x, *yz);
          if (!lhs || !rhs || *lhs != *rhs)
            c.fail("SSC.i-assoc", kViol, "i", i, "x", x, "y", y, "z", z, "lhs",
                   lhs, "rhs", rhs);
        }
      }
    }
    // Side B with A-members skipped: (y', z') := (x, y) extends to the left.
    auto yz = xy;
    if (const auto* xs = bucket(bplus[i], S.face(i, Sign::minus, yz))) {
      for (Cell w : *xs) {
        if (!S.composable(i, w, yz)) continue;
        bool in_a = false;
        if (S.composable(i, w, x)) {
          Cell wx = *S.comp(i, w, x);
          in_a = S.composable(i, wx, y);
        }
        if (in_a) continue;
        c.count("SSC.i-assoc");
        c.fail("SSC.i-assoc", kViol, "i", i, "x", w, "y", x, "z", y,
               "why", "right nesting defined, left nesting undefined");
      }
    }
  });

  rep.notes.push_back("SSC.iv-functionality: structural (tables are maps)");
  finalize(rep);
  return rep;
}

CheckReport check_cubical_axioms(const SingleSetStructure& S, int threads) {
  CheckReport rep;
  const int n = S.dim;

  // Per-cell laws.
  run_items(S, S.size(), threads, rep, [&](Ctx& c, std::size_t k) {
    Cell x = Cell(k);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        for (Sign a : {Sign::minus, Sign::plus})
          for (Sign b : {Sign::minus, Sign::plus})
            c.instance("SSCC.i-face-commute", kViol,
                       S.face(i, a, S.face(j, b, x)), S.face(j, b, S.face(i, a, x)),
                       "i", i, "j", j, "alpha", a, "beta", b, "x", x);
      }
    for (int i = 1; i + 1 <= n; ++i) {
      if (S.is_fixed(i, x)) {
        c.count("SSCC.iv-sym-type");
        if (!S.is_fixed(i + 1, S.sym(i, x)))
          c.fail("SSCC.iv-sym-type", kViol, "i", i, "x", x);
        c.instance("SSCC.v-sym-inverse", kViol, S.inv_sym(i, S.sym(i, x)), x,
                   "i", i, "x", x, "side", "inv_sym.sym");
      }
      if (S.is_fixed(i + 1, x)) {
        c.count("SSCC.iv-sym-type");
        if (!S.is_fixed(i, S.inv_sym(i, x)))
          c.fail("SSCC.iv-sym-type", kViol, "i", i, "x", x, "map", "inv_sym");
        c.instance("SSCC.v-sym-inverse", kViol, S.sym(i, S.inv_sym(i, x)), x,
                   "i", i, "x", x, "side", "sym.inv_sym");
      }
      if (S.is_fixed(i, x) && S.is_fixed(i + 1, x))
        c.instance("SSCC.viii-sym-fix", kViol, S.sym(i, x), x, "i", i, "x", x);
    }
    for (int j = 1; j + 1 <= n; ++j) {
      if (!S.is_fixed(j, x)) continue;
      Cell sx = S.sym(j, x);
      for (Sign a : {Sign::minus, Sign::plus}) {
        c.instance("SSCC.vi-face-sym", kViol, S.face(j, a, sx),
                   S.sym(j, S.face(j + 1, a, x)), "j", j, "i", j, "alpha", a, "x", x);
        for (int i = 1; i <= n; ++i) {
          if (i == j || i == j + 1) continue;
          c.instance("SSCC.vi-face-sym", kViol, S.face(i, a, sx),
                     S.sym(j, S.face(i, a, x)), "j", j, "i", i, "alpha", a, "x", x);
        }
      }
    }
    for (int i = 1; i + 1 <= n; ++i)
      for (int j = i + 2; j + 1 <= n; ++j)
        if (S.is_fixed(i, x) && S.is_fixed(j, x))
          c.instance("SSCC.ix-sym-commute", kViol, S.sym(i, S.sym(j, x)),
                     S.sym(j, S.sym(i, x)), "i", i, "j", j, "x", x);
  });

  // Faces of composites and symmetry/composition compatibility, enumerated
  // over the defined pairs of every direction.
  auto items = pair_items(S);
  run_items(S, items.size(), threads, rep, [&](Ctx& c, std::size_t k) {
    auto [j, p] = items[k];
    auto [x, y] = S.comp_[j - 1].pairs[p];
    Cell xy = *S.comp(j, x, y);
    for (int i = 1; i <= n; ++i) {
      if (i == j) continue;
      for (Sign a : {Sign::minus, Sign::plus})
        c.instance("SSCC.ii-face-comp", kViol, S.face(i, a, xy),
                   S.comp(j, S.face(i, a, x), S.face(i, a, y)), "i", i, "j", j,
                   "alpha", a, "x", x, "y", y);
    }
    if (j >= 2) {
      int i = j - 1;  // s_i of a composite in direction i+1
      if (S.is_fixed(i, x) && S.is_fixed(i, y))
        c.instance("SSCC.vii-sym-comp", kViol, S.sym(i, xy),
                   S.comp(i, S.sym(i, x), S.sym(i, y)), "i", i, "j", j, "x", x,
                   "y", y);
    }
    for (int i = 1; i + 1 <= n; ++i) {
      if (j == i || j == i + 1) continue;
      if (S.is_fixed(i, x) && S.is_fixed(i, y))
        c.instance("SSCC.vii-sym-comp", kViol, S.sym(i, xy),
                   S.comp(j, S.sym(i, x), S.sym(i, y)), "i", i, "j", j, "x", x,
                   "y", y);
    }
  });

  // Interchange over composable quadruples: (w.i.x) and (w.j.y) come from
  // the composition tables, z from the intersection of the z-successors of y
  // in direction i and of x in direction j (both sorted ascending).
  run_items(S, S.size(), threads, rep, [&](Ctx& c, std::size_t k) {
    Cell w = Cell(k);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        auto [xb, xe] = S.comp_pairs_of(i, w);
        auto [yb, ye] = S.comp_pairs_of(j, w);
        for (auto* px = xb; px != xe; ++px) {
          Cell x = px->second;
          for (auto* py = yb; py != ye; ++py) {
            Cell y = py->second;
            auto [zb1, ze1] = S.comp_pairs_of(i, y);
            auto [zb2, ze2] = S.comp_pairs_of(j, x);
            auto* a = zb1;
            auto* b = zb2;
            while (a != ze1 && b != ze2) {
              if (a->second < b->second) ++a;
              else if (b->second < a->second) ++b;
              else {
                Cell z = a->second;
                Cell wx = *S.comp(i, w, x), yz = *S.comp(i, y, z);
                Cell wy = *S.comp(j, w, y), xz = *S.comp(j, x, z);
                c.instance("SSCC.iii-interchange", kViol, S.comp(j, wx, yz),
                           S.comp(i, wy, xz), "i", i, "j", j, "w", w, "x", x,
                           "y", y, "z", z);
                ++a, ++b;
              }
            }
          }
        }
      }
  });

  rep.notes.push_back(
      "SSCC.x-finite-dimension: vacuous at finite dimension bound " +
      std::to_string(n));
  finalize(rep);
  return rep;
}

CheckReport check_connection_axioms(const SingleSetStructure& S, int threads) {
  CheckReport rep;
  if (!S.has_connections()) {
    rep.notes.push_back("connections absent: suite skipped");
    return rep;
  }
  const int n = S.dim;

  run_items(S, S.size(), threads, rep, [&](Ctx& c, std::size_t k) {
    Cell x = Cell(k);
    for (int j = 1; j + 1 <= n; ++j) {
      if (!S.is_fixed(j, x)) continue;
      for (Sign a : {Sign::minus, Sign::plus}) {
        Cell g = S.conn(j, a, x);
        c.instance("CONN.i-face1", kViol, S.face(j, a, g), x, "j", j, "alpha", a,
                   "x", x);
        c.instance("CONN.i-face2", kViol, S.face(j + 1, a, g), S.sym(j, x), "j",
                   j, "alpha", a, "x", x);
        for (Sign b : {Sign::minus, Sign::plus}) {
          Cell gb = S.conn(j, b, x);
          for (int i = 1; i <= n; ++i) {
            if (i == j || i == j + 1) continue;
            c.instance("CONN.i-face3", kViol, S.face(i, a, gb),
                       S.conn(j, b, S.face(i, a, x)), "j", j, "i", i, "alpha", a,
                       "beta", b, "x", x);
          }
        }
      }
    }
    for (int i = 1; i + 1 <= n; ++i) {
      if (S.is_fixed(i, x) && S.is_fixed(i + 1, x))
        for (Sign a : {Sign::minus, Sign::plus})
          c.instance("CONN.iii-fix", kViol, S.conn(i, a, x), x, "i", i, "alpha",
                     a, "x", x);
      if (S.is_fixed(i, x)) {
        Cell gp = S.conn(i, Sign::plus, x), gm = S.conn(i, Sign::minus, x);
        c.instance("CONN.iv-zigzag1", kViol, S.comp(i + 1, gp, gm), x, "i", i,
                   "x", x);
        c.instance("CONN.iv-zigzag2", kViol, S.comp(i, gp, gm), S.sym(i, x),
                   "i", i, "x", x);
      }
      for (int j = i + 2; j + 1 <= n; ++j)
        if (S.is_fixed(i, x) && S.is_fixed(j, x))
          for (Sign a : {Sign::minus, Sign::plus})
            for (Sign b : {Sign::minus, Sign::plus})
              c.instance("CONN.v-conn-commute", kViol,
                         S.conn(i, a, S.conn(j, b, x)),
                         S.conn(j, b, S.conn(i, a, x)), "i", i, "j", j, "alpha",
                         a, "beta", b, "x", x);
    }
    for (int i = 1; i + 2 <= n; ++i)
      if (S.is_fixed(i, x) && S.is_fixed(i + 1, x))
        for (Sign a : {Sign::minus, Sign::plus})
          c.instance("CONN.vi-sym-shift", kViol,
                     S.sym(i + 1, S.sym(i, S.conn(i + 1, a, x))),
                     S.conn(i, a, S.sym(i + 1, x)), "i", i, "alpha", a, "x", x);
  });

  auto items = pair_items(S);
  run_items(S, items.size(), threads, rep, [&](Ctx& c, std::size_t k) {
    auto [dir, p] = items[k];
    auto [x, y] = S.comp_[dir - 1].pairs[p];
    Cell xy = *S.comp(dir, x, y);
    if (dir >= 2) {
      int i = dir - 1;
      if (S.is_fixed(i, x) && S.is_fixed(i, y)) {
        auto left = S.comp(i + 1, S.conn(i, Sign::plus, x), S.sym(i, x));
        auto right = S.comp(i + 1, x, S.conn(i, Sign::plus, y));
        std::optional<Cell> rhs;
        if (left && right) rhs = S.comp(i, *left, *right);
        c.instance("CONN.ii-corner-pos", kViol, S.conn(i, Sign::plus, xy), rhs,
                   "i", i, "x", x, "y", y);
        left = S.comp(i + 1, S.conn(i, Sign::minus, x), y);
        right = S.comp(i + 1, S.sym(i, y), S.conn(i, Sign::minus, y));
        rhs.reset();
        if (left && right) rhs = S.comp(i, *left, *right);
        c.instance("CONN.ii-corner-neg", kViol, S.conn(i, Sign::minus, xy), rhs,
                   "i", i, "x", x, "y", y);
      }
    }
    for (int i = 1; i + 1 <= n; ++i) {
      if (dir == i || dir == i + 1) continue;
      if (S.is_fixed(i, x) && S.is_fixed(i, y))
        for (Sign a : {Sign::minus, Sign::plus})
          c.instance("CONN.ii-comp", kViol, S.conn(i, a, xy),
                     S.comp(dir, S.conn(i, a, x), S.conn(i, a, y)), "i", i, "j",
                     dir, "alpha", a, "x", x, "y", y);
    }
  });

  finalize(rep);
  return rep;
}

CheckReport check_derived_lemmas(const SingleSetStructure& S, int threads) {
  CheckReport rep;
  const int n = S.dim;
  const bool conn = S.has_connections();

  run_items(S, S.size(), threads, rep, [&](Ctx& c, std::size_t k) {
    Cell x = Cell(k);
    for (int j = 1; j + 1 <= n; ++j) {
      if (S.is_fixed(j, x))
        for (Sign a : {Sign::minus, Sign::plus})
          c.instance("LEM.sym1-face", kThm, S.face(j + 1, a, S.sym(j, x)),
                     S.sym(j, S.face(j, a, x)), "j", j, "alpha", a, "x", x);
      if (S.is_fixed(j + 1, x)) {
        Cell tx = S.inv_sym(j, x);
        for (Sign a : {Sign::minus, Sign::plus})
          for (int i = 1; i <= n; ++i) {
            Cell rhs = i == j ? S.inv_sym(j, S.face(j + 1, a, x))
                       : i == j + 1 ? S.inv_sym(j, S.face(j, a, x))
                                    : S.inv_sym(j, S.face(i, a, x));
            c.instance("LEM.sym2-face", kThm, S.face(i, a, tx), rhs, "j", j,
                       "i", i, "alpha", a, "x", x);
          }
      }
    }
    for (int i = 1; i + 1 <= n; ++i) {
      if (S.is_fixed(i, x) && S.is_fixed(i + 1, x))
        c.instance("LEM.sym2-fix", kThm, S.inv_sym(i, x), x, "i", i, "x", x);
      if (i + 2 <= n) {
        if (S.is_fixed(i, x) && S.is_fixed(i + 1, x))
          c.instance("LEM.sym1-yb", kThm,
                     S.sym(i, S.sym(i + 1, S.sym(i, x))),
                     S.sym(i + 1, S.sym(i, S.sym(i + 1, x))), "i", i, "x", x);
        if (S.is_fixed(i + 1, x) && S.is_fixed(i + 2, x))
          c.instance("LEM.sym2-yb", kThm,
                     S.inv_sym(i, S.inv_sym(i + 1, S.inv_sym(i, x))),
                     S.inv_sym(i + 1, S.inv_sym(i, S.inv_sym(i + 1, x))), "i",
                     i, "x", x);
      }
    }
    for (int i = 1; i + 1 <= n; ++i)
      for (int j = 1; j + 1 <= n; ++j) {
        if (j - i < 2 && i - j < 2) continue;
        if (S.is_fixed(i, x) && S.is_fixed(j + 1, x))
          c.instance("LEM.sym2-commute", kThm, S.sym(i, S.inv_sym(j, x)),
                     S.inv_sym(j, S.sym(i, x)), "i", i, "j", j, "x", x, "form",
                     "sym.inv_sym");
        if (i < j && S.is_fixed(i + 1, x) && S.is_fixed(j + 1, x))
          c.instance("LEM.sym2-commute", kThm, S.inv_sym(i, S.inv_sym(j, x)),
                     S.inv_sym(j, S.inv_sym(i, x)), "i", i, "j", j, "x", x,
                     "form", "inv_sym.inv_sym");
      }
    if (conn) {
      for (int j = 1; j + 1 <= n; ++j)
        if (S.is_fixed(j, x))
          for (Sign a : {Sign::minus, Sign::plus}) {
            Cell g = S.conn(j, opposite(a), x);
            c.instance("LEM.conn1-mixed-face", kThm, S.face(j, a, g),
                       S.face(j + 1, a, x), "j", j, "alpha", a, "x", x, "side",
                       "low");
            c.instance("LEM.conn1-mixed-face", kThm, S.face(j + 1, a, g),
                       S.face(j + 1, a, x), "j", j, "alpha", a, "x", x, "side",
                       "high");
          }
      for (int i = 1; i + 1 <= n; ++i)
        for (int j = 1; j + 1 <= n; ++j) {
          if (j - i < 2 && i - j < 2) continue;
          for (Sign a : {Sign::minus, Sign::plus}) {
            if (S.is_fixed(i, x) && S.is_fixed(j, x))
              c.instance("LEM.conn1-sym-commute", kThm,
                         S.conn(i, a, S.sym(j, x)), S.sym(j, S.conn(i, a, x)),
                         "i", i, "j", j, "alpha", a, "x", x, "form", "sym");
            if (S.is_fixed(i, x) && S.is_fixed(j + 1, x))
              c.instance("LEM.conn1-sym-commute", kThm,
                         S.conn(i, a, S.inv_sym(j, x)),
                         S.inv_sym(j, S.conn(i, a, x)), "i", i, "j", j, "alpha",
                         a, "x", x, "form", "inv_sym");
          }
        }
      for (int i = 1; i + 2 <= n; ++i)
        if (S.is_fixed(i, x) && S.is_fixed(i + 2, x))
          for (Sign a : {Sign::minus, Sign::plus})
            c.instance("LEM.conn1-shift", kThm,
                       S.inv_sym(i, S.inv_sym(i + 1, S.conn(i, a, x))),
                       S.conn(i + 1, a, S.inv_sym(i + 1, x)), "i", i, "alpha",
                       a, "x", x);
    }
    // Uniqueness of directed inverses: at most one witness per (i, x).
    for (int i = 1; i <= n; ++i) {
      c.count("LEM.unique-inverse");
      Cell first = no_cell;
      auto [pb, pe] = S.comp_pairs_of(i, x);
      for (auto* p = pb; p != pe; ++p) {
        Cell y = p->second;
        if (S.comp(i, x, y) != std::optional<Cell>(S.face(i, Sign::minus, x)))
          continue;
        auto back = S.comp(i, y, x);
        if (back != std::optional<Cell>(S.face(i, Sign::plus, x))) continue;
        if (first == no_cell) {
          first = y;
        } else {
          c.fail("LEM.unique-inverse", kThm, "i", i, "x", x, "y1", first, "y2",
                 y);
          break;
        }
      }
    }
  });

  auto items = pair_items(S);
  run_items(S, items.size(), threads, rep, [&](Ctx& c, std::size_t k) {
    auto [dir, p] = items[k];
    auto [x, y] = S.comp_[dir - 1].pairs[p];
    Cell xy = *S.comp(dir, x, y);
    if (dir + 1 <= n && S.is_fixed(dir, x) && S.is_fixed(dir, y))
      c.instance("LEM.sym1-comp", kThm, S.sym(dir, xy),
                 S.comp(dir + 1, S.sym(dir, x), S.sym(dir, y)), "i", dir, "x",
                 x, "y", y);
    for (int i = 1; i + 1 <= n; ++i) {
      if (S.is_fixed(i + 1, x) && S.is_fixed(i + 1, y)) {
        int target = dir == i ? i + 1 : dir == i + 1 ? i : dir;
        c.instance("LEM.sym2-comp", kThm, S.inv_sym(i, xy),
                   S.comp(target, S.inv_sym(i, x), S.inv_sym(i, y)), "i", i,
                   "j", dir, "x", x, "y", y);
      }
    }
    if (conn && dir >= 2) {
      int i = dir - 1;
      if (S.is_fixed(i, x) && S.is_fixed(i, y)) {
        auto left = S.comp(i, S.conn(i, Sign::plus, x), x);
        auto right = S.comp(i, S.sym(i, x), S.conn(i, Sign::plus, y));
        std::optional<Cell> rhs;
        if (left && right) rhs = S.comp(i + 1, *left, *right);
        c.instance("LEM.conn1-corner", kThm, S.conn(i, Sign::plus, xy), rhs,
                   "i", i, "x", x, "y", y, "alpha", Sign::plus);
        left = S.comp(i, S.conn(i, Sign::minus, x), S.sym(i, y));
        right = S.comp(i, y, S.conn(i, Sign::minus, y));
        rhs.reset();
        if (left && right) rhs = S.comp(i + 1, *left, *right);
        c.instance("LEM.conn1-corner", kThm, S.conn(i, Sign::minus, xy), rhs,
                   "i", i, "x", x, "y", y, "alpha", Sign::minus);
      }
    }
  });

  if (!conn)
    rep.notes.push_back("connections absent: connection lemmas skipped");
  finalize(rep);
  return rep;
}

CheckReport validate(SingleSetStructure& s, int threads) {
  CheckReport rep = check_category_axioms(s, threads);
  rep.merge(check_cubical_axioms(s, threads));
  rep.merge(check_connection_axioms(s, threads));
  rep.merge(check_derived_lemmas(s, threads));
  rep.sort_violations();
  s.validated = rep.passed();
  return rep;
}

}  // namespace cubix
