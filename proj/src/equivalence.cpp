#include "cubix/equivalence.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cubix/inverses.hpp"
#include "cubix/laws.hpp"
#include "report_runner.hpp"

namespace cubix {

namespace {

using detail::Ctx;
using detail::kThm;
using detail::kViol;

const std::vector<std::string> no_names;

void require_validated(bool ok, const char* what) {
  if (!ok)
    throw StructureError(StructureError::Kind::domain,
                         std::string(what) + " requires a validated structure");
}

std::string lvl_name(const ClassicalStructure& c, int k, Cell o) {
  if (o == no_cell) return "undef";
  return "C" + std::to_string(k) + ":" + c.names[std::size_t(k)][o];
}

void text_fail(Ctx& ctx, const char* id, Severity sev, std::string detail) {
  Violation v;
  v.axiom_id = id;
  v.severity = sev;
  v.detail = std::move(detail);
  ctx.viols.push_back(std::move(v));
}

}  // namespace

LevelIndex level_index(const SingleSetStructure& s) {
  LevelIndex ix;
  const int n = s.dim;
  ix.carrier.resize(std::size_t(n) + 1);
  ix.to_level.assign(std::size_t(n) + 1,
                     std::vector<Cell>(s.size(), no_cell));
  for (int k = 0; k <= n; ++k) {
    std::vector<int> dirs;
    for (int j = k + 1; j <= n; ++j) dirs.push_back(j);
    ix.carrier[std::size_t(k)] = fixed_set(s, dirs);
    for (std::size_t o = 0; o < ix.carrier[std::size_t(k)].size(); ++o)
      ix.to_level[std::size_t(k)][ix.carrier[std::size_t(k)][o]] = Cell(o);
  }
  return ix;
}

ClassicalStructure fc(const SingleSetStructure& s, int threads) {
  require_validated(s.validated, "fc");
  const int n = s.dim;
  LevelIndex ix = level_index(s);

  ClassicalStructure c;
  std::vector<std::size_t> counts(std::size_t(n) + 1);
  for (int k = 0; k <= n; ++k) counts[std::size_t(k)] = ix.carrier[std::size_t(k)].size();
  c.init_levels(n, counts, s.has_connections());
  for (int k = 0; k <= n; ++k)
    for (std::size_t o = 0; o < counts[std::size_t(k)]; ++o)
      c.names[std::size_t(k)][o] = s.names[ix.carrier[std::size_t(k)][o]];

  auto graded = [&](int k, Cell u) {
    Cell o = ix.to_level[std::size_t(k)][u];
    if (o == no_cell)
      throw StructureError(StructureError::Kind::inconsistency,
                           "graded image of " + s.names[u] +
                               " escapes level " + std::to_string(k));
    return o;
  };

  for (int k = 1; k <= n; ++k) {
    for (std::size_t o = 0; o < counts[std::size_t(k)]; ++o) {
      Cell x = ix.carrier[std::size_t(k)][o];
      for (int i = 1; i <= k; ++i)
        for (Sign a : {Sign::minus, Sign::plus}) {
          Cell u = s.face(i, a, x);
          for (int t = i; t <= k - 1; ++t) u = s.sym(t, u);
          c.cface[std::size_t(k)][i - 1][sign_index(a)][o] = graded(k - 1, u);
        }
    }
    for (std::size_t o = 0; o < counts[std::size_t(k) - 1]; ++o) {
      Cell below = ix.carrier[std::size_t(k) - 1][o];
      for (int i = 1; i <= k; ++i) {
        Cell u = below;
        for (int t = k - 1; t >= i; --t) u = s.inv_sym(t, u);
        c.deg[std::size_t(k)][i - 1][o] = graded(k, u);
        if (s.has_connections() && i <= k - 1)
          for (Sign a : {Sign::minus, Sign::plus})
            c.cconn[std::size_t(k)][i - 1][sign_index(a)][o] =
                graded(k, s.conn(i, a, u));
      }
    }
    for (int i = 1; i <= k; ++i)
      for (const auto& [x, y] : s.comp_[i - 1].pairs) {
        Cell ox = ix.to_level[std::size_t(k)][x];
        Cell oy = ix.to_level[std::size_t(k)][y];
        if (ox == no_cell || oy == no_cell) continue;
        Cell z = *s.comp(i, x, y);
        c.set_comp(i, {k, ox}, {k, oy}, {k, graded(k, z)});
      }
  }
  c.seal();

  CheckReport rep = validate(c, threads);
  if (!rep.passed())
    throw StructureError(StructureError::Kind::inconsistency,
                         "graded image failed self-validation, first: " +
                             rep.violations.front().axiom_id + " " +
                             rep.violations.front().detail);
  return c;
}

SingleSetStructure fs(const ClassicalStructure& c, int threads) {
  require_validated(c.validated, "fs");
  const int n = c.dim;
  const std::size_t top = c.size(n);

  SingleSetStructure s;
  s.init_tables(n, top, c.has_connections());
  s.names = c.names[std::size_t(n)];
  for (std::size_t xi = 0; xi < top; ++xi) {
    Cell x = Cell(xi);
    CCell a{n, x};
    for (int i = 1; i <= n; ++i) {
      for (Sign al : {Sign::minus, Sign::plus})
        s.face_[i - 1][sign_index(al)][xi] =
            c.degenerate(i, c.face(i, al, a)).idx;
      if (i <= n - 1) {
        s.sym_[i - 1][xi] = c.degenerate(i + 1, c.face(i, Sign::minus, a)).idx;
        s.inv_sym_[i - 1][xi] =
            c.degenerate(i, c.face(i + 1, Sign::minus, a)).idx;
        if (c.has_connections())
          for (Sign al : {Sign::minus, Sign::plus})
            s.conn_[i - 1][sign_index(al)][xi] =
                c.connection(i, al, c.face(i, al, a)).idx;
      }
    }
  }
  for (int i = 1; i <= n; ++i)
    s.comp_[i - 1].map = c.ccomp[std::size_t(n)][i - 1].map;
  s.seal();

  CheckReport rep = validate(s, threads);
  if (!rep.passed())
    throw StructureError(StructureError::Kind::inconsistency,
                         "top-level collapse failed self-validation, first: " +
                             rep.violations.front().axiom_id + " " +
                             rep.violations.front().detail);
  return s;
}

CheckReport check_mu(const SingleSetStructure& s, int threads) {
  require_validated(s.validated, "check_mu");
  ClassicalStructure c = fc(s, threads);
  SingleSetStructure r = fs(c, threads);
  const int n = s.dim;

  CheckReport rep;
  // The top level lists every cell in carrier order, so the identification
  // with the round trip is the identity on indices.
  if (r.size() != s.size()) {
    rep.violations.push_back(
        {"MU.carrier", kThm, "round trip changed the carrier size", {}});
    detail::finalize(rep);
    return rep;
  }

  // Composition domains are global data; compare the sealed pair lists.
  for (int i = 1; i <= n; ++i) {
    const auto& sp = s.comp_[i - 1].pairs;
    const auto& rp = r.comp_[i - 1].pairs;
    if (sp == rp) continue;
    std::size_t a = 0, b = 0;
    while (a < sp.size() || b < rp.size()) {
      bool only_s = b >= rp.size() || (a < sp.size() && sp[a] < rp[b]);
      bool only_r = a >= sp.size() || (b < rp.size() && rp[b] < sp[a]);
      if (only_s) {
        rep.violations.push_back(
            {"MU.comp", kThm,
             "i=" + std::to_string(i) + " x=" + s.names[sp[a].first] +
                 " y=" + s.names[sp[a].second] + " defined only in the source",
             {sp[a].first, sp[a].second}});
        ++a;
      } else if (only_r) {
        rep.violations.push_back(
            {"MU.comp", kThm,
             "i=" + std::to_string(i) + " x=" + s.names[rp[b].first] +
                 " y=" + s.names[rp[b].second] +
                 " defined only in the round trip",
             {rp[b].first, rp[b].second}});
        ++b;
      } else {
        ++a;
        ++b;
      }
    }
  }

  detail::run_items(s.names, s.size(), threads, rep, [&](Ctx& ctx,
                                                         std::size_t xi) {
    Cell x = Cell(xi);
    for (int i = 1; i <= n; ++i) {
      for (Sign al : {Sign::minus, Sign::plus})
        ctx.instance("MU.face", kThm, r.face(i, al, x), s.face(i, al, x), "i",
                     i, "alpha", al, "x", x);
      auto [pb, pe] = s.comp_pairs_of(i, x);
      for (const auto* pp = pb; pp != pe; ++pp)
        ctx.instance("MU.comp", kThm, r.comp(i, x, pp->second),
                     s.comp(i, x, pp->second), "i", i, "x", x, "y",
                     pp->second);
      if (i <= n - 1) {
        ctx.instance("MU.sym-global", kThm, r.sym(i, x),
                     s.sym(i, s.face(i, Sign::minus, x)), "i", i, "x", x);
        if (s.is_fixed(i, x))
          ctx.instance("MU.sym-typed", kThm, r.sym(i, x), s.sym(i, x), "i", i,
                       "x", x);
        ctx.instance("MU.invsym-global", kThm, r.inv_sym(i, x),
                     s.inv_sym(i, s.face(i + 1, Sign::minus, x)), "i", i, "x",
                     x);
        if (s.is_fixed(i + 1, x))
          ctx.instance("MU.invsym-typed", kThm, r.inv_sym(i, x),
                       s.inv_sym(i, x), "i", i, "x", x);
        if (s.has_connections())
          for (Sign al : {Sign::minus, Sign::plus}) {
            ctx.instance("MU.conn-global", kThm, r.conn(i, al, x),
                         s.conn(i, al, s.face(i, al, x)), "i", i, "alpha", al,
                         "x", x);
            if (s.is_fixed(i, x))
              ctx.instance("MU.conn-typed", kThm, r.conn(i, al, x),
                           s.conn(i, al, x), "i", i, "alpha", al, "x", x);
          }
      }
    }
  });

  if (!s.has_connections())
    rep.notes.push_back("MU.conn: skipped, no connection tables");
  detail::finalize(rep);
  return rep;
}

CheckReport check_eta(const ClassicalStructure& c, int threads) {
  require_validated(c.validated, "check_eta");
  const int n = c.dim;
  CheckReport rep;

  // Well-definedness first: the padded representative of a cell only
  // determines a class when every degeneracy is injective.
  bool injective = true;
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= k; ++i) {
      std::vector<Cell> pre(c.size(k), no_cell);
      for (std::size_t a = 0; a < c.size(k - 1); ++a) {
        ++rep.instance_counts["ETA.deg-injective"];
        Cell im = c.deg[std::size_t(k)][i - 1][a];
        if (pre[im] != no_cell) {
          injective = false;
          rep.violations.push_back(
              {"ETA.deg-injective", kViol,
               "k=" + std::to_string(k) + " i=" + std::to_string(i) +
                   " a=" + lvl_name(c, k - 1, pre[im]) +
                   " b=" + lvl_name(c, k - 1, Cell(a)) +
                   " image=" + lvl_name(c, k, im),
               {}});
        } else {
          pre[im] = Cell(a);
        }
      }
    }
  if (!injective) {
    rep.notes.push_back(
        "round trip skipped: degeneracies are not injective, padded "
        "representatives do not determine classes");
    detail::finalize(rep);
    return rep;
  }

  SingleSetStructure s2 = fs(c, threads);
  ClassicalStructure c2 = fc(s2, threads);
  LevelIndex ix2 = level_index(s2);

  // eta[k][a]: round-trip ordinal of the diagonal degeneracy padding of a.
  std::vector<std::vector<Cell>> eta(std::size_t(n) + 1);
  for (int k = 0; k <= n; ++k) {
    eta[std::size_t(k)].assign(c.size(k), no_cell);
    for (std::size_t a = 0; a < c.size(k); ++a) {
      CCell u{k, Cell(a)};
      for (int j = k + 1; j <= n; ++j) u = c.degenerate(j, u);
      eta[std::size_t(k)][a] = ix2.to_level[std::size_t(k)][u.idx];
    }
  }

  for (int k = 0; k <= n; ++k) {
    if (c.size(k) != c2.size(k))
      rep.violations.push_back(
          {"ETA.bijective", kThm,
           "level " + std::to_string(k) + " size changed from " +
               std::to_string(c.size(k)) + " to " + std::to_string(c2.size(k)),
           {}});
    std::vector<Cell> hit(c2.size(k), no_cell);
    for (std::size_t a = 0; a < c.size(k); ++a) {
      ++rep.instance_counts["ETA.bijective"];
      Cell o = eta[std::size_t(k)][a];
      if (o == no_cell)
        rep.violations.push_back(
            {"ETA.bijective", kThm,
             "padding of " + lvl_name(c, k, Cell(a)) +
                 " is not fixed above level " + std::to_string(k) +
                 " in the round trip",
             {}});
      else if (hit[o] != no_cell)
        rep.violations.push_back({"ETA.bijective", kThm,
                                  "paddings of " + lvl_name(c, k, hit[o]) +
                                      " and " + lvl_name(c, k, Cell(a)) +
                                      " collide",
                                  {}});
      else
        hit[o] = Cell(a);
    }
  }

  struct Item {
    int k;
    Cell a;
  };
  std::vector<Item> items;
  for (int k = 0; k <= n; ++k)
    for (std::size_t a = 0; a < c.size(k); ++a) items.push_back({k, Cell(a)});

  detail::run_items(no_names, items.size(), threads, rep, [&](Ctx& ctx,
                                                              std::size_t ii) {
    const int k = items[ii].k;
    const Cell a = items[ii].a;
    const CCell ak{k, a};
    const Cell ea = eta[std::size_t(k)][a];
    auto where = [&](int i) {
      return "k=" + std::to_string(k) + " i=" + std::to_string(i) +
             " a=" + lvl_name(c, k, a);
    };

    // padding then stripping along the diagonals returns the cell
    {
      ctx.count("ETA.inverse");
      CCell u = ak;
      for (int j = k + 1; j <= n; ++j) u = c.degenerate(j, u);
      CCell v{n, u.idx};
      for (int j = n; j > k; --j) v = c.face(j, Sign::minus, v);
      if (v.idx != a)
        text_fail(ctx, "ETA.inverse", kThm,
                  "k=" + std::to_string(k) + " a=" + lvl_name(c, k, a) +
                      " strips back to " + lvl_name(c, k, v.idx));
    }
    // stripping a round-trip cell then padding returns it
    if (ea != no_cell) {
      ctx.count("ETA.inverse");
      Cell w = ix2.carrier[std::size_t(k)][ea];
      CCell v{n, w};
      for (int j = n; j > k; --j) v = c.face(j, Sign::minus, v);
      if (eta[std::size_t(k)][v.idx] != ea)
        text_fail(ctx, "ETA.inverse", kThm,
                  "k=" + std::to_string(k) + " b=" + lvl_name(c2, k, ea) +
                      " pads back to " +
                      lvl_name(c2, k, eta[std::size_t(k)][v.idx]));
    }

    for (int i = 1; i <= k; ++i)
      for (Sign al : {Sign::minus, Sign::plus}) {
        ctx.count("ETA.face");
        Cell lhs = eta[std::size_t(k) - 1][c.face(i, al, ak).idx];
        Cell rhs = ea == no_cell ? no_cell : c2.face(i, al, {k, ea}).idx;
        if (lhs == no_cell || rhs == no_cell || lhs != rhs)
          text_fail(ctx, "ETA.face", kThm,
                    where(i) + " alpha=" + sign_char(al) + " lhs=" +
                        lvl_name(c2, k - 1, lhs) + " rhs=" +
                        lvl_name(c2, k - 1, rhs));
      }

    if (k + 1 <= n) {
      for (int i = 1; i <= k + 1; ++i) {
        ctx.count("ETA.deg");
        Cell lhs = eta[std::size_t(k) + 1][c.degenerate(i, ak).idx];
        Cell rhs = ea == no_cell ? no_cell : c2.degenerate(i, {k, ea}).idx;
        if (lhs == no_cell || rhs == no_cell || lhs != rhs)
          text_fail(ctx, "ETA.deg", kThm,
                    where(i) + " lhs=" + lvl_name(c2, k + 1, lhs) +
                        " rhs=" + lvl_name(c2, k + 1, rhs));
      }
      if (c.has_connections() && k >= 1)
        for (int i = 1; i <= k; ++i)
          for (Sign al : {Sign::minus, Sign::plus}) {
            ctx.count("ETA.conn");
            Cell lhs = eta[std::size_t(k) + 1][c.connection(i, al, ak).idx];
            Cell rhs =
                ea == no_cell ? no_cell : c2.connection(i, al, {k, ea}).idx;
            if (lhs == no_cell || rhs == no_cell || lhs != rhs)
              text_fail(ctx, "ETA.conn", kThm,
                        where(i) + " alpha=" + sign_char(al) + " lhs=" +
                            lvl_name(c2, k + 1, lhs) + " rhs=" +
                            lvl_name(c2, k + 1, rhs));
          }
    }

    for (int i = 1; i <= k; ++i) {
      auto [pb, pe] = c.comp_pairs_of(i, ak);
      for (const auto* pp = pb; pp != pe; ++pp) {
        ctx.count("ETA.comp");
        Cell b = pp->second;
        Cell z = c.comp(i, ak, {k, b})->idx;
        Cell eb = eta[std::size_t(k)][b];
        Cell ez = eta[std::size_t(k)][z];
        if (ea == no_cell || eb == no_cell || ez == no_cell) {
          text_fail(ctx, "ETA.comp", kThm,
                    where(i) + " b=" + lvl_name(c, k, b) +
                        ": an endpoint has no round-trip image");
          continue;
        }
        auto rz = c2.comp(i, {k, ea}, {k, eb});
        if (!rz || rz->idx != ez)
          text_fail(ctx, "ETA.comp", kThm,
                    where(i) + " b=" + lvl_name(c, k, b) + " lhs=" +
                        lvl_name(c2, k, ez) + " rhs=" +
                        lvl_name(c2, k, rz ? rz->idx : no_cell));
      }
    }
  });

  // composition domains must be in bijection as well; with the value checks
  // above it is enough to compare their sizes
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= k; ++i) {
      ++rep.instance_counts["ETA.comp"];
      std::size_t sc = c.ccomp[std::size_t(k)][i - 1].pairs.size();
      std::size_t sc2 = c2.ccomp[std::size_t(k)][i - 1].pairs.size();
      if (sc != sc2)
        rep.violations.push_back(
            {"ETA.comp", kThm,
             "k=" + std::to_string(k) + " i=" + std::to_string(i) +
                 " domain size changed from " + std::to_string(sc) + " to " +
                 std::to_string(sc2),
             {}});
    }

  detail::finalize(rep);
  return rep;
}

CheckReport check_inverse_transport(const SingleSetStructure& s, int p,
                                    int threads) {
  require_validated(s.validated, "check_inverse_transport");
  if (s.dim >= 2 && !s.has_connections())
    throw StructureError(StructureError::Kind::domain,
                         "inverse transport needs connection tables");
  if (p < 0 || p > s.dim)
    throw StructureError(StructureError::Kind::domain,
                         "divisibility threshold out of range");
  const int n = s.dim;

  LevelIndex ix = level_index(s);
  ClassicalStructure c = fc(s, threads);
  SingleSetStructure s2 = fs(c, threads);

  auto inverses_of = [n](const SingleSetStructure& t) {
    std::vector<std::vector<Cell>> inv(std::size_t(n),
                                       std::vector<Cell>(t.size(), no_cell));
    for (int i = 1; i <= n; ++i)
      for (Cell x = 0; x < t.size(); ++x)
        if (auto cert = ri_inverse(t, i, x)) inv[i - 1][x] = cert->inverse;
    return inv;
  };
  std::vector<std::vector<Cell>> inv = inverses_of(s);
  std::vector<std::vector<Cell>> inv2 = inverses_of(s2);

  struct Item {
    int k;
    int i;
    Cell o;
  };
  std::vector<Item> items;
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= k; ++i)
      for (std::size_t o = 0; o < ix.carrier[std::size_t(k)].size(); ++o)
        items.push_back({k, i, Cell(o)});

  CheckReport rep;
  // forward: a direction-i inverse in the source forces a graded inverse
  // with the carried value
  detail::run_items(no_names, items.size(), threads, rep, [&](Ctx& ctx,
                                                              std::size_t ii) {
    const auto [k, i, o] = items[ii];
    Cell x = ix.carrier[std::size_t(k)][o];
    Cell rx = inv[i - 1][x];
    if (rx == no_cell) return;
    ctx.count("ITR.fc-invertible");
    auto rb = R_inverse(c, i, {k, o});
    std::string at = "k=" + std::to_string(k) + " i=" + std::to_string(i) +
                     " x=" + s.names[x];
    if (!rb) {
      text_fail(ctx, "ITR.fc-invertible", kThm,
                at + " is invertible but its graded image is not");
      return;
    }
    ctx.count("ITR.fc-match");
    Cell want = ix.to_level[std::size_t(k)][rx];
    if (rb->idx != want)
      text_fail(ctx, "ITR.fc-match", kThm,
                at + " graded inverse " + lvl_name(c, k, rb->idx) +
                    " does not carry the source inverse " + s.names[rx]);
  });

  // backward: a graded inverse comes back through the top-level collapse
  detail::run_items(no_names, items.size(), threads, rep, [&](Ctx& ctx,
                                                              std::size_t ii) {
    const auto [k, i, o] = items[ii];
    auto rb = R_inverse(c, i, {k, o});
    if (!rb) return;
    ctx.count("ITR.fs-invertible");
    CCell u{k, o};
    for (int j = k + 1; j <= n; ++j) u = c.degenerate(j, u);
    std::string at = "k=" + std::to_string(k) + " i=" + std::to_string(i) +
                     " a=" + lvl_name(c, k, o);
    if (inv2[i - 1][u.idx] == no_cell) {
      text_fail(ctx, "ITR.fs-invertible", kThm,
                at + " has a graded inverse but its padded image " +
                    s2.names[u.idx] + " is not invertible");
      return;
    }
    ctx.count("ITR.fs-match");
    CCell v{k, rb->idx};
    for (int j = k + 1; j <= n; ++j) v = c.degenerate(j, v);
    if (inv2[i - 1][u.idx] != v.idx)
      text_fail(ctx, "ITR.fs-match", kThm,
                at + " padded inverse " + s2.names[inv2[i - 1][u.idx]] +
                    " does not match the padded graded inverse " +
                    s2.names[v.idx]);
  });

  CheckReport np_s = check_np(s, p, threads);
  CheckReport np_c = check_classical_np(c, p, threads);
  ++rep.instance_counts["ITR.np-equiv"];
  if (np_s.passed() != np_c.passed())
    rep.violations.push_back(
        {"ITR.np-equiv", kThm,
         "divisibility above " + std::to_string(p) + " holds on " +
             (np_s.passed() ? "the single-set side only"
                            : "the graded side only") +
             " (" + std::to_string(np_s.violations.size()) + " vs " +
             std::to_string(np_c.violations.size()) + " witnesses)",
         {}});
  rep.notes.push_back("divisibility witnesses above " + std::to_string(p) +
                      ": " + std::to_string(np_s.violations.size()) +
                      " single-set, " + std::to_string(np_c.violations.size()) +
                      " graded");

  detail::finalize(rep);
  return rep;
}

}  // namespace cubix
