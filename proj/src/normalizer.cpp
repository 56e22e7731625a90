#include "cubix/normalizer.hpp"

#include <algorithm>
#include <cstddef>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cubix/equivalence.hpp"
#include "cubix/models.hpp"
#include "report_runner.hpp"

namespace cubix {

namespace {

using detail::Ctx;
using detail::kViol;

const std::vector<std::string> no_names;

// Lexicographic termination measure. Components, most significant first:
// face tokens left of degeneracy-like tokens, connection count, connection
// tokens left of degeneracies, how far right and how high the
// degeneracy-like block sits (negated so sorting it rightward/upward
// decreases), and the face index sum.
using Measure = std::tuple<long, long, long, long, long>;

Measure measure_of(const std::vector<Token>& w) {
  long faces_left = 0, conns = 0, conns_left = 0, spread = 0, face_idx = 0;
  long degconn_right = 0, deg_right = 0;
  for (int p = int(w.size()) - 1; p >= 0; --p) {
    const Token& t = w[std::size_t(p)];
    if (t.kind == Token::Kind::face) {
      faces_left += degconn_right;
      face_idx += t.index;
    } else {
      if (t.kind == Token::Kind::conn) {
        ++conns;
        conns_left += deg_right;
      } else {
        ++deg_right;
      }
      ++degconn_right;
      spread += t.index + p;
    }
  }
  return {faces_left, conns, conns_left, -spread, face_idx};
}

bool rel_holds(RuleSet::IdxRel rel, int i, int j) {
  switch (rel) {
    case RuleSet::IdxRel::lt: return i < j;
    case RuleSet::IdxRel::le: return i <= j;
    case RuleSet::IdxRel::eq: return i == j;
    case RuleSet::IdxRel::gt: return i > j;
    case RuleSet::IdxRel::eq_succ: return i == j + 1;
    case RuleSet::IdxRel::gt_succ: return i > j + 1;
  }
  return false;
}

bool signs_hold(RuleSet::SignRel rel, Sign a, Sign b) {
  switch (rel) {
    case RuleSet::SignRel::any: return true;
    case RuleSet::SignRel::equal: return a == b;
    case RuleSet::SignRel::opposite: return a != b;
  }
  return false;
}

int eval_index(RuleSet::IdxExpr e, int i, int j) {
  switch (e) {
    case RuleSet::IdxExpr::i: return i;
    case RuleSet::IdxExpr::j: return j;
    case RuleSet::IdxExpr::i_minus_1: return i - 1;
    case RuleSet::IdxExpr::i_plus_1: return i + 1;
    case RuleSet::IdxExpr::j_minus_1: return j - 1;
    case RuleSet::IdxExpr::j_plus_1: return j + 1;
  }
  return i;
}

}  // namespace

std::string to_string(const Token& t) {
  std::string s;
  switch (t.kind) {
    case Token::Kind::face: s = "d"; break;
    case Token::Kind::deg: s = "e"; break;
    case Token::Kind::conn: s = "g"; break;
  }
  s += std::to_string(t.index);
  if (t.kind != Token::Kind::deg) s += sign_char(t.sign);
  return s;
}

std::string print_word(const StructuralWord& w) {
  if (w.tokens.empty()) return "id";
  std::string s;
  for (const Token& t : w.tokens) {
    if (!s.empty()) s += ' ';
    s += to_string(t);
  }
  return s;
}

StructuralWord parse_word(const std::string& text) {
  StructuralWord w;
  std::istringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    if (tok == "id") continue;
    Token t;
    switch (tok[0]) {
      case 'd': t.kind = Token::Kind::face; break;
      case 'e': t.kind = Token::Kind::deg; break;
      case 'g': t.kind = Token::Kind::conn; break;
      default: throw ParseError("bad token '" + tok + "': expected d, e or g");
    }
    std::size_t p = 1;
    int idx = 0;
    while (p < tok.size() && tok[p] >= '0' && tok[p] <= '9') {
      idx = idx * 10 + (tok[p] - '0');
      ++p;
      if (idx > 1000000) throw ParseError("bad token '" + tok + "': index too large");
    }
    if (p == 1 || idx < 1)
      throw ParseError("bad token '" + tok + "': needs an index >= 1");
    t.index = idx;
    if (t.kind == Token::Kind::deg) {
      if (p != tok.size())
        throw ParseError("bad token '" + tok + "': degeneracies take no sign");
    } else {
      if (p + 1 != tok.size() || (tok[p] != '+' && tok[p] != '-'))
        throw ParseError("bad token '" + tok + "': needs a trailing + or -");
      t.sign = tok[p] == '+' ? Sign::plus : Sign::minus;
    }
    w.tokens.push_back(t);
  }
  return w;
}

LevelTrace level_trace(const StructuralWord& w, int level) {
  if (level < 0)
    throw StructureError(StructureError::Kind::range, "negative start level");
  LevelTrace tr{level, level};
  int m = level;
  for (std::size_t q = w.tokens.size(); q-- > 0;) {
    const Token& t = w.tokens[q];
    int bound = t.kind == Token::Kind::deg ? m + 1 : m;
    if (t.index < 1 || t.index > bound)
      throw StructureError(StructureError::Kind::range,
                           "ill-leveled word: token " + to_string(t) +
                               " at position " + std::to_string(q) +
                               " cannot apply at level " + std::to_string(m));
    m += t.kind == Token::Kind::face ? -1 : 1;
    tr.max_level = std::max(tr.max_level, m);
  }
  tr.final_level = m;
  return tr;
}

bool well_leveled(const StructuralWord& w, int level) {
  if (level < 0) return false;
  int m = level;
  for (std::size_t q = w.tokens.size(); q-- > 0;) {
    const Token& t = w.tokens[q];
    int bound = t.kind == Token::Kind::deg ? m + 1 : m;
    if (t.index < 1 || t.index > bound) return false;
    m += t.kind == Token::Kind::face ? -1 : 1;
  }
  return true;
}

const RuleSet::Rule* RuleSet::match(const Token& u, const Token& v) const {
  for (const Rule& r : rules)
    if (r.left == u.kind && r.right == v.kind &&
        rel_holds(r.rel, u.index, v.index) && signs_hold(r.signs, u.sign, v.sign))
      return &r;
  return nullptr;
}

std::vector<Token> RuleSet::apply(const Rule& r, const Token& u,
                                  const Token& v) {
  std::vector<Token> out;
  out.reserve(r.repl.size());
  for (const ReplTok& rt : r.repl) {
    Token t;
    t.kind = rt.kind;
    t.index = eval_index(rt.index, u.index, v.index);
    t.sign = rt.sign == SignExpr::alpha ? u.sign : v.sign;
    out.push_back(t);
  }
  return out;
}

RuleSet default_rules() {
  using K = Token::Kind;
  using R = RuleSet::IdxRel;
  using S = RuleSet::SignRel;
  using I = RuleSet::IdxExpr;
  using G = RuleSet::SignExpr;
  auto d = [](I ix, G sg) { return RuleSet::ReplTok{K::face, ix, sg}; };
  auto e = [](I ix) { return RuleSet::ReplTok{K::deg, ix, G::alpha}; };
  auto g = [](I ix, G sg) { return RuleSet::ReplTok{K::conn, ix, sg}; };

  RuleSet rs;
  rs.rules = {
      // face past degeneracy: shift below, cancel on the diagonal, shift above
      {"face-deg-shift-low", K::face, K::deg, R::lt, S::any,
       {e(I::j_minus_1), d(I::i, G::alpha)}},
      {"face-deg-cancel", K::face, K::deg, R::eq, S::any, {}},
      {"face-deg-shift-high", K::face, K::deg, R::gt, S::any,
       {e(I::j), d(I::i_minus_1, G::alpha)}},
      // face past connection: shift below, cancel or collapse on the two
      // diagonals, shift above
      {"face-conn-shift-low", K::face, K::conn, R::lt, S::any,
       {g(I::j_minus_1, G::beta), d(I::i, G::alpha)}},
      {"face-conn-cancel", K::face, K::conn, R::eq, S::equal, {}},
      {"face-conn-cancel-high", K::face, K::conn, R::eq_succ, S::equal, {}},
      {"face-conn-collapse", K::face, K::conn, R::eq, S::opposite,
       {e(I::j), d(I::j, G::alpha)}},
      {"face-conn-collapse-high", K::face, K::conn, R::eq_succ, S::opposite,
       {e(I::j), d(I::j, G::alpha)}},
      {"face-conn-shift-high", K::face, K::conn, R::gt_succ, S::any,
       {g(I::j, G::beta), d(I::i_minus_1, G::alpha)}},
      // face block sorting toward non-ascending indices
      {"face-face-sort", K::face, K::face, R::lt, S::any,
       {d(I::j_minus_1, G::beta), d(I::i, G::alpha)}},
      // connection past degeneracy: shift below, split on the diagonal,
      // shift above
      {"conn-deg-shift-low", K::conn, K::deg, R::lt, S::any,
       {e(I::j_plus_1), g(I::i, G::alpha)}},
      {"conn-deg-split", K::conn, K::deg, R::eq, S::any, {e(I::i), e(I::i)}},
      {"conn-deg-shift-high", K::conn, K::deg, R::gt, S::any,
       {e(I::j), g(I::i_minus_1, G::alpha)}},
      // connection block sorting; equal indices stack only for equal signs
      {"conn-conn-shift-low", K::conn, K::conn, R::lt, S::any,
       {g(I::j_plus_1, G::beta), g(I::i, G::alpha)}},
      {"conn-conn-stack", K::conn, K::conn, R::eq, S::equal,
       {g(I::i_plus_1, G::alpha), g(I::i, G::alpha)}},
      // degeneracy block sorting toward strictly descending indices
      {"deg-deg-sort", K::deg, K::deg, R::le, S::any,
       {e(I::j_plus_1), e(I::i)}},
  };
  return rs;
}

StructuralWord normalize(const StructuralWord& w, int level,
                         const RuleSet& rules) {
  level_trace(w, level);
  std::vector<Token> cur = w.tokens;
  std::size_t pos = 0;
  std::size_t steps = 0;
  while (true) {
    const RuleSet::Rule* r = nullptr;
    std::size_t p = pos;
    while (p + 1 < cur.size()) {
      r = rules.match(cur[p], cur[p + 1]);
      if (r) break;
      ++p;
    }
    if (!r) {
      // a rewrite can only create redexes next to its position, so an empty
      // scan from there means none exist; rescan once from the start to keep
      // that implicit
      if (pos == 0) break;
      pos = 0;
      continue;
    }
    std::vector<Token> next;
    next.reserve(cur.size());
    next.insert(next.end(), cur.begin(), cur.begin() + long(p));
    std::vector<Token> repl = RuleSet::apply(*r, cur[p], cur[p + 1]);
    next.insert(next.end(), repl.begin(), repl.end());
    next.insert(next.end(), cur.begin() + long(p) + 2, cur.end());
    if (rules.assert_measure && !(measure_of(next) < measure_of(cur)))
      throw StructureError(
          StructureError::Kind::inconsistency,
          "rewrite step does not decrease the termination measure: " +
              print_word({cur}) + " -> " + print_word({next}) + " (rule " +
              r->name + ")");
    cur = std::move(next);
    pos = p > 0 ? p - 1 : 0;
    if (++steps > 100000)
      throw StructureError(StructureError::Kind::inconsistency,
                           "rewriting exceeded the step budget on " +
                               print_word(w));
  }
  return {std::move(cur)};
}

StructuralWord normalize(const StructuralWord& w, int level) {
  return normalize(w, level, default_rules());
}

CCell eval_word(const ClassicalStructure& c, const StructuralWord& w,
                int level, CCell a) {
  if (a.level != level)
    throw StructureError(StructureError::Kind::domain,
                         "cell level does not match the word level");
  LevelTrace tr = level_trace(w, level);
  if (tr.max_level > c.dim)
    throw StructureError(StructureError::Kind::range,
                         "word climbs to level " +
                             std::to_string(tr.max_level) +
                             " but the structure stops at " +
                             std::to_string(c.dim));
  for (std::size_t q = w.tokens.size(); q-- > 0;) {
    const Token& t = w.tokens[q];
    switch (t.kind) {
      case Token::Kind::face: a = c.face(t.index, t.sign, a); break;
      case Token::Kind::deg: a = c.degenerate(t.index, a); break;
      case Token::Kind::conn: a = c.connection(t.index, t.sign, a); break;
    }
  }
  return a;
}

bool words_equal_oracle(const StructuralWord& a, const StructuralWord& b,
                        int level,
                        const std::vector<ClassicalStructure>& oracles) {
  for (const ClassicalStructure& c : oracles) {
    if (level > c.dim) continue;
    if (!well_leveled(a, level) || !well_leveled(b, level)) continue;
    if (level_trace(a, level).max_level > c.dim ||
        level_trace(b, level).max_level > c.dim)
      continue;
    for (std::size_t x = 0; x < c.size(level); ++x) {
      CCell start{level, Cell(x)};
      if (eval_word(c, a, level, start) != eval_word(c, b, level, start))
        return false;
    }
  }
  return true;
}

std::vector<StartWord> enumerate_words(int max_len, int max_level) {
  std::vector<StartWord> out;
  for (int lvl = 0; lvl <= max_level; ++lvl) {
    // words built right to left; level is where the next prepended token
    // applies
    struct Partial {
      std::vector<Token> tokens;
      int level;
    };
    std::vector<Partial> layer{{{}, lvl}};
    for (int len = 1; len <= max_len; ++len) {
      std::vector<Partial> next;
      for (const Partial& pw : layer) {
        const int m = pw.level;
        std::vector<Token> cands;
        for (int i = 1; i <= m; ++i) {
          cands.push_back({Token::Kind::face, i, Sign::minus});
          cands.push_back({Token::Kind::face, i, Sign::plus});
        }
        if (m + 1 <= max_level) {
          for (int i = 1; i <= m + 1; ++i)
            cands.push_back({Token::Kind::deg, i, Sign::minus});
          for (int i = 1; i <= m; ++i) {
            cands.push_back({Token::Kind::conn, i, Sign::minus});
            cands.push_back({Token::Kind::conn, i, Sign::plus});
          }
        }
        for (const Token& t : cands) {
          Partial ext;
          ext.tokens.reserve(pw.tokens.size() + 1);
          ext.tokens.push_back(t);
          ext.tokens.insert(ext.tokens.end(), pw.tokens.begin(),
                            pw.tokens.end());
          ext.level = m + (t.kind == Token::Kind::face ? -1 : 1);
          next.push_back(std::move(ext));
        }
      }
      layer = std::move(next);
      for (const Partial& pw : layer) out.push_back({{pw.tokens}, lvl});
    }
  }
  return out;
}

std::vector<ClassicalStructure> default_confluence_oracles(int max_level,
                                                           int threads) {
  const int pair_dim = std::clamp(max_level, 1, 3);
  const int chain_dim = std::clamp(max_level + 1, 2, 4);
  std::vector<ClassicalStructure> out;
  out.push_back(fc(cube_nerve(BaseKind::pair_groupoid, 2, pair_dim, true,
                              default_cell_budget(), threads),
                   threads));
  out.push_back(fc(cube_nerve(BaseKind::chain_poset, 2, chain_dim, true,
                              default_cell_budget(), threads),
                   threads));
  return out;
}

CheckReport check_confluence(const RuleSet& rules, int max_len, int max_level,
                             const std::vector<ClassicalStructure>& oracles,
                             int threads) {
  if (max_len < 0 || max_len > 6 || max_level < 0 || max_level > 4)
    throw StructureError(StructureError::Kind::config,
                         "confluence budget is length <= 6 at level <= 4");
  std::vector<StartWord> items = enumerate_words(max_len, max_level);

  CheckReport rep;
  detail::run_items(no_names, items.size(), threads, rep, [&](Ctx& ctx,
                                                              std::size_t ii) {
    const StartWord& it = items[ii];
    ctx.count("NORM.confluence");

    // normal forms under every strategy
    std::set<std::string> nf_texts;
    std::unordered_set<std::string> seen;
    std::vector<std::vector<Token>> stack{it.word.tokens};
    std::size_t visited = 0;
    while (!stack.empty()) {
      std::vector<Token> u = std::move(stack.back());
      stack.pop_back();
      if (!seen.insert(print_word({u})).second) continue;
      if (++visited > 200000)
        throw StructureError(StructureError::Kind::config,
                             "confluence search exceeded its budget on " +
                                 print_word(it.word));
      bool any = false;
      for (std::size_t p = 0; p + 1 < u.size(); ++p)
        if (const RuleSet::Rule* r = rules.match(u[p], u[p + 1])) {
          any = true;
          std::vector<Token> v;
          v.reserve(u.size());
          v.insert(v.end(), u.begin(), u.begin() + long(p));
          std::vector<Token> repl = RuleSet::apply(*r, u[p], u[p + 1]);
          v.insert(v.end(), repl.begin(), repl.end());
          v.insert(v.end(), u.begin() + long(p) + 2, u.end());
          stack.push_back(std::move(v));
        }
      if (!any) nf_texts.insert(print_word({u}));
    }

    const std::string wtxt = print_word(it.word);
    const std::string at = "word=" + wtxt + " level=" + std::to_string(it.level);
    bool bug = false;
    for (const std::string& nft : nf_texts) {
      StructuralWord nf = parse_word(nft);
      if (!well_leveled(nf, it.level)) {
        bug = true;
        Violation v;
        v.axiom_id = "NORM.confluence-bug";
        v.severity = kViol;
        v.detail = at + " normal form " + nft + " is ill-leveled";
        ctx.viols.push_back(std::move(v));
      } else if (!words_equal_oracle(it.word, nf, it.level, oracles)) {
        bug = true;
        Violation v;
        v.axiom_id = "NORM.confluence-bug";
        v.severity = kViol;
        v.detail = at + " normal form " + nft + " disagrees with its source "
                        "on an oracle";
        ctx.viols.push_back(std::move(v));
      }
    }
    if (!bug && nf_texts.size() >= 2) {
      std::string all;
      for (const std::string& nft : nf_texts) {
        if (!all.empty()) all += " | ";
        all += nft;
      }
      Violation v;
      v.axiom_id = "NORM.confluence-incomplete";
      v.severity = kViol;
      v.detail = at + " has oracle-equal normal forms: " + all;
      ctx.viols.push_back(std::move(v));
    }
  });
  detail::finalize(rep);
  return rep;
}

CheckReport check_confluence(const RuleSet& rules, int max_len, int max_level,
                             int threads) {
  std::vector<ClassicalStructure> oracles =
      default_confluence_oracles(max_level, threads);
  return check_confluence(rules, max_len, max_level, oracles, threads);
}

}  // namespace cubix
