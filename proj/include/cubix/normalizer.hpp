#pragma once

#include <string>
#include <vector>

#include "cubix/classical.hpp"
#include "cubix/types.hpp"

namespace cubix {

/// One structural generator in a word: a face with a sign, a degeneracy, or
/// a connection with a sign. Indices are 1-based.
struct Token {
  enum class Kind { face, deg, conn };
  Kind kind = Kind::face;
  int index = 1;
  Sign sign = Sign::minus;  // faces and connections only

  friend bool operator==(const Token&, const Token&) = default;
};

/// A word of structural generators, applied rightmost-first.
struct StructuralWord {
  std::vector<Token> tokens;

  friend bool operator==(const StructuralWord&, const StructuralWord&) = default;
};

/// Text form: whitespace-separated `d<i><+|->`, `e<i>`, `g<i><+|->`; the
/// empty word prints as `id`.
StructuralWord parse_word(const std::string& text);
std::string print_word(const StructuralWord& w);
std::string to_string(const Token& t);

struct LevelTrace {
  int final_level = 0;
  int max_level = 0;  // highest level the word passes through
};

/// Walks the word right to left from the start level, checking each token's
/// index against its level bound: a face at level m needs index <= m and
/// lowers the level, a degeneracy needs index <= m+1 and raises it, a
/// connection needs index <= m and raises it. Throws a range error naming
/// the offending token on an ill-leveled word.
LevelTrace level_trace(const StructuralWord& w, int level);
bool well_leveled(const StructuralWord& w, int level);

/// Oriented rewrite rules on adjacent token pairs (u, v), u textually left
/// of v. A rule matches on the token kinds, an index relation between
/// u.index (i) and v.index (j), and a sign relation; the replacement tokens
/// compute their indices from i and j and their signs from u and v.
struct RuleSet {
  enum class IdxRel { lt, le, eq, gt, eq_succ, gt_succ };  // eq_succ: i == j+1
  enum class SignRel { any, equal, opposite };
  enum class IdxExpr { i, j, i_minus_1, i_plus_1, j_minus_1, j_plus_1 };
  enum class SignExpr { alpha, beta };

  struct ReplTok {
    Token::Kind kind = Token::Kind::face;
    IdxExpr index = IdxExpr::i;
    SignExpr sign = SignExpr::alpha;  // ignored for degeneracies
  };
  struct Rule {
    std::string name;
    Token::Kind left = Token::Kind::face;
    Token::Kind right = Token::Kind::face;
    IdxRel rel = IdxRel::lt;
    SignRel signs = SignRel::any;
    std::vector<ReplTok> repl;
  };

  std::vector<Rule> rules;
  // Re-check the termination measure on every rewrite step.
  bool assert_measure = true;

  /// First matching rule for the adjacent pair, or null.
  const Rule* match(const Token& u, const Token& v) const;
  static std::vector<Token> apply(const Rule& r, const Token& u,
                                  const Token& v);
};

/// The oriented cubical relations: face/degeneracy and face/connection
/// contractions with their index shifts, plus the sorting rules that push
/// every block into canonical index order (faces non-ascending, degeneracies
/// strictly descending, connections descending with equal indices only for
/// opposite signs).
RuleSet default_rules();

/// Leftmost rewriting to a normal form: a degeneracy/connection block
/// followed by a face block, both canonically ordered. Verifies the
/// termination measure strictly decreases at each step when the rule set
/// asks for it. Throws on ill-leveled input.
StructuralWord normalize(const StructuralWord& w, int level,
                         const RuleSet& rules);
StructuralWord normalize(const StructuralWord& w, int level);

/// Applies the word to a cell of C at the given level, rightmost token
/// first. The cell must sit at the word's start level and the word must stay
/// within C's level bound.
CCell eval_word(const ClassicalStructure& c, const StructuralWord& w,
                int level, CCell a);

/// True when the words act identically on every level-`level` cell of every
/// oracle they both fit in (an oracle is skipped when either word climbs
/// above its level bound).
bool words_equal_oracle(const StructuralWord& a, const StructuralWord& b,
                        int level,
                        const std::vector<ClassicalStructure>& oracles);

struct StartWord {
  StructuralWord word;
  int level = 0;
};

/// Every well-leveled nonempty word of length <= max_len whose level
/// trajectory stays within [0, max_level], paired with its start level.
std::vector<StartWord> enumerate_words(int max_len, int max_level);

/// The two nerve-based oracle structures the confluence check evaluates
/// against, sized to cover the requested level bound.
std::vector<ClassicalStructure> default_confluence_oracles(int max_level,
                                                           int threads = 1);

/// Bounded joinability audit: for every enumerated word, collects the normal
/// forms reachable under every rewriting strategy. A normal form that is
/// ill-leveled or evaluates differently from its source word is a rule bug
/// (NORM.confluence-bug); several oracle-equal normal forms of one word mean
/// the orientation is incomplete (NORM.confluence-incomplete). Bounds above
/// length 6 or level 4 are refused.
CheckReport check_confluence(const RuleSet& rules, int max_len, int max_level,
                             const std::vector<ClassicalStructure>& oracles,
                             int threads = 1);
CheckReport check_confluence(const RuleSet& rules, int max_len, int max_level,
                             int threads = 1);

}  // namespace cubix
