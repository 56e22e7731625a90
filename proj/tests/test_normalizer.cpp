#include <set>

#include "cubix/equivalence.hpp"
#include "cubix/normalizer.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cubix;

TEST_CASE("word parsing and printing round trip") {
  for (const char* text : {"d1-", "e3", "g2+", "d2+ e1 g1- d1-", "id"}) {
    auto w = parse_word(text);
    CHECK(parse_word(print_word(w)) == w);
  }
  CHECK(print_word(parse_word("id")) == "id");
  CHECK(print_word(parse_word("")) == "id");
  CHECK(parse_word("d1- id e1") == parse_word("d1- e1"));
  CHECK(to_string(Token{Token::Kind::conn, 2, Sign::plus}) == "g2+");

  CHECK_THROWS_AS(parse_word("x1"), ParseError);
  CHECK_THROWS_AS(parse_word("d1"), ParseError);
  CHECK_THROWS_AS(parse_word("e1+"), ParseError);
  CHECK_THROWS_AS(parse_word("d0-"), ParseError);
  CHECK_THROWS_AS(parse_word("e-"), ParseError);
}

TEST_CASE("level traces bound every token") {
  auto lt = level_trace(parse_word("d1- g1+ e1"), 1);
  CHECK(lt.final_level == 2);
  CHECK(lt.max_level == 3);
  CHECK(well_leveled(parse_word("d1- e1"), 1));
  CHECK_FALSE(well_leveled(parse_word("d1- d1-"), 1));
  CHECK_FALSE(well_leveled(parse_word("e2"), 0));
  try {
    level_trace(parse_word("d1- d1-"), 1);
    FAIL("expected a throw");
  } catch (const StructureError& e) {
    CHECK(std::string(e.what()).find("position 0") != std::string::npos);
  }
}

TEST_CASE("normal forms of the contraction identities") {
  auto nf = [](const char* text, int level) {
    return print_word(normalize(parse_word(text), level));
  };
  CHECK(nf("d1- e1", 1) == "id");
  CHECK(nf("d1- e2", 2) == "e1 d1-");
  CHECK(nf("d1- d2+", 2) == "d1+ d1-");
  CHECK(nf("e1 e1", 0) == "e2 e1");
  CHECK(nf("d2+ g1+", 1) == "id");
  CHECK(nf("d1+ g1-", 1) == "e1 d1+");
  CHECK(nf("id", 0) == "id");
}

TEST_CASE("normalization is idempotent and sound on the word inventory") {
  auto oracles = default_confluence_oracles(2, 2);
  std::size_t mismatches = 0, evaluated = 0;
  for (const auto& [word, level] : enumerate_words(3, 2)) {
    auto nf = normalize(word, level);
    CHECK(normalize(nf, level) == nf);
    for (const auto& c : oracles) {
      if (level > c.dim || level_trace(word, level).max_level > c.dim ||
          level_trace(nf, level).max_level > c.dim)
        continue;
      for (Cell a = 0; a < c.size(level); ++a) {
        ++evaluated;
        if (eval_word(c, word, level, {level, a}) !=
            eval_word(c, nf, level, {level, a}))
          ++mismatches;
      }
    }
  }
  CHECK(mismatches == 0);
  CHECK(evaluated > 1000);
}

TEST_CASE("word enumeration matches the frozen census") {
  auto words = enumerate_words(4, 3);
  CHECK(words.size() == 12276);
  std::set<std::pair<std::string, int>> seen;
  for (const auto& [word, level] : words) {
    CHECK_FALSE(word.tokens.empty());
    CHECK(well_leveled(word, level));
    CHECK(level_trace(word, level).max_level <= 3);
    CHECK(seen.emplace(print_word(word), level).second);
  }
}

TEST_CASE("evaluation enforces level typing") {
  auto c = fc(fx::pair2(), 2);
  CHECK_THROWS_AS(eval_word(c, parse_word("d1-"), 1, CCell{0, 0}),
                  StructureError);
  CHECK_THROWS_AS(eval_word(c, parse_word("e3 e2"), 1, CCell{1, 0}),
                  StructureError);
  CHECK(eval_word(c, parse_word("d1- e1"), 1, CCell{1, 1}) == CCell{1, 1});
}

TEST_CASE("oracle comparison separates the two projections") {
  auto oracles = default_confluence_oracles(2, 2);
  CHECK(words_equal_oracle(parse_word("d1- e1"), parse_word("id"), 1, oracles));
  CHECK_FALSE(
      words_equal_oracle(parse_word("e1 d1-"), parse_word("id"), 1, oracles));
  // words that fit no oracle compare vacuously equal
  CHECK(words_equal_oracle(parse_word("e9"), parse_word("e8"), 8, oracles));
}

TEST_CASE("a measure-increasing rule is rejected at the first step") {
  RuleSet bad;
  bad.rules.push_back({"inflate",
                       Token::Kind::face,
                       Token::Kind::face,
                       RuleSet::IdxRel::gt,
                       RuleSet::SignRel::any,
                       {{Token::Kind::face, RuleSet::IdxExpr::i,
                         RuleSet::SignExpr::alpha},
                        {Token::Kind::deg, RuleSet::IdxExpr::j,
                         RuleSet::SignExpr::alpha},
                        {Token::Kind::face, RuleSet::IdxExpr::j,
                         RuleSet::SignExpr::beta}}});
  try {
    normalize(parse_word("d2+ d1-"), 3, bad);
    FAIL("expected a throw");
  } catch (const StructureError& e) {
    CHECK(e.kind() == StructureError::Kind::inconsistency);
    CHECK(std::string(e.what()).find("termination measure") !=
          std::string::npos);
  }
}

TEST_CASE("bounded confluence is clean under the shipped orientation") {
  auto rep = check_confluence(default_rules(), 4, 3, 2);
  CHECK(rep.passed());
  CHECK(rep.count_for("NORM.confluence") == 12276);

  auto serial = check_confluence(default_rules(), 3, 2, 1);
  auto parallel = check_confluence(default_rules(), 3, 2, 4);
  CHECK(serial.violations == parallel.violations);
  CHECK(serial.instance_counts == parallel.instance_counts);
}

TEST_CASE("a misindexed sorting rule is caught by the bounded search") {
  auto rules = default_rules();
  bool patched = false;
  for (auto& r : rules.rules)
    if (r.name == "face-face-sort") {
      r.repl[0].index = RuleSet::IdxExpr::j;
      patched = true;
    }
  REQUIRE(patched);
  rules.assert_measure = false;
  auto rep = check_confluence(rules, 2, 3, 2);
  CHECK(rep.violations.size() == 16);
  bool ill = false, disagrees = false;
  for (const auto& v : rep.violations) {
    CHECK(v.axiom_id == "NORM.confluence-bug");
    ill = ill || v.detail.find("ill-leveled") != std::string::npos;
    disagrees = disagrees || v.detail.find("disagrees") != std::string::npos;
  }
  CHECK(ill);
  CHECK(disagrees);
}

TEST_CASE("an empty rule set leaves every word in normal form") {
  RuleSet none;
  auto rep = check_confluence(none, 2, 1, 2);
  CHECK(rep.passed());
  for (const auto& [word, level] : enumerate_words(2, 1))
    CHECK(normalize(word, level, none) == word);
}

TEST_CASE("confluence bounds are enforced") {
  CHECK_THROWS_AS(check_confluence(default_rules(), 7, 3, 1), StructureError);
  CHECK_THROWS_AS(check_confluence(default_rules(), 4, 5, 1), StructureError);
}
