#include "cubix/equivalence.hpp"
#include "cubix/inverses.hpp"
#include "cubix/laws.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cubix;

TEST_CASE("level index partitions the carrier by level") {
  auto idx = level_index(fx::pair2());
  REQUIRE(idx.carrier.size() == 3);
  CHECK(idx.carrier[0].size() == 2);
  CHECK(idx.carrier[1].size() == 4);
  CHECK(idx.carrier[2].size() == 16);
  for (int k = 0; k <= 2; ++k)
    for (std::size_t o = 0; o < idx.carrier[k].size(); ++o)
      CHECK(idx.to_level[k][idx.carrier[k][o]] == Cell(o));
}

TEST_CASE("grading keeps names and computes ladder faces") {
  auto c = fc(fx::pair2(), 2);
  const auto& s = fx::pair2();
  // top level is the carrier in its own order
  CHECK(c.names[2] == s.names);
  auto sq = CCell{2, fx::by_name(s, "(a,b,b,a)")};
  auto edge = c.face(1, Sign::minus, sq);
  CHECK(c.name(edge) == "(a,a,b,b)");
}

TEST_CASE("grading requires a validated structure") {
  auto s = fx::pair2();
  s.validated = false;
  CHECK_THROWS_AS(fc(s), StructureError);
  auto c = fc(fx::pair2());
  c.validated = false;
  CHECK_THROWS_AS(fs(c), StructureError);
}

TEST_CASE("top level collapse undoes the grading") {
  const auto& s = fx::pair2();
  auto s2 = fs(fc(s, 2), 2);
  CHECK(s2.names == s.names);
  CHECK(s2.face_ == s.face_);
  for (int i = 1; i <= 2; ++i) CHECK(s2.comp_[i - 1].pairs == s.comp_[i - 1].pairs);

  // symmetry tables only agree after collapsing onto the matching boundary;
  // check_mu asserts the full contract, here we spot check the global form
  for (Cell x = 0; x < s.size(); ++x) {
    CHECK(s2.sym(1, x) == s.sym(1, s.face(1, Sign::minus, x)));
    CHECK(s2.inv_sym(1, x) == s.inv_sym(1, s.face(2, Sign::minus, x)));
  }
}

TEST_CASE("round trip comparisons are empty on the fixture family") {
  CHECK(check_mu(fx::pair2(), 2).passed());
  CHECK(check_mu(fx::chain2(), 2).passed());
  CHECK(check_mu(fx::discrete2(), 2).passed());
  CHECK(check_mu(fx::terminal3(), 2).passed());
  CHECK(check_mu(fx::pair2(), 2).checked_count == 272);
  CHECK(check_mu(fx::chain2(), 2).checked_count == 80);
  CHECK(check_mu(fx::terminal3(), 2).checked_count == 25);

  CHECK(check_eta(fc(fx::pair2(), 2), 2).passed());
  CHECK(check_eta(fc(fx::chain2(), 2), 2).passed());
  CHECK(check_eta(fc(fx::pair2(), 2), 2).checked_count == 305);
  CHECK(check_eta(fc(fx::terminal3(), 2), 2).checked_count == 54);
}

TEST_CASE("translated images pass the other side's suites") {
  auto c = fc(fx::chain2(), 2);
  CHECK(check_classical_axioms(c, 2).passed());
  auto s = fs(c, 2);
  CHECK(check_category_axioms(s, 2).passed());
  CHECK(check_cubical_axioms(s, 2).passed());
  CHECK(check_connection_axioms(s, 2).passed());
  CHECK(check_derived_lemmas(s, 2).passed());
}

TEST_CASE("broken degeneracies skip the round trip with a report") {
  auto c = fc(fx::pair2(), 2);
  c.deg[1][0][1] = c.deg[1][0][0];
  auto rep = check_eta(c, 2);
  CHECK_FALSE(rep.passed());
  CHECK(rep.violations[0].axiom_id == "ETA.deg-injective");
  REQUIRE(rep.notes.size() == 1);
  CHECK(rep.notes[0].find("round trip skipped") != std::string::npos);
  CHECK(rep.count_for("ETA.bijective") == 0);
}

TEST_CASE("grading truncation commutes with carrier truncation") {
  auto t1 = truncate(fx::pair2(), 1);
  auto ct = fc(t1, 2);
  auto c = fc(fx::pair2(), 2);
  CHECK(ct.names[0] == c.names[0]);
  CHECK(ct.names[1] == c.names[1]);
  for (Cell x = 0; x < ct.size(1); ++x)
    CHECK(ct.face(1, Sign::plus, {1, x}) == c.face(1, Sign::plus, {1, x}));
}

TEST_CASE("invertibility survives translation in both directions") {
  auto rep = check_inverse_transport(fx::pair2(), 0, 2);
  CHECK(rep.passed());
  REQUIRE(rep.notes.size() == 1);
  CHECK(rep.notes[0] == "divisibility witnesses above 0: 0 single-set, 0 graded");

  auto chain = check_inverse_transport(fx::chain2(), 0, 2);
  CHECK(chain.passed());
  REQUIRE(chain.notes.size() == 1);
  CHECK(chain.notes[0] == "divisibility witnesses above 0: 1 single-set, 1 graded");

  CHECK_THROWS_AS(check_inverse_transport(fx::pair2(), 5, 2), StructureError);
  auto bare = cube_nerve(BaseKind::pair_groupoid, 2, 2, false);
  CHECK_THROWS_AS(check_inverse_transport(bare, 0, 2), StructureError);
}

TEST_CASE("divisibility witnesses correspond across the equivalence") {
  auto single = check_np(fx::chain2(), 0, 2);
  auto graded = check_classical_np(fc(fx::chain2(), 2), 0, 2);
  REQUIRE(single.violations.size() == 1);
  REQUIRE(graded.violations.size() == 1);
  CHECK(single.violations[0].detail == "k=1 i=1 x=(a,a,b,b)");
  CHECK(graded.violations[0].detail == "k=1 i=1 a=C1:(a,a,b,b)");
}
