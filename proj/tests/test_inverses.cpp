#include "cubix/inverses.hpp"
#include "cubix/models.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cubix;

TEST_CASE("directed inverse of the antidiagonal square") {
  const auto& s = fx::pair2();
  Cell sq = fx::by_name(s, "(a,b,a,b)");
  auto cert = ri_inverse(s, 2, sq);
  REQUIRE(cert.has_value());
  CHECK(cert->inverse == fx::by_name(s, "(b,a,b,a)"));
  CHECK(cert->valid());
  CHECK(cert->direction == 2);
  CHECK(cert->cell == sq);
}

TEST_CASE("identity cells invert to themselves") {
  const auto& s = fx::pair2();
  Cell id_a = fx::by_name(s, "(a,a,a,a)");
  for (int i = 1; i <= 2; ++i) {
    auto cert = ri_inverse(s, i, id_a);
    REQUIRE(cert.has_value());
    CHECK(cert->inverse == id_a);
  }
  const auto& t = fx::terminal3();
  for (int i = 1; i <= 3; ++i) {
    auto cert = ri_inverse(t, i, 0);
    REQUIRE(cert.has_value());
    CHECK(cert->inverse == Cell(0));
  }
}

TEST_CASE("the chain nerve edge has no inverse") {
  const auto& s = fx::chain2();
  CHECK_FALSE(ri_inverse(s, 1, fx::by_name(s, "(a,a,b,b)")).has_value());
}

TEST_CASE("shell invertibility distinguishes groupoid from poset squares") {
  CHECK(shell_invertible(fx::pair2(), 2, 2, fx::by_name(fx::pair2(), "(a,b,a,b)")));
  // at level 1 the shell condition is vacuous; the edge is a divisibility
  // witness precisely because the inverse itself is missing
  CHECK(shell_invertible(fx::chain2(), 1, 1,
                         fx::by_name(fx::chain2(), "(a,a,b,b)")));
  CHECK_FALSE(shell_invertible(fx::chain2(), 2, 2,
                               fx::by_name(fx::chain2(), "(a,a,a,b)")));
  CHECK_THROWS_AS(shell_invertible(fx::pair2(), 2, 3, 0), StructureError);
}

TEST_CASE("synthesis agrees with the brute force scan at n=2") {
  const auto& s = fx::pair2();
  for (int i = 1; i <= 2; ++i)
    for (Cell x = 0; x < s.size(); ++x) {
      auto scanned = ri_inverse(s, i, x);
      REQUIRE(scanned.has_value());
      auto built = synthesize_inverse_dim0(s, i, x);
      CHECK(built.inverse == scanned->inverse);
      CHECK(built.valid());
    }
}

TEST_CASE("synthesis refuses cells without invertible faces") {
  const auto& s = fx::chain2();
  CHECK_THROWS_AS(
      synthesize_inverse_dim0(s, 1, fx::by_name(s, "(a,a,b,b)")),
      StructureError);
}

TEST_CASE("inverse lemmas are clean on the fixture family") {
  CHECK(check_inverse_lemmas(fx::pair2(), 2).passed());
  CHECK(check_inverse_lemmas(fx::chain2(), 2).passed());
  CHECK(check_inverse_lemmas(fx::discrete2(), 2).passed());
  CHECK(check_inverse_lemmas(fx::terminal3(), 2).passed());
  CHECK(check_inverse_lemmas(fx::pair2(), 2).checked_count == 424);
}
