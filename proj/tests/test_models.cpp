#include <cstdlib>
#include <set>

#include "cubix/laws.hpp"
#include "cubix/models.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cubix;

TEST_CASE("base categories realize their arrow patterns") {
  auto pair = base_category(BaseKind::pair_groupoid, 3);
  auto chain = base_category(BaseKind::chain_poset, 3);
  auto disc = base_category(BaseKind::discrete, 3);
  auto cyc = base_category(BaseKind::cyclic_group_thin, 7);
  CHECK(cyc.objects == 1);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      CHECK(pair.arrow(a, b));
      CHECK(chain.arrow(a, b) == (a <= b));
      CHECK(disc.arrow(a, b) == (a == b));
    }
  CHECK_THROWS_AS(base_category(BaseKind::discrete, 0), StructureError);
}

TEST_CASE("base kind names round trip") {
  for (auto kind : {BaseKind::pair_groupoid, BaseKind::chain_poset,
                    BaseKind::discrete, BaseKind::cyclic_group_thin})
    CHECK(parse_base_kind(to_string(kind)) == kind);
  CHECK_THROWS_AS(parse_base_kind("octahedron"), StructureError);
}

TEST_CASE("nerve carrier sizes") {
  CHECK(fx::pair2().size() == 16);
  CHECK(fx::pair3().size() == 256);
  CHECK(fx::chain2().size() == 6);
  CHECK(fx::discrete2().size() == 2);
  CHECK(fx::terminal3().size() == 1);
  CHECK(cube_nerve(BaseKind::chain_poset, 3, 2, true).size() == 20);
  CHECK(fx::pair2().validated);
  CHECK(fx::pair2().names[0] == "(a,a,a,a)");
  CHECK(fx::pair2().names[5] == "(a,b,a,b)");
}

TEST_CASE("cell budget refuses oversized nerves") {
  CHECK_THROWS_AS(cube_nerve(BaseKind::pair_groupoid, 2, 3, true, 100),
                  StructureError);
  try {
    cube_nerve(BaseKind::pair_groupoid, 2, 3, true, 100);
  } catch (const StructureError& e) {
    CHECK(e.kind() == StructureError::Kind::config);
    CHECK(std::string(e.what()).find("budget") != std::string::npos);
  }
}

TEST_CASE("cell budget env override") {
  setenv("CUBIX_CELL_BUDGET", "12345", 1);
  CHECK(default_cell_budget() == 12345);
  unsetenv("CUBIX_CELL_BUDGET");
  CHECK(default_cell_budget() == 100000);
}

TEST_CASE("mutation returns an unvalidated copy differing in one entry") {
  const auto& s = fx::pair2();
  TableLocation loc{TableLocation::Table::face, 1, Sign::plus, 3, no_cell};
  Cell old = s.face(1, Sign::plus, 3);
  Cell replacement = old == 0 ? 1 : 0;
  auto m = mutate(s, loc, replacement);
  CHECK(s.validated);
  CHECK(s.face(1, Sign::plus, 3) == old);
  CHECK_FALSE(m.validated);
  CHECK(m.face(1, Sign::plus, 3) == replacement);

  // every other entry is untouched
  std::size_t diffs = 0;
  for (int i = 1; i <= 2; ++i)
    for (Sign a : {Sign::minus, Sign::plus})
      for (Cell x = 0; x < s.size(); ++x)
        if (s.face(i, a, x) != m.face(i, a, x)) ++diffs;
  CHECK(diffs == 1);
  CHECK(m.sym_ == s.sym_);
  CHECK(m.conn_ == s.conn_);
}

TEST_CASE("composition mutations keep the pair domain") {
  const auto& s = fx::pair2();
  auto [lo, hi] = s.comp_pairs_of(1, fx::by_name(s, "(a,a,b,b)"));
  REQUIRE(lo != hi);
  TableLocation loc{TableLocation::Table::comp, 1, Sign::minus, lo->first,
                   lo->second};
  Cell old = *s.comp(1, lo->first, lo->second);
  auto m = mutate(s, loc, old == 0 ? 1 : 0);
  CHECK(m.comp_[0].pairs == s.comp_[0].pairs);
  CHECK(*m.comp(1, lo->first, lo->second) == (old == 0 ? 1 : 0));

  TableLocation missing{TableLocation::Table::comp, 1, Sign::minus, lo->first,
                        lo->first};
  if (!s.composable(1, lo->first, lo->first))
    CHECK_THROWS_AS(mutate(s, missing, 0), StructureError);
  CHECK_THROWS_AS(mutate(s, loc, Cell(16)), StructureError);
}

TEST_CASE("mutation sampling is deterministic and value-changing") {
  const auto& s = fx::pair2();
  auto a = sample_mutations(s, 50, 7);
  auto b = sample_mutations(s, 50, 7);
  auto c = sample_mutations(s, 50, 8);
  REQUIRE(a.size() == 50);
  bool same = true, other = false;
  for (std::size_t k = 0; k < 50; ++k) {
    same = same && a[k].value == b[k].value &&
           to_string(a[k].loc, s) == to_string(b[k].loc, s);
    other = other || a[k].value != c[k].value ||
            to_string(a[k].loc, s) != to_string(c[k].loc, s);
  }
  CHECK(same);
  CHECK(other);

  std::set<std::string> locations;
  for (const auto& m : a) {
    locations.insert(to_string(m.loc, s));
    auto mutated = mutate(s, m.loc, m.value);
    CHECK_FALSE(mutated.validated);
  }
  CHECK(locations.size() == 50);
}
