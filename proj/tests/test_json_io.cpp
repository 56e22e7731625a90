#include <cstdio>

#include "cubix/equivalence.hpp"
#include "cubix/json_io.hpp"
#include "cubix/laws.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cubix;

TEST_CASE("single set documents round trip byte for byte") {
  StructureDocument doc;
  doc.value = fx::pair2();
  doc.meta["title"] = "pair nerve";
  std::string text = dump_document(doc);

  auto back = parse_document(text);
  REQUIRE(back.is_single_set());
  const auto& s = back.single_set();
  const auto& orig = fx::pair2();
  CHECK(s.names == orig.names);
  CHECK(s.face_ == orig.face_);
  CHECK(s.sym_ == orig.sym_);
  CHECK(s.inv_sym_ == orig.inv_sym_);
  CHECK(s.conn_ == orig.conn_);
  for (int i = 1; i <= 2; ++i) {
    CHECK(s.comp_[i - 1].pairs == orig.comp_[i - 1].pairs);
    CHECK(s.comp_[i - 1].map == orig.comp_[i - 1].map);
  }
  CHECK(s.validated);
  CHECK(back.meta.value("title", "") == "pair nerve");
  CHECK(dump_document(back) == text);
}

TEST_CASE("classical documents round trip byte for byte") {
  StructureDocument doc;
  doc.value = fc(fx::pair2(), 2);
  std::string text = dump_document(doc);
  auto back = parse_document(text);
  REQUIRE_FALSE(back.is_single_set());
  const auto& c = back.classical();
  CHECK(c.names == fc(fx::pair2(), 2).names);
  CHECK(c.validated);
  CHECK(dump_document(back) == text);
}

TEST_CASE("the validated flag is trusted, not recomputed") {
  StructureDocument doc;
  doc.value = fx::chain2();
  auto j = to_json(doc);
  CHECK(j["meta"]["validated"] == true);
  j["meta"]["validated"] = false;
  auto back = from_json(j);
  CHECK_FALSE(back.single_set().validated);
}

TEST_CASE("malformed documents name the offending key") {
  auto expect_parse_error = [](nlohmann::json j, const char* fragment) {
    try {
      from_json(j);
      FAIL("expected a ParseError for " << fragment);
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };

  StructureDocument doc;
  doc.value = fx::pair2();
  auto good = to_json(doc);

  auto j = good;
  j["format_version"] = 99;
  expect_parse_error(j, "format_version");

  j = good;
  j["kind"] = "sheaf";
  expect_parse_error(j, "kind");

  j = good;
  j["face"].erase("2,+");
  expect_parse_error(j, "2,+");

  j = good;
  j["face"]["1,-"]["99"] = 0;
  expect_parse_error(j, "face");

  j = good;
  j["face"]["1,-"]["3"] = 400;
  expect_parse_error(j, "out of range");

  j = good;
  j["comp"]["1"]["nonsense"] = 0;
  expect_parse_error(j, "pair key");

  j = good;
  j.erase("dim");
  expect_parse_error(j, "dim");
}

TEST_CASE("non injective degeneracies are refused at load time") {
  StructureDocument doc;
  doc.value = fc(fx::pair2(), 2);
  auto j = to_json(doc);
  j["deg"]["1,1"]["1"] = j["deg"]["1,1"]["0"];
  try {
    from_json(j);
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("not injective") != std::string::npos);
  }
}

TEST_CASE("parse failures carry the origin and location") {
  try {
    parse_document("{\"kind\": ", "broken.json");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    std::string msg = e.what();
    CHECK(msg.find("broken.json") != std::string::npos);
    CHECK(msg.find("parse error") != std::string::npos);
  }
  CHECK_THROWS_AS(load_document("/nonexistent/file.json"), ParseError);
}

TEST_CASE("documents of one kind refuse the other accessor") {
  StructureDocument doc;
  doc.value = fx::pair2();
  CHECK_THROWS_AS(doc.classical(), StructureError);
  doc.value = fc(fx::pair2(), 2);
  CHECK_THROWS_AS(doc.single_set(), StructureError);
}

TEST_CASE("documents survive a file round trip") {
  StructureDocument doc;
  doc.value = fx::discrete2();
  const std::string path = "test_json_io_tmp.json";
  save_document(doc, path);
  auto back = load_document(path);
  CHECK(dump_document(back) == dump_document(doc));
  std::remove(path.c_str());
}
