#include <doctest.h>

#include "bbs/io.hpp"
#include "bbs/text.hpp"
#include "bbs/verify.hpp"

using namespace bbs;

TEST_CASE("factor and tensor text round trips") {
  const Alphabet n4(4);
  for (const char* s : {"<112>", "[1/3]", "<111>*<1>*[2/3]", "[2/4]*<4>"})
    CHECK(to_string(parse_tensor(s, n4)) == s);
  const Alphabet n12(12);
  const auto wide = parse_factor("<1,10,12>", n12);
  CHECK(to_string(wide) == "<1,10,12>");
  CHECK(to_string(parse_factor("[2/11]", n12)) == "[2/11]");
}

TEST_CASE("factor parse errors") {
  const Alphabet n3(3);
  CHECK_THROWS_AS(parse_factor("<1x>", n3), ParseError);
  CHECK_THROWS_AS(parse_factor("<21>", n3), ParseError);
  CHECK_THROWS_AS(parse_factor("[3/1]", n3), ParseError);
  CHECK_THROWS_AS(parse_factor("[13]", n3), ParseError);
  CHECK_THROWS_AS(parse_factor("12", n3), ParseError);
  CHECK_THROWS_AS(parse_tensor("<1>**<2>", n3), ParseError);
}

TEST_CASE("shape lists") {
  const auto s = parse_shapes("3,1,c");
  REQUIRE(s.size() == 3);
  CHECK(s[0] == FactorShape::row(3));
  CHECK(s[2] == FactorShape::column());
  CHECK_THROWS_AS(parse_shapes("3,,c"), ParseError);
  CHECK_THROWS_AS(parse_shapes("0"), ParseError);
  CHECK_THROWS_AS(parse_shapes("x"), ParseError);
}

TEST_CASE("ASCII paths") {
  const Alphabet n5(5);
  const BasicPath p = parse_ascii("55432.....542....2...", n5);
  CHECK(p.length() == 18);
  CHECK(to_ascii(p) == "55432.....542....2");
  CHECK(to_ascii(p, 20) == "55432.....542....2..");
  CHECK(parse_ascii("1121", n5) == parse_ascii("..2", n5));
  CHECK_THROWS_WITH_AS(parse_ascii("2.x", n5), doctest::Contains("site 3"), ParseError);
  CHECK_THROWS_WITH_AS(parse_ascii("2.7", n5), doctest::Contains("site 3"), ParseError);
  CHECK_THROWS_AS(parse_ascii("2", Alphabet(10)), ParseError);
}

TEST_CASE("state documents: ASCII and JSON basic") {
  const StateDocument a = parse_state_document("55432.....542....2\n");
  CHECK(a.alphabet.size() == 5);
  CHECK(a.width == 18);
  const StateDocument b = parse_state_document(R"({"n":5,"mode":"basic","state":"55432.....542....2"})");
  CHECK(b.state == a.state);
  CHECK(to_json(b).dump() == R"({"mode":"basic","n":5,"state":"55432.....542....2"})");
  CHECK(parse_state_document("..2", 4).alphabet.size() == 4);
}

TEST_CASE("state documents: JSON inhomogeneous round trip") {
  const std::string text =
      R"({"mode":"inhom","n":4,"sites":[{"capacity":3,"counts":[1,0,2,0]},{"capacity":2,"counts":[2,0,0,0]},{"capacity":1,"counts":[0,0,0,1]}],"tail_capacity":2})";
  const StateDocument doc = parse_state_document(text);
  REQUIRE_FALSE(doc.is_basic());
  const auto& p = std::get<InhomPath>(doc.state);
  CHECK(p.capacity(1) == 3);
  CHECK(p.capacity(9) == 2);
  CHECK(to_string(p) == "<133>|<11>|<4>");
  CHECK(to_json(doc).dump() == text);
  CHECK(std::get<InhomPath>(state_document_from_json(to_json(doc)).state) == p);
}

TEST_CASE("state documents: basic letter arrays for large n") {
  const StateDocument doc = parse_state_document(R"({"n":12,"mode":"basic","state":[1,12,3]})");
  const auto& p = std::get<BasicPath>(doc.state);
  CHECK(p.at(2) == 12);
  CHECK(to_json(doc)["state"] == Json::array({1, 12, 3}));
  CHECK(render_state(doc.state) == "1,12,3");
}

TEST_CASE("state document errors") {
  CHECK_THROWS_AS(parse_state_document("{\"n\":5"), ParseError);
  CHECK_THROWS_AS(parse_state_document(R"({"mode":"basic","state":"2"})"), ParseError);
  CHECK_THROWS_AS(parse_state_document(R"({"n":5,"mode":"odd","state":"2"})"), ParseError);
  CHECK_THROWS_AS(parse_state_document(R"({"n":1,"mode":"basic","state":"2"})"), ParseError);
  CHECK_THROWS_AS(parse_state_document(R"({"n":3,"mode":"basic","state":"5"})"), ParseError);
  CHECK_THROWS_AS(parse_state_document(R"({"n":3,"mode":"basic","state":"2"})", 4), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_state_document(R"({"n":3,"mode":"inhom","sites":[{"capacity":2,"counts":[1,0,0]}]})"),
      doctest::Contains("site 1"), ParseError);
  CHECK_THROWS_AS(parse_state_document(R"({"n":3,"mode":"inhom","sites":[{"capacity":1,"counts":[1,0]}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_state_document(R"({"n":3,"mode":"inhom","sites":[{"capacity":1,"counts":[2,-1,0]}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_state_document(R"({"n":3,"mode":"inhom"})"), ParseError);
  CHECK_THROWS_AS(parse_state_document("2.q"), ParseError);
}

TEST_CASE("relation reports serialize as JSON lines") {
  RelationReport ok{"braid", 90, std::nullopt, 1.5};
  const Json j = to_json(ok);
  CHECK(j["result"] == "pass");
  CHECK(j["domain"] == 90);
  CHECK(j["counterexample"].is_null());
  RelationReport bad{"braid", 3, "x", 0.0};
  CHECK(to_json(bad)["result"] == "fail");
  CHECK(to_json(bad)["counterexample"] == "x");
}

TEST_CASE("rendering then parsing random states is the identity") {
  Rng rng(13);
  for (int k = 0; k < 300; ++k) {
    const Alphabet a(2 + k % 8);
    const BasicPath p = random_basic_path(rng, a, 10, 30);
    CHECK(parse_ascii(to_ascii(p), a) == p);
    const StateDocument basic{a, p, p.length()};
    CHECK(parse_state_document(to_json(basic).dump()).state == basic.state);
    const InhomPath q = random_inhom_path(rng, a, 10, 12, 4);
    const StateDocument inhom{a, q, q.length()};
    CHECK(parse_state_document(to_json(inhom).dump()).state == inhom.state);
  }
  const Alphabet wide(14);
  Rng rng2(1);
  for (int k = 0; k < 50; ++k) {
    const BasicPath p = random_basic_path(rng2, wide, 10, 20);
    CHECK(parse_state_document(to_json(StateDocument{wide, p, p.length()}).dump()).state == AnyPath(p));
  }
}
