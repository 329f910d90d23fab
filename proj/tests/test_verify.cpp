#include <doctest.h>

#include <cstdlib>
#include <numeric>

#include "bbs/text.hpp"
#include "bbs/verify.hpp"
#include "oracles.hpp"

using namespace bbs;

TEST_CASE("symmetric group relations hold exhaustively on mixed products") {
  for (const char* s : {"3,1,c", "2,3,c", "c,1,2", "1,c,c", "2,c,1,3"}) {
    const auto report = check_symmetric_group(parse_shapes(s), Alphabet(3), SamplingMode::all());
    CHECK_MESSAGE(report.passed(), report.counterexample.value_or(""));
    CHECK(report.domain == product_size(parse_shapes(s), Alphabet(3)));
  }
  const auto sampled = check_symmetric_group(parse_shapes("2,2,2"), Alphabet(4), SamplingMode::random(1, 200));
  CHECK(sampled.passed());
  CHECK(sampled.domain == 200);
}

TEST_CASE("highest weight chain fixtures") {
  CHECK(check_highest_weight_chains().passed());
  for (int l1 = 2; l1 <= 5; ++l1)
    for (int l2 = 1; l2 < l1; ++l2)
      for (const auto& c : row_row_column_chains(l1, l2)) CHECK_MESSAGE(check_chain(c).passed(), c.name);
  CHECK_THROWS_AS(row_row_column_chains(2, 2), ContractViolation);
}

TEST_CASE("a broken chain is reported") {
  auto c = row_box_column_chains().front();
  c.elements[3] = c.elements[2];
  const auto r = check_chain(c);
  CHECK_FALSE(r.passed());
  CHECK(r.counterexample->find("step 3") != std::string::npos);
}

TEST_CASE("carrier composition words") {
  const auto x = carrier_word_x(3, 3);
  const auto y = carrier_word_y(3, 3);
  const std::vector<int> gx{3, 3, 3, 6}, gy{6, 3, 3, 3};
  CHECK(render_sigma_word(x, gx) == "(321)(432)(543)(654321)");
  CHECK(render_sigma_word(y, gy) == "(654321)(432)(543)(654)");
  for (int columns = 1; columns <= 3; ++columns)
    for (int boxes = 1; boxes <= 3; ++boxes) {
      const auto r = check_carrier_composition(columns, boxes, 2, Alphabet(4), SamplingMode::random(3, 200));
      CHECK_MESSAGE(r.passed(), r.counterexample.value_or(""));
    }
  CHECK(check_carrier_composition(1, 2, 2, Alphabet(3), SamplingMode::all()).passed());
}

TEST_CASE("decomposition fixtures match the highest weight census") {
  for (const auto& f : decomposition_fixtures()) {
    const auto r = check_decomposition(f);
    CHECK_MESSAGE(r.passed(), f.name << ": " << r.counterexample.value_or(""));
  }
}

TEST_CASE("decomposition fixtures account for every element") {
  for (const auto& f : decomposition_fixtures()) {
    long long components = 0;
    for (const auto& [shape, m] : f.components) components += m * oracle::dimension(shape.parts(), f.alphabet.size());
    long long product = 1;
    for (FactorShape s : f.factors) product *= oracle::dimension(Shape::of(s).parts(), f.alphabet.size());
    CHECK_MESSAGE(components == product, f.name);
  }
}

TEST_CASE("a wrong decomposition is reported") {
  auto f = decomposition_fixtures().front();
  f.components.back().second = 2;
  CHECK_FALSE(check_decomposition(f).passed());
}

TEST_CASE("library oracle agrees with the test oracle") {
  for (int n = 2; n <= 4; ++n)
    for (FactorShape a : {FactorShape::row(2), FactorShape::column(), FactorShape::row(3)})
      for (FactorShape b : {FactorShape::row(1), FactorShape::column(), FactorShape::row(2)}) {
        const auto lib = oracle_unique_isomorphism(a, b, Alphabet(n));
        const auto ref = oracle::isomorphism(a, b, Alphabet(n));
        CHECK(lib == ref);
        CHECK(check_against_oracle(a, b, Alphabet(n)).passed());
        CHECK(check_swap_round_trip(a, b, Alphabet(n)).passed());
      }
}

TEST_CASE("the oracle on equal shapes is the identity") {
  for (FactorShape a : {FactorShape::column(), FactorShape::row(2)}) {
    const auto table = oracle_unique_isomorphism(a, a, Alphabet(4));
    for (const auto& [src, dst] : table) CHECK(src == dst);
  }
}

TEST_CASE("random generators respect their bounds and are seeded") {
  Rng a(99), b(99);
  for (int k = 0; k < 100; ++k) {
    const BasicPath p = random_basic_path(a, Alphabet(5), 7, 20);
    CHECK(p == random_basic_path(b, Alphabet(5), 7, 20));
    CHECK(ball_count(p) <= 7);
    CHECK(p.length() <= 20);
    const InhomPath q = random_inhom_path(a, Alphabet(4), 9, 10, 3);
    random_inhom_path(b, Alphabet(4), 9, 10, 3);
    CHECK(ball_count(q) <= 9);
    CHECK(q.length() <= 10);
    CHECK(q.tail_capacity() <= 3);
    for (int s = 1; s <= q.length(); ++s) CHECK(q.capacity(s) <= 3);
  }
}

TEST_CASE("path suites are deterministic per seed") {
  PathSuite s;
  s.count = 50;
  s.max_length = 25;
  s.max_balls = 10;
  const auto r1 = check_theorem(s);
  const auto r2 = check_theorem(s);
  CHECK(r1.passed());
  CHECK(r1.domain == r2.domain);
  s.inhomogeneous = true;
  CHECK(check_theorem(s).passed());
  CHECK(check_conservation(s).passed());
}

TEST_CASE("exhaustive checks respect the domain cap") {
  ::setenv("BBS_MAX_DOMAIN", "50", 1);
  CHECK_THROWS_AS(check_symmetric_group(parse_shapes("3,3,c"), Alphabet(3), SamplingMode::all()), DomainTooLarge);
  ::unsetenv("BBS_MAX_DOMAIN");
}
