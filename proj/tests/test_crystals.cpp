#include <doctest.h>

#include "bbs/crystals.hpp"
#include "bbs/text.hpp"
#include "oracles.hpp"

using namespace bbs;

namespace {

TensorElement tensor(const char* s, int n) { return parse_tensor(s, Alphabet(n)); }

std::vector<FactorShape> shapes_of(const char* s) { return parse_shapes(s); }

}  // namespace

TEST_CASE("row operators move the rightmost i up and the leftmost i+1 down") {
  const Alphabet n4(4);
  const RowTableau b(n4, {1, 2, 2, 3});
  CHECK(*ftilde(2, b) == RowTableau(n4, {1, 2, 3, 3}));
  CHECK(*etilde(2, b) == RowTableau(n4, {1, 2, 2, 2}));
  CHECK_FALSE(ftilde(3, RowTableau(n4, {1, 2})));
  CHECK_FALSE(etilde(1, RowTableau(n4, {1, 3})));
  const EpsPhi ep = eps_phi(2, b);
  CHECK(ep.eps == 1);
  CHECK(ep.phi == 2);
}

TEST_CASE("column operators need exactly one of i, i+1") {
  const Alphabet n4(4);
  CHECK(*ftilde(2, ColumnPair(n4, 1, 2)) == ColumnPair(n4, 1, 3));
  CHECK_FALSE(ftilde(1, ColumnPair(n4, 1, 2)));
  CHECK(*etilde(3, ColumnPair(n4, 2, 4)) == ColumnPair(n4, 2, 3));
  CHECK(eps_phi(1, ColumnPair(n4, 1, 2)).eps == 0);
  CHECK(eps_phi(1, ColumnPair(n4, 1, 2)).phi == 0);
}

TEST_CASE("tensor rule: f acts on the left factor iff phi(left) > eps(right)") {
  // i ⊗ i+1 is killed by f, i+1 ⊗ i moves its right factor.
  CHECK_FALSE(ftilde(1, tensor("<1>*<2>", 3)));
  CHECK(*ftilde(1, tensor("<2>*<1>", 3)) == tensor("<2>*<2>", 3));
  CHECK(*ftilde(1, tensor("<11>*<2>", 3)) == tensor("<12>*<2>", 3));
  CHECK(*etilde(1, tensor("<2>*<2>", 3)) == tensor("<2>*<1>", 3));
  const EpsPhi ep = eps_phi(1, tensor("<12>*<2>*<1>", 3));
  CHECK(ep.eps == 1);
  CHECK(ep.phi == 1);
}

TEST_CASE("tensor operators agree with the signature rule everywhere on small products") {
  for (const char* s : {"2,1", "c,1", "1,c", "2,c,1", "c,c", "1,1,1", "3,c"}) {
    const auto shapes = shapes_of(s);
    for (int n = 2; n <= 4; ++n) {
      if (n == 2 && s == std::string("c,c")) continue;
      for (const TensorElement& t : enumerate_product(shapes, Alphabet(n)))
        for (int i = 1; i < n; ++i) {
          CAPTURE(to_string(t));
          CAPTURE(i);
          CHECK(ftilde(i, t) == oracle::f(i, t));
          CHECK(etilde(i, t) == oracle::e(i, t));
        }
    }
  }
}

TEST_CASE("e and f are partial inverses and eps/phi count their iterations") {
  const Alphabet n4(4);
  const std::vector<FactorShape> shapes{FactorShape::row(2), FactorShape::column(), FactorShape::row(1)};
  for (const TensorElement& t : enumerate_product(shapes, n4))
    for (int i = 1; i < 4; ++i) {
      if (auto ft = ftilde(i, t)) CHECK(*etilde(i, *ft) == t);
      if (auto et = etilde(i, t)) CHECK(*ftilde(i, *et) == t);
      int phi = 0;
      for (auto x = ftilde(i, t); x; x = ftilde(i, *x)) ++phi;
      int eps = 0;
      for (auto x = etilde(i, t); x; x = etilde(i, *x)) ++eps;
      CHECK(eps_phi(i, t).phi == phi);
      CHECK(eps_phi(i, t).eps == eps);
    }
}

TEST_CASE("factor enumeration sizes match the representation dimensions") {
  for (int n = 2; n <= 5; ++n)
    for (int l = 1; l <= 4; ++l) {
      CHECK(enumerate_factor(FactorShape::row(l), Alphabet(n)).size() ==
            static_cast<std::size_t>(oracle::dimension({l}, n)));
      CHECK(enumerate_factor(FactorShape::column(), Alphabet(n)).size() ==
            static_cast<std::size_t>(oracle::dimension({1, 1}, n)));
    }
}

TEST_CASE("highest weight elements match the signature oracle") {
  const Alphabet n4(4);
  const auto shapes = shapes_of("2,1,c");
  std::size_t expected = 0;
  for (const TensorElement& t : enumerate_product(shapes, n4)) {
    CHECK(is_highest_weight(t) == oracle::highest(t, 4));
    expected += oracle::highest(t, 4);
  }
  CHECK(enumerate_highest_weights(shapes, n4).size() == expected);
}

TEST_CASE("highest weight elements come out grouped by weight, descending") {
  const auto hw = enumerate_highest_weights(shapes_of("3,1,c"), Alphabet(5));
  for (std::size_t k = 1; k < hw.size(); ++k) CHECK_FALSE(weight_of(hw[k - 1]) < weight_of(hw[k]));
  const auto groups = group_by_weight(hw);
  std::size_t total = 0;
  for (const auto& [w, elems] : groups) total += elems.size();
  CHECK(total == hw.size());
}

TEST_CASE("count vectors round trip through rows") {
  const Alphabet n5(5);
  for (const Factor& f : enumerate_factor(FactorShape::row(3), n5)) {
    const auto& row = std::get<RowTableau>(f);
    CHECK(counts_to_row(row_to_counts(row)) == row);
    CHECK(row_to_counts(row).capacity() == 3);
  }
}

TEST_CASE("weight of a shape pads with zeros") {
  CHECK(Weight::of_shape(Shape{3, 1}, Alphabet(4)).counts == std::vector<int>{3, 1, 0, 0});
}

TEST_CASE("malformed elements are rejected") {
  const Alphabet n3(3);
  CHECK_THROWS_AS(RowTableau(n3, {2, 1}), ContractViolation);
  CHECK_THROWS_AS(RowTableau(n3, {1, 4}), ContractViolation);
  CHECK_THROWS_AS(RowTableau(n3, {}), ContractViolation);
  CHECK_THROWS_AS(ColumnPair(n3, 2, 2), ContractViolation);
  CHECK_THROWS_AS(ColumnPair(n3, 3, 1), ContractViolation);
  CHECK_THROWS_AS(Alphabet(1), ContractViolation);
  CHECK_THROWS_AS(ftilde(3, RowTableau(n3, {1})), ContractViolation);
  CHECK_THROWS_AS(TensorElement({Factor(RowTableau(n3, {1})), Factor(RowTableau(Alphabet(4), {1}))}),
                  ContractViolation);
}

TEST_CASE("exhaustive enumeration refuses oversized domains") {
  const std::vector<FactorShape> big(8, FactorShape::row(4));
  CHECK_THROWS_AS(enumerate_product(big, Alphabet(5)), DomainTooLarge);
  CHECK_THROWS_AS(enumerate_product(shapes_of("2,2"), Alphabet(3), 10), DomainTooLarge);
}
