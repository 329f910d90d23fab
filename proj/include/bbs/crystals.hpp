#pragma once

// sl_n crystals B_l (one-row tableaux) and B_natural (two-box columns),
// the Kashiwara operators on them, and their tensor products.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "bbs/errors.hpp"

namespace bbs {

using Letter = int;

/// The letters 1..n. Letter 1 is the empty box, 2..n are ball colours.
class Alphabet {
 public:
  explicit Alphabet(int n);

  int size() const { return n_; }
  bool contains(Letter a) const { return 1 <= a && a <= n_; }
  /// Throws ContractViolation unless 1 <= i <= n-1.
  void check_index(int i) const;

  friend auto operator<=>(const Alphabet&, const Alphabet&) = default;

 private:
  int n_;
};

/// Element of B_l: a weakly increasing word of length l over the alphabet.
class RowTableau {
 public:
  RowTableau(Alphabet alphabet, std::vector<Letter> entries);

  /// u_l = (1, 1, ..., 1).
  static RowTableau vacuum(Alphabet alphabet, int capacity);

  Alphabet alphabet() const { return alphabet_; }
  int capacity() const { return static_cast<int>(entries_.size()); }
  const std::vector<Letter>& entries() const { return entries_; }
  /// 0-based access.
  Letter operator[](std::size_t k) const { return entries_[k]; }
  Letter front() const { return entries_.front(); }
  Letter back() const { return entries_.back(); }
  int count(Letter a) const;
  bool is_vacuum() const { return entries_.back() == 1; }

  friend auto operator<=>(const RowTableau&, const RowTableau&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Letter> entries_;
};

/// Element of B_natural = B_(1,1): a column with top < bottom.
class ColumnPair {
 public:
  ColumnPair(Alphabet alphabet, Letter top, Letter bottom);

  /// u_natural = column (1, 2).
  static ColumnPair highest(Alphabet alphabet) { return {alphabet, 1, 2}; }

  Alphabet alphabet() const { return alphabet_; }
  Letter top() const { return top_; }
  Letter bottom() const { return bottom_; }
  bool contains(Letter a) const { return a == top_ || a == bottom_; }

  friend auto operator<=>(const ColumnPair&, const ColumnPair&) = default;

 private:
  Alphabet alphabet_;
  Letter top_;
  Letter bottom_;
};

using Factor = std::variant<RowTableau, ColumnPair>;

/// Shape tag of a tensor factor: a row (l) or the column (1,1).
struct FactorShape {
  enum class Kind { Row, Column };
  Kind kind = Kind::Row;
  int length = 1;  // row length; 2 for the column

  static FactorShape row(int l);
  static FactorShape column() { return {Kind::Column, 2}; }
  bool is_row() const { return kind == Kind::Row; }
  bool is_column() const { return kind == Kind::Column; }

  friend auto operator<=>(const FactorShape&, const FactorShape&) = default;
};

FactorShape shape_of(const Factor& b);

/// A Young diagram as a weakly decreasing list of positive parts.
class Shape {
 public:
  Shape() = default;
  Shape(std::initializer_list<int> parts);
  explicit Shape(std::vector<int> parts);

  static Shape of(FactorShape s);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int rows() const { return static_cast<int>(parts_.size()); }

  friend auto operator<=>(const Shape&, const Shape&) = default;

 private:
  std::vector<int> parts_;
};

/// Letter multiplicities; counts[a-1] is the number of letter a.
struct Weight {
  std::vector<int> counts;

  Weight() = default;
  explicit Weight(Alphabet alphabet) : counts(alphabet.size(), 0) {}
  explicit Weight(std::vector<int> c) : counts(std::move(c)) {}

  int operator[](Letter a) const { return counts[a - 1]; }
  int total() const;
  Weight& operator+=(const Weight& other);

  /// The weight (shape parts padded with zeros) of a highest weight element of B_shape.
  static Weight of_shape(const Shape& shape, Alphabet alphabet);

  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Count-vector form (x_1, ..., x_n) of an element of B_l.
class CountVector {
 public:
  explicit CountVector(std::vector<int> counts);

  int size() const { return static_cast<int>(counts_.size()); }
  int capacity() const;
  /// 1-based, matching x_1..x_n.
  int operator[](int i) const { return counts_[i - 1]; }
  const std::vector<int>& counts() const { return counts_; }

  friend auto operator<=>(const CountVector&, const CountVector&) = default;

 private:
  std::vector<int> counts_;
};

CountVector row_to_counts(const RowTableau& b);
RowTableau counts_to_row(const CountVector& c);

/// Ordered tensor product b_1 ⊗ ... ⊗ b_N of rows and columns over one alphabet.
class TensorElement {
 public:
  explicit TensorElement(std::vector<Factor> factors);
  TensorElement(std::initializer_list<Factor> factors)
      : TensorElement(std::vector<Factor>(factors)) {}

  Alphabet alphabet() const;
  std::size_t size() const { return factors_.size(); }
  const Factor& operator[](std::size_t k) const { return factors_[k]; }
  const std::vector<Factor>& factors() const { return factors_; }
  std::vector<FactorShape> shapes() const;

  /// Returns a copy with factor k replaced.
  TensorElement with(std::size_t k, Factor b) const;

  friend auto operator<=>(const TensorElement&, const TensorElement&) = default;

 private:
  std::vector<Factor> factors_;
};

struct EpsPhi {
  int eps = 0;
  int phi = 0;
  friend bool operator==(const EpsPhi&, const EpsPhi&) = default;
};

std::optional<RowTableau> ftilde(int i, const RowTableau& b);
std::optional<RowTableau> etilde(int i, const RowTableau& b);
std::optional<ColumnPair> ftilde(int i, const ColumnPair& b);
std::optional<ColumnPair> etilde(int i, const ColumnPair& b);
std::optional<Factor> ftilde(int i, const Factor& b);
std::optional<Factor> etilde(int i, const Factor& b);

EpsPhi eps_phi(int i, const RowTableau& b);
EpsPhi eps_phi(int i, const ColumnPair& b);
EpsPhi eps_phi(int i, const Factor& b);

/// (eps, phi) of b ⊗ b' from those of b and b'.
EpsPhi combine(EpsPhi left, EpsPhi right);

/// Left fold of combine() over the factors.
EpsPhi eps_phi(int i, const TensorElement& t);

/// Tensor product rule: act on the left part iff phi(left) > eps(right).
std::optional<TensorElement> ftilde(int i, const TensorElement& t);
/// Dual rule: act on the left part iff phi(left) >= eps(right).
std::optional<TensorElement> etilde(int i, const TensorElement& t);

bool is_highest_weight(const TensorElement& t);

Weight weight_of(const RowTableau& b);
Weight weight_of(const ColumnPair& b);
Weight weight_of(const Factor& b);
Weight weight_of(const TensorElement& t);

/// Exhaustive-enumeration cap: BBS_MAX_DOMAIN if set, else 10^6.
std::size_t max_domain();

/// Number of elements of the crystal with the given factor shapes.
std::size_t product_size(std::span<const FactorShape> shapes, Alphabet alphabet);

/// All elements of one factor crystal, lexicographic in the canonical word.
std::vector<Factor> enumerate_factor(FactorShape shape, Alphabet alphabet);

/// All elements of the product crystal, lexicographic factor by factor.
/// Throws DomainTooLarge above `limit`.
std::vector<TensorElement> enumerate_product(std::span<const FactorShape> shapes, Alphabet alphabet,
                                             std::size_t limit = max_domain());

/// Highest weight elements of the product crystal, ordered by weight
/// (lexicographically descending), ties in enumeration order.
std::vector<TensorElement> enumerate_highest_weights(std::span<const FactorShape> shapes,
                                                     Alphabet alphabet,
                                                     std::size_t limit = max_domain());

std::map<Weight, std::vector<TensorElement>> group_by_weight(std::span<const TensorElement> elements);

}  // namespace bbs
