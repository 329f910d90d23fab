#pragma once

// Automaton states and their time evolutions.
//
// A basic path is a half-infinite row of capacity-1 boxes; an inhomogeneous
// path has a box of capacity l_k at site k. Both keep an explicit finite
// prefix and an implicit vacuum tail. Sites are numbered from 1.

#include <optional>
#include <variant>
#include <vector>

#include "bbs/crystals.hpp"
#include "bbs/isomorphisms.hpp"

namespace bbs {

class BasicPath {
 public:
  /// Trailing 1s are trimmed.
  BasicPath(Alphabet alphabet, std::vector<Letter> sites);

  Alphabet alphabet() const { return alphabet_; }
  /// Explicit prefix; never ends in letter 1.
  const std::vector<Letter>& sites() const { return sites_; }
  Letter at(int position) const;
  int length() const { return static_cast<int>(sites_.size()); }

  friend bool operator==(const BasicPath&, const BasicPath&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Letter> sites_;
};

class InhomPath {
 public:
  /// Site k holds sites[k-1]; every site past the prefix is vacuum of
  /// capacity `tail_capacity`. Trailing vacuum sites of tail capacity are trimmed.
  InhomPath(Alphabet alphabet, std::vector<RowTableau> sites, int tail_capacity = 1);

  /// Vacuum path with the given explicit capacities.
  static InhomPath vacuum(Alphabet alphabet, const std::vector<int>& capacities, int tail_capacity = 1);

  Alphabet alphabet() const { return alphabet_; }
  const std::vector<RowTableau>& sites() const { return sites_; }
  int tail_capacity() const { return tail_capacity_; }
  int length() const { return static_cast<int>(sites_.size()); }
  int capacity(int position) const;
  RowTableau at(int position) const;

  friend bool operator==(const InhomPath&, const InhomPath&) = default;

 private:
  Alphabet alphabet_;
  std::vector<RowTableau> sites_;
  int tail_capacity_;
};

/// Carrier capacity l >= 1, or infinity (realized as the ball count of the path).
class CarrierCapacity {
 public:
  explicit CarrierCapacity(int l);
  static CarrierCapacity infinite() { return CarrierCapacity(); }

  bool is_infinite() const { return !value_; }
  int value() const { return *value_; }
  /// Concrete capacity used for a path holding `balls` balls.
  int resolve(int balls) const { return value_ ? *value_ : std::max(balls, 1); }

  friend bool operator==(const CarrierCapacity&, const CarrierCapacity&) = default;

 private:
  CarrierCapacity() = default;
  std::optional<int> value_;
};

/// One site visited by a carrier sweep.
struct TraceStep {
  int site = 0;
  SwapCase tag = SwapCase::Identity;
  Factor carrier_before;
  Factor carrier_after;
  Factor site_before;
  Factor site_after;
};

template <class Path>
struct EvolutionTrace {
  Path input;
  Path output;
  std::vector<TraceStep> steps;
};

/// Rebuilds the output path from the input and the recorded site updates.
BasicPath replay(const EvolutionTrace<BasicPath>& trace);
InhomPath replay(const EvolutionTrace<InhomPath>& trace);

/// Result of one decoding-carrier sweep: T_natural(p) and b(p).
template <class Path>
struct NaturalStep {
  Path path;
  ColumnPair carrier;
  EvolutionTrace<Path> trace;
};

/// Number of letters >= 2 (balls) in the path.
int ball_count(const BasicPath& p);
int ball_count(const InhomPath& p);

/// True when the path has no letter >= 3.
bool is_monochrome(const BasicPath& p);
bool is_monochrome(const InhomPath& p);

/// Multiplicities of the letters >= 2; the entry for letter 1 is left at 0.
Weight weight_of(const BasicPath& p);
Weight weight_of(const InhomPath& p);

/// Position of the rightmost non-vacuum site, 0 for the vacuum path.
int front(const BasicPath& p);
int front(const InhomPath& p);

/// K_i: moves every letter i once, left to right, each to its nearest free box on the right.
BasicPath K(Letter i, const BasicPath& p);

/// T = K_2 ... K_n, with K_n applied first.
BasicPath T_def(const BasicPath& p);

/// Carrier evolution: u_l ⊗ p -> T_l(p) ⊗ u_l.
BasicPath T_ell(CarrierCapacity l, const BasicPath& p);
InhomPath T_ell(CarrierCapacity l, const InhomPath& p);
EvolutionTrace<BasicPath> T_ell_traced(CarrierCapacity l, const BasicPath& p);
EvolutionTrace<InhomPath> T_ell_traced(CarrierCapacity l, const InhomPath& p);

/// Decoding carrier: u_natural ⊗ p -> T_natural(p) ⊗ b(p).
NaturalStep<BasicPath> T_natural(const BasicPath& p);
NaturalStep<InhomPath> T_natural(const InhomPath& p);

/// Inverse of one decoding sweep: recovers p from (T_natural(p), b(p)).
/// Returns nullopt when the carrier leaving the left end is not u_natural.
std::optional<BasicPath> T_natural_inverse(const BasicPath& image, const ColumnPair& carrier);
std::optional<InhomPath> T_natural_inverse(const InhomPath& image, const ColumnPair& carrier);

}  // namespace bbs
