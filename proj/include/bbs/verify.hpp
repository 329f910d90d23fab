#pragma once

// Brute-force oracles and fixture checks for the crystal identities behind
// colour separation: symmetric-group relations of the sigma_i, the
// highest-weight braid chains, carrier-composition words, tensor product
// decompositions, and the uniqueness of each explicit isomorphism.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bbs/crystals.hpp"
#include "bbs/dynamics.hpp"
#include "bbs/isomorphisms.hpp"

namespace bbs {

struct RelationReport {
  std::string relation;
  std::size_t domain = 0;
  std::optional<std::string> counterexample;
  double elapsed_ms = 0.0;

  bool passed() const { return !counterexample; }
};

/// Either every element of a domain, or `count` seeded random samples.
struct SamplingMode {
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::size_t count = 0;

  static SamplingMode all() { return {}; }
  static SamplingMode random(std::uint64_t seed, std::size_t count) { return {false, seed, count}; }
};

using Rng = std::mt19937_64;

TensorElement random_element(std::span<const FactorShape> shapes, Alphabet alphabet, Rng& rng);

/// Random basic path with at most `max_balls` balls in its first `max_length` sites.
BasicPath random_basic_path(Rng& rng, Alphabet alphabet, int max_balls, int max_length);

/// Random inhomogeneous path; every explicit site and the tail draw a capacity in [1, max_capacity].
InhomPath random_inhom_path(Rng& rng, Alphabet alphabet, int max_balls, int max_length, int max_capacity);

/// sigma_i^2 = id, far commutation and the braid relation on the product crystal.
RelationReport check_symmetric_group(std::span<const FactorShape> shapes, Alphabet alphabet, SamplingMode mode);

/// A closed sigma_1, sigma_2, ... alternation starting at a highest weight element.
struct HighestWeightChain {
  std::string name;
  Alphabet alphabet;
  /// elements[0] is the start; elements[k] = sigma_{1 or 2}(elements[k-1]),
  /// sigma_1 first, and elements.back() == elements.front().
  std::vector<TensorElement> elements;
};

/// The two six-step chains on B_3 ⊗ B_1 ⊗ B_natural, n = 3.
std::vector<HighestWeightChain> row_box_column_chains();
/// The chains on B_l1 ⊗ B_l2 ⊗ B_natural, n = 3, for every x in 0..l2-1 (l1 > l2).
std::vector<HighestWeightChain> row_row_column_chains(int l1, int l2);

RelationReport check_chain(const HighestWeightChain& chain);
/// Both row-box-column chains and the row-row-column chains for (l1, l2) = (3, 2).
RelationReport check_highest_weight_chains();

/// Composition words on B_l ⊗ B_natural^N ⊗ B_1^L, rightmost letter acting first:
/// x moves B_l to the far right first, y moves the columns past the boxes first.
std::vector<int> carrier_word_x(int columns, int boxes);
std::vector<int> carrier_word_y(int columns, int boxes);
/// Renders a word in grouped product notation, e.g. "(321)(432)(543)(654321)".
std::string render_sigma_word(std::span<const int> word, std::span<const int> group_sizes);

RelationReport check_carrier_composition(int columns, int boxes, int carrier_capacity, Alphabet alphabet,
                                         SamplingMode mode);

struct DecompositionFixture {
  std::string name;
  std::vector<FactorShape> factors;
  Alphabet alphabet;
  std::vector<std::pair<Shape, int>> components;  // (nu, m_nu)
};

/// The tensor product decompositions used for the symmetric group and Yang-Baxter arguments.
std::vector<DecompositionFixture> decomposition_fixtures();

RelationReport check_decomposition(const DecompositionFixture& fixture);

using IsomorphismTable = std::map<TensorElement, TensorElement>;

/// Builds B ⊗ B' -> B' ⊗ B by matching highest weight elements of equal
/// weight and propagating along f~ edges. Throws AmbiguousOracle when a
/// weight class carries two highest weight elements.
IsomorphismTable oracle_unique_isomorphism(FactorShape left, FactorShape right, Alphabet alphabet);

/// swap_factors against the oracle on every element of B_left ⊗ B_right.
RelationReport check_against_oracle(FactorShape left, FactorShape right, Alphabet alphabet);

/// swap_factors composed with the reverse swap is the identity on B_left ⊗ B_right.
RelationReport check_swap_round_trip(FactorShape left, FactorShape right, Alphabet alphabet);

/// Parameters of a random path suite.
struct PathSuite {
  int max_n = 5;
  std::size_t count = 1000;
  std::uint64_t seed = 42;
  int max_balls = 25;
  int max_length = 60;
  bool inhomogeneous = false;
  int max_capacity = 4;
  std::vector<CarrierCapacity> capacities{CarrierCapacity(1), CarrierCapacity(2), CarrierCapacity(3),
                                          CarrierCapacity::infinite()};
};

/// check_commutation over random paths, for each carrier capacity.
RelationReport check_theorem(const PathSuite& suite);

/// conserved_word(T_l(p)) = conserved_word(p) over random paths.
RelationReport check_conservation(const PathSuite& suite);

}  // namespace bbs
