#pragma once

// Explicit crystal isomorphisms B ⊗ B' -> B' ⊗ B between the factor crystals
// B_l, B_1 and B_natural, the piecewise-linear combinatorial R on count
// vectors, and the sigma_i action on tensor positions.

#include <string_view>
#include <utility>
#include <vector>

#include "bbs/crystals.hpp"

namespace bbs {

/// Which branch of a swap fired.
enum class SwapCase {
  Identity,
  // B_natural ⊗ B_1 -> B_1 ⊗ B_natural, read as decoding-carrier processes.
  ProcessA,
  ProcessB,
  ProcessC,
  ProcessD,
  ProcessE,
  ProcessF,
  ProcessG,
  // B_l ⊗ B_1 -> B_1 ⊗ B_l: beta <= alpha_1 (B_(l+1) part) or not (B_(l,1) part).
  IotaUpper,
  IotaLower,
  IotaInvUpper,
  IotaInvLower,
  // B_1 ⊗ B_natural -> B_natural ⊗ B_1.
  PrimeInv1,
  PrimeInv2,
  PrimeInv3,
  // B_l ⊗ B_natural -> B_natural ⊗ B_l.
  DPrime1,
  DPrime2,
  DPrime3,
  DPrime4,
  DPrime3Edge,  // beta < gamma <= alpha_1
  // B_natural ⊗ B_l -> B_l ⊗ B_natural.
  InvI,
  InvII,
  InvIII,
  InvIV,
  InvV,
  R,
};

std::string_view to_string(SwapCase c);

template <class L, class R>
struct Swapped {
  L left;
  R right;
  SwapCase tag;
};

using SwapResult = Swapped<Factor, Factor>;

/// iota: B_l ⊗ B_1 -> B_1 ⊗ B_l. `box` must have capacity 1.
Swapped<RowTableau, RowTableau> iota(const RowTableau& row, const RowTableau& box);
/// Inverse of iota: B_1 ⊗ B_l -> B_l ⊗ B_1.
Swapped<RowTableau, RowTableau> iota_inv(const RowTableau& box, const RowTableau& row);

/// iota': B_natural ⊗ B_1 -> B_1 ⊗ B_natural (one step of the decoding carrier).
Swapped<RowTableau, ColumnPair> iota_prime(const ColumnPair& carrier, const RowTableau& box);
/// Inverse of iota': B_1 ⊗ B_natural -> B_natural ⊗ B_1.
Swapped<ColumnPair, RowTableau> iota_prime_inv(const RowTableau& box, const ColumnPair& carrier);

/// iota'': B_l ⊗ B_natural -> B_natural ⊗ B_l.
Swapped<ColumnPair, RowTableau> iota_dprime(const RowTableau& row, const ColumnPair& col);
/// Inverse of iota'': B_natural ⊗ B_l -> B_l ⊗ B_natural, cases (I)-(V).
Swapped<RowTableau, ColumnPair> iota_dprime_inv(const ColumnPair& col, const RowTableau& row);

/// The values P_1..P_n entering the combinatorial R for the pair (x, y).
std::vector<int> r_potential(const CountVector& x, const CountVector& y);

/// Combinatorial R: B ⊗ B' -> B' ⊗ B on count vectors. Returns (x', y').
std::pair<CountVector, CountVector> combinatorial_R(const CountVector& x, const CountVector& y);
Swapped<RowTableau, RowTableau> combinatorial_R(const RowTableau& x, const RowTableau& y);

/// The unique isomorphism b ⊗ b' -> b~' ⊗ b~, dispatched on the factor shapes.
SwapResult swap_factors(const Factor& left, const Factor& right);

/// sigma_i for 1 <= i < t.size(): swap factors i and i+1 (1-based).
TensorElement sigma(int i, const TensorElement& t);
std::pair<TensorElement, SwapCase> sigma_traced(int i, const TensorElement& t);

/// Applies a sigma word; the rightmost index acts first, as in operator composition.
TensorElement apply_sigma_word(std::span<const int> word, const TensorElement& t);

}  // namespace bbs
