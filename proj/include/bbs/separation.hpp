#pragma once

// Colour separation p = p~ ⊕ y: repeated decoding sweeps strip the letters
// >= 3 out of a path, leaving a monochrome path p~ and the colour word y.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bbs/dynamics.hpp"

namespace bbs {

/// y_1 ... y_N, every letter >= 2.
class ColourWord {
 public:
  ColourWord() = default;
  explicit ColourWord(std::vector<Letter> letters);
  /// Digits only, e.g. "55432542".
  static ColourWord parse(std::string_view digits);

  const std::vector<Letter>& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  std::string str() const;

  friend bool operator==(const ColourWord&, const ColourWord&) = default;

 private:
  std::vector<Letter> letters_;
};

template <class Path>
struct SeparationRecord {
  Path monochrome;
  /// Removed letters in reverse order of removal.
  ColourWord word;
  /// b_1 ... b_N with b_i = [1/y_i].
  std::vector<ColumnPair> carriers;
  /// states[s] = T_natural^s(p), s = 0..N.
  std::vector<Path> states;
  /// removed[s] is the letter taken off states[s].
  std::vector<Letter> removed;
  std::vector<EvolutionTrace<Path>> traces;

  int steps() const { return static_cast<int>(removed.size()); }
};

/// Runs the decoding carrier until no letter >= 3 is left (minimal N).
SeparationRecord<BasicPath> decode(const BasicPath& p);
SeparationRecord<InhomPath> decode(const InhomPath& p);

/// Exactly `sweeps` decoding sweeps; throws ContractViolation if the result still has a letter >= 3.
SeparationRecord<BasicPath> decode_exactly(const BasicPath& p, int sweeps);
SeparationRecord<InhomPath> decode_exactly(const InhomPath& p, int sweeps);

/// Inverse of decode: rebuilds p from (p~, y), consuming y_1 first.
/// Throws InvalidWord when (p~, y) is not a decode image.
BasicPath encode(const BasicPath& monochrome, const ColourWord& word);
InhomPath encode(const InhomPath& monochrome, const ColourWord& word);

template <class Path>
struct CommutationReport {
  int sweeps = 0;  // common N
  Path evolved_monochrome;   // T_l(p~)
  Path monochrome_of_evolved;  // (T_l(p))~
  ColourWord word;           // y of p with N sweeps
  ColourWord evolved_word;   // y of T_l(p) with N sweeps
  std::optional<std::string> mismatch;

  bool passed() const { return !mismatch; }
};

/// Checks T_l(p~) = (T_l(p))~ and b_i = b'_i for a common N.
CommutationReport<BasicPath> check_commutation(const BasicPath& p, CarrierCapacity l);
CommutationReport<InhomPath> check_commutation(const InhomPath& p, CarrierCapacity l);

ColourWord conserved_word(const BasicPath& p);
ColourWord conserved_word(const InhomPath& p);

}  // namespace bbs
