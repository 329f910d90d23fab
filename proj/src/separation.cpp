#include "bbs/separation.hpp"

#include <algorithm>
#include <numeric>

#include "bbs/text.hpp"

namespace bbs {

namespace {

int capacity_up_to(const BasicPath&, int f) { return f; }

int capacity_up_to(const InhomPath& p, int f) {
  int total = 0;
  for (int k = 1; k <= f; ++k) total += p.capacity(k);
  return total;
}

std::string describe(const BasicPath& p) {
  return p.alphabet().size() <= 9 ? to_ascii(p) : "basic path of length " + std::to_string(p.length());
}

std::string describe(const InhomPath& p) { return to_string(p); }

template <class Path>
void push_sweep(SeparationRecord<Path>& rec, NaturalStep<Path> step) {
  rec.removed.push_back(step.carrier.bottom());
  rec.traces.push_back(std::move(step.trace));
  rec.states.push_back(std::move(step.path));
}

template <class Path>
void finish(SeparationRecord<Path>& rec) {
  rec.monochrome = rec.states.back();
  std::vector<Letter> y(rec.removed.rbegin(), rec.removed.rend());
  for (Letter a : y) rec.carriers.emplace_back(rec.monochrome.alphabet(), 1, a);
  rec.word = ColourWord(std::move(y));
}

template <class Path>
SeparationRecord<Path> decode_minimal(const Path& p) {
  SeparationRecord<Path> rec{p, {}, {}, {p}, {}, {}};
  // A run of sweeps that all take off a 2 cannot exceed the total capacity
  // up to the front while a letter >= 3 remains.
  int run = 0;
  int run_bound = capacity_up_to(p, front(p));
  while (!is_monochrome(rec.states.back())) {
    NaturalStep<Path> step = T_natural(rec.states.back());
    if (step.carrier.bottom() == 2) {
      if (++run > run_bound) throw InternalError("decoding made no progress on " + describe(p));
    } else {
      run = 0;
      run_bound = capacity_up_to(step.path, front(step.path));
    }
    push_sweep(rec, std::move(step));
  }
  finish(rec);
  return rec;
}

template <class Path>
SeparationRecord<Path> decode_fixed(const Path& p, int sweeps) {
  if (sweeps < 0) throw ContractViolation("sweep count must be non-negative");
  SeparationRecord<Path> rec{p, {}, {}, {p}, {}, {}};
  for (int s = 0; s < sweeps; ++s) push_sweep(rec, T_natural(rec.states.back()));
  if (!is_monochrome(rec.states.back()))
    throw ContractViolation(std::to_string(sweeps) + " sweeps leave letters >= 3 in " + describe(p));
  finish(rec);
  return rec;
}

template <class Path>
Path encode_impl(const Path& monochrome, const ColourWord& word) {
  if (!is_monochrome(monochrome)) throw ContractViolation("encode needs a path without letters >= 3");
  Path p = monochrome;
  for (int k = 0; k < word.size(); ++k) {
    const ColumnPair b(p.alphabet(), 1, word.letters()[k]);
    auto prev = T_natural_inverse(p, b);
    if (!prev)
      throw InvalidWord("letter y_" + std::to_string(k + 1) + " = " + std::to_string(word.letters()[k]) +
                        " cannot be restored into " + describe(p));
    p = std::move(*prev);
  }
  return p;
}

template <class Path>
CommutationReport<Path> commutation_impl(const Path& p, CarrierCapacity l) {
  const Path evolved = T_ell(l, p);
  const int n = std::max(decode(p).steps(), decode(evolved).steps());
  const auto rec = decode_exactly(p, n);
  const auto rec_evolved = decode_exactly(evolved, n);

  CommutationReport<Path> report{n, T_ell(l, rec.monochrome), rec_evolved.monochrome, rec.word, rec_evolved.word,
                                 std::nullopt};
  if (report.evolved_monochrome != report.monochrome_of_evolved) {
    report.mismatch = "T_l(p~) = " + describe(report.evolved_monochrome) + " but (T_l p)~ = " +
                      describe(report.monochrome_of_evolved) + " for p = " + describe(p);
  } else if (report.word != report.evolved_word) {
    const auto& a = report.word.letters();
    const auto& b = report.evolved_word.letters();
    const auto at = std::mismatch(a.begin(), a.end(), b.begin()).first - a.begin();
    report.mismatch = "words differ at y_" + std::to_string(at + 1) + ": " + report.word.str() + " vs " +
                      report.evolved_word.str() + " for p = " + describe(p);
  }
  return report;
}

}  // namespace

ColourWord::ColourWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (Letter a : letters_)
    if (a < 2) throw ContractViolation("colour word letters must be >= 2");
}

ColourWord ColourWord::parse(std::string_view digits) {
  std::vector<Letter> letters;
  for (std::size_t k = 0; k < digits.size(); ++k) {
    const char c = digits[k];
    if (c < '2' || c > '9')
      throw ParseError("colour word: unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(k));
    letters.push_back(c - '0');
  }
  return ColourWord(std::move(letters));
}

std::string ColourWord::str() const {
  std::string s;
  const bool wide = std::any_of(letters_.begin(), letters_.end(), [](Letter a) { return a > 9; });
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (wide && k > 0) s += ',';
    s += std::to_string(letters_[k]);
  }
  return s;
}

SeparationRecord<BasicPath> decode(const BasicPath& p) { return decode_minimal(p); }
SeparationRecord<InhomPath> decode(const InhomPath& p) { return decode_minimal(p); }

SeparationRecord<BasicPath> decode_exactly(const BasicPath& p, int sweeps) { return decode_fixed(p, sweeps); }
SeparationRecord<InhomPath> decode_exactly(const InhomPath& p, int sweeps) { return decode_fixed(p, sweeps); }

BasicPath encode(const BasicPath& monochrome, const ColourWord& word) { return encode_impl(monochrome, word); }
InhomPath encode(const InhomPath& monochrome, const ColourWord& word) { return encode_impl(monochrome, word); }

CommutationReport<BasicPath> check_commutation(const BasicPath& p, CarrierCapacity l) {
  return commutation_impl(p, l);
}

CommutationReport<InhomPath> check_commutation(const InhomPath& p, CarrierCapacity l) {
  return commutation_impl(p, l);
}

ColourWord conserved_word(const BasicPath& p) { return decode(p).word; }
ColourWord conserved_word(const InhomPath& p) { return decode(p).word; }

}  // namespace bbs
