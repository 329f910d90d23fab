#include "bbs/crystals.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <string>

namespace bbs {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void append_rows(Alphabet alphabet, int length, std::vector<Letter>& prefix, std::vector<Factor>& out) {
  if (static_cast<int>(prefix.size()) == length) {
    out.emplace_back(RowTableau(alphabet, prefix));
    return;
  }
  const Letter lo = prefix.empty() ? 1 : prefix.back();
  for (Letter a = lo; a <= alphabet.size(); ++a) {
    prefix.push_back(a);
    append_rows(alphabet, length, prefix, out);
    prefix.pop_back();
  }
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace

// --- Alphabet -------------------------------------------------------------

Alphabet::Alphabet(int n) : n_(n) {
  if (n < 2) throw ContractViolation("alphabet size must be at least 2, got " + std::to_string(n));
}

void Alphabet::check_index(int i) const {
  if (i < 1 || i >= n_)
    throw ContractViolation("crystal index " + std::to_string(i) + " outside 1.." + std::to_string(n_ - 1));
}

// --- RowTableau / ColumnPair ----------------------------------------------

RowTableau::RowTableau(Alphabet alphabet, std::vector<Letter> entries)
    : alphabet_(alphabet), entries_(std::move(entries)) {
  if (entries_.empty()) throw ContractViolation("row tableau must have length >= 1");
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (!alphabet_.contains(entries_[k]))
      throw ContractViolation("row entry " + std::to_string(entries_[k]) + " outside alphabet");
    if (k > 0 && entries_[k - 1] > entries_[k]) throw ContractViolation("row entries must be weakly increasing");
  }
}

RowTableau RowTableau::vacuum(Alphabet alphabet, int capacity) {
  if (capacity < 1) throw ContractViolation("row capacity must be >= 1");
  return RowTableau(alphabet, std::vector<Letter>(capacity, 1));
}

int RowTableau::count(Letter a) const {
  return static_cast<int>(std::count(entries_.begin(), entries_.end(), a));
}

ColumnPair::ColumnPair(Alphabet alphabet, Letter top, Letter bottom)
    : alphabet_(alphabet), top_(top), bottom_(bottom) {
  if (!alphabet_.contains(top_) || !alphabet_.contains(bottom_))
    throw ContractViolation("column entry outside alphabet");
  if (top_ >= bottom_) throw ContractViolation("column entries must be strictly increasing");
}

// --- shapes ---------------------------------------------------------------

FactorShape FactorShape::row(int l) {
  if (l < 1) throw ContractViolation("row shape length must be >= 1");
  return {Kind::Row, l};
}

FactorShape shape_of(const Factor& b) {
  return std::visit(overloaded{[](const RowTableau& r) { return FactorShape::row(r.capacity()); },
                               [](const ColumnPair&) { return FactorShape::column(); }},
                    b);
}

Shape::Shape(std::initializer_list<int> parts) : Shape(std::vector<int>(parts)) {}

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw ContractViolation("shape parts must be positive");
    if (k > 0 && parts_[k - 1] < parts_[k]) throw ContractViolation("shape parts must be weakly decreasing");
  }
}

Shape Shape::of(FactorShape s) { return s.is_row() ? Shape{s.length} : Shape{1, 1}; }

int Shape::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

// --- Weight / CountVector -------------------------------------------------

int Weight::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

Weight& Weight::operator+=(const Weight& other) {
  if (counts.size() != other.counts.size()) throw ContractViolation("weights over different alphabets");
  for (std::size_t k = 0; k < counts.size(); ++k) counts[k] += other.counts[k];
  return *this;
}

Weight Weight::of_shape(const Shape& shape, Alphabet alphabet) {
  if (shape.rows() > alphabet.size()) throw ContractViolation("shape has more rows than letters");
  Weight w(alphabet);
  for (int r = 0; r < shape.rows(); ++r) w.counts[r] = shape.parts()[r];
  return w;
}

CountVector::CountVector(std::vector<int> counts) : counts_(std::move(counts)) {
  if (counts_.size() < 2) throw ContractViolation("count vector needs n >= 2 entries");
  for (int x : counts_)
    if (x < 0) throw ContractViolation("count vector entries must be non-negative");
  if (capacity() < 1) throw ContractViolation("count vector must have positive total");
}

int CountVector::capacity() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

CountVector row_to_counts(const RowTableau& b) {
  std::vector<int> c(b.alphabet().size(), 0);
  for (Letter a : b.entries()) ++c[a - 1];
  return CountVector(std::move(c));
}

RowTableau counts_to_row(const CountVector& c) {
  std::vector<Letter> entries;
  entries.reserve(c.capacity());
  for (int a = 1; a <= c.size(); ++a) entries.insert(entries.end(), c[a], a);
  return RowTableau(Alphabet(c.size()), std::move(entries));
}

// --- TensorElement --------------------------------------------------------

TensorElement::TensorElement(std::vector<Factor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw ContractViolation("tensor element needs at least one factor");
  const Alphabet a = alphabet();
  for (const Factor& b : factors_) {
    const Alphabet ab = std::visit([](const auto& x) { return x.alphabet(); }, b);
    if (ab != a) throw ContractViolation("tensor factors over different alphabets");
  }
}

Alphabet TensorElement::alphabet() const {
  return std::visit([](const auto& x) { return x.alphabet(); }, factors_.front());
}

std::vector<FactorShape> TensorElement::shapes() const {
  std::vector<FactorShape> out;
  out.reserve(factors_.size());
  for (const Factor& b : factors_) out.push_back(shape_of(b));
  return out;
}

TensorElement TensorElement::with(std::size_t k, Factor b) const {
  std::vector<Factor> f = factors_;
  f.at(k) = std::move(b);
  return TensorElement(std::move(f));
}

// --- single-factor operators ------------------------------------------------

std::optional<RowTableau> ftilde(int i, const RowTableau& b) {
  b.alphabet().check_index(i);
  std::vector<Letter> e = b.entries();
  auto it = std::find(e.rbegin(), e.rend(), i);
  if (it == e.rend()) return std::nullopt;
  *it = i + 1;
  return RowTableau(b.alphabet(), std::move(e));
}

std::optional<RowTableau> etilde(int i, const RowTableau& b) {
  b.alphabet().check_index(i);
  std::vector<Letter> e = b.entries();
  auto it = std::find(e.begin(), e.end(), i + 1);
  if (it == e.end()) return std::nullopt;
  *it = i;
  return RowTableau(b.alphabet(), std::move(e));
}

std::optional<ColumnPair> ftilde(int i, const ColumnPair& b) {
  b.alphabet().check_index(i);
  if (!b.contains(i) || b.contains(i + 1)) return std::nullopt;
  if (b.top() == i) return ColumnPair(b.alphabet(), i + 1, b.bottom());
  return ColumnPair(b.alphabet(), b.top(), i + 1);
}

std::optional<ColumnPair> etilde(int i, const ColumnPair& b) {
  b.alphabet().check_index(i);
  if (!b.contains(i + 1) || b.contains(i)) return std::nullopt;
  if (b.top() == i + 1) return ColumnPair(b.alphabet(), i, b.bottom());
  return ColumnPair(b.alphabet(), b.top(), i);
}

std::optional<Factor> ftilde(int i, const Factor& b) {
  return std::visit([i](const auto& x) -> std::optional<Factor> {
    if (auto y = ftilde(i, x)) return Factor(*y);
    return std::nullopt;
  }, b);
}

std::optional<Factor> etilde(int i, const Factor& b) {
  return std::visit([i](const auto& x) -> std::optional<Factor> {
    if (auto y = etilde(i, x)) return Factor(*y);
    return std::nullopt;
  }, b);
}

EpsPhi eps_phi(int i, const RowTableau& b) {
  b.alphabet().check_index(i);
  return {b.count(i + 1), b.count(i)};
}

EpsPhi eps_phi(int i, const ColumnPair& b) {
  b.alphabet().check_index(i);
  const bool has_i = b.contains(i);
  const bool has_next = b.contains(i + 1);
  return {has_next && !has_i ? 1 : 0, has_i && !has_next ? 1 : 0};
}

EpsPhi eps_phi(int i, const Factor& b) {
  return std::visit([i](const auto& x) { return eps_phi(i, x); }, b);
}

EpsPhi combine(EpsPhi left, EpsPhi right) {
  return {std::max(left.eps, left.eps + right.eps - left.phi),
          std::max(right.phi, left.phi + right.phi - right.eps)};
}

EpsPhi eps_phi(int i, const TensorElement& t) {
  EpsPhi acc = eps_phi(i, t[0]);
  for (std::size_t k = 1; k < t.size(); ++k) acc = combine(acc, eps_phi(i, t[k]));
  return acc;
}

namespace {

// Position of the factor an operator acts on, viewing t as
// (b_1 ⊗ ... ⊗ b_{k-1}) ⊗ b_k and descending into the left part while
// `go_left(phi(left), eps(b_k))` holds.
template <class GoLeft>
std::size_t select_factor(int i, const TensorElement& t, GoLeft go_left) {
  std::vector<EpsPhi> prefix(t.size());
  prefix[0] = eps_phi(i, t[0]);
  for (std::size_t k = 1; k < t.size(); ++k) prefix[k] = combine(prefix[k - 1], eps_phi(i, t[k]));
  std::size_t k = t.size() - 1;
  while (k > 0 && go_left(prefix[k - 1].phi, eps_phi(i, t[k]).eps)) --k;
  return k;
}

}  // namespace

std::optional<TensorElement> ftilde(int i, const TensorElement& t) {
  t.alphabet().check_index(i);
  const std::size_t k = select_factor(i, t, [](int phi, int eps) { return phi > eps; });
  auto b = ftilde(i, t[k]);
  if (!b) return std::nullopt;
  return t.with(k, std::move(*b));
}

std::optional<TensorElement> etilde(int i, const TensorElement& t) {
  t.alphabet().check_index(i);
  const std::size_t k = select_factor(i, t, [](int phi, int eps) { return phi >= eps; });
  auto b = etilde(i, t[k]);
  if (!b) return std::nullopt;
  return t.with(k, std::move(*b));
}

bool is_highest_weight(const TensorElement& t) {
  for (int i = 1; i < t.alphabet().size(); ++i)
    if (eps_phi(i, t).eps != 0) return false;
  return true;
}

// --- weights ----------------------------------------------------------------

Weight weight_of(const RowTableau& b) { return Weight(row_to_counts(b).counts()); }

Weight weight_of(const ColumnPair& b) {
  Weight w(b.alphabet());
  ++w.counts[b.top() - 1];
  ++w.counts[b.bottom() - 1];
  return w;
}

Weight weight_of(const Factor& b) {
  return std::visit([](const auto& x) { return weight_of(x); }, b);
}

Weight weight_of(const TensorElement& t) {
  Weight w(t.alphabet());
  for (const Factor& b : t.factors()) w += weight_of(b);
  return w;
}

// --- enumeration ------------------------------------------------------------

std::size_t max_domain() {
  if (const char* env = std::getenv("BBS_MAX_DOMAIN")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1'000'000;
}

std::size_t product_size(std::span<const FactorShape> shapes, Alphabet alphabet) {
  const auto n = static_cast<std::size_t>(alphabet.size());
  std::size_t total = 1;
  for (const FactorShape& s : shapes) {
    const std::size_t m = s.is_row() ? binomial(n + s.length - 1, s.length) : binomial(n, 2);
    if (m != 0 && total > static_cast<std::size_t>(-1) / m) return static_cast<std::size_t>(-1);
    total *= m;
  }
  return total;
}

std::vector<Factor> enumerate_factor(FactorShape shape, Alphabet alphabet) {
  std::vector<Factor> out;
  if (shape.is_row()) {
    std::vector<Letter> prefix;
    append_rows(alphabet, shape.length, prefix, out);
  } else {
    for (Letter a = 1; a <= alphabet.size(); ++a)
      for (Letter b = a + 1; b <= alphabet.size(); ++b) out.emplace_back(ColumnPair(alphabet, a, b));
  }
  return out;
}

std::vector<TensorElement> enumerate_product(std::span<const FactorShape> shapes, Alphabet alphabet,
                                             std::size_t limit) {
  if (shapes.empty()) throw ContractViolation("product needs at least one factor shape");
  const std::size_t size = product_size(shapes, alphabet);
  if (size > limit)
    throw DomainTooLarge("product crystal has " + std::to_string(size) + " elements, cap is " +
                         std::to_string(limit));
  std::vector<std::vector<Factor>> factors;
  for (const FactorShape& s : shapes) factors.push_back(enumerate_factor(s, alphabet));

  std::vector<TensorElement> out;
  out.reserve(size);
  std::vector<Factor> current;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == factors.size()) {
      out.emplace_back(current);
      return;
    }
    for (const Factor& b : factors[k]) {
      current.push_back(b);
      rec(k + 1);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<TensorElement> enumerate_highest_weights(std::span<const FactorShape> shapes,
                                                     Alphabet alphabet, std::size_t limit) {
  std::vector<TensorElement> hw;
  for (TensorElement& t : enumerate_product(shapes, alphabet, limit))
    if (is_highest_weight(t)) hw.push_back(std::move(t));
  std::stable_sort(hw.begin(), hw.end(), [](const TensorElement& a, const TensorElement& b) {
    return weight_of(a) > weight_of(b);
  });
  return hw;
}

std::map<Weight, std::vector<TensorElement>> group_by_weight(std::span<const TensorElement> elements) {
  std::map<Weight, std::vector<TensorElement>> groups;
  for (const TensorElement& t : elements) groups[weight_of(t)].push_back(t);
  return groups;
}

}  // namespace bbs
