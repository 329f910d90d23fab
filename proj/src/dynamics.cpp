#include "bbs/dynamics.hpp"

#include <algorithm>
#include <string>

namespace bbs {

namespace {

// Working form shared by both path kinds: every site is a row tableau
// (a box for basic paths).
struct Sites {
  Alphabet alphabet;
  std::vector<RowTableau> rows;
  int tail_capacity;

  RowTableau& at(int position) {
    while (static_cast<int>(rows.size()) < position) rows.push_back(RowTableau::vacuum(alphabet, tail_capacity));
    return rows[position - 1];
  }

  int front() const {
    for (int k = static_cast<int>(rows.size()); k >= 1; --k)
      if (!rows[k - 1].is_vacuum()) return k;
    return 0;
  }
};

Sites to_sites(const BasicPath& p) {
  Sites s{p.alphabet(), {}, 1};
  s.rows.reserve(p.sites().size());
  for (Letter a : p.sites()) s.rows.emplace_back(p.alphabet(), std::vector<Letter>{a});
  return s;
}

Sites to_sites(const InhomPath& p) { return Sites{p.alphabet(), p.sites(), p.tail_capacity()}; }

BasicPath to_basic(const Sites& s) {
  std::vector<Letter> letters;
  letters.reserve(s.rows.size());
  for (const RowTableau& r : s.rows) letters.push_back(r[0]);
  return BasicPath(s.alphabet, std::move(letters));
}

InhomPath to_inhom(Sites s) { return InhomPath(s.alphabet, std::move(s.rows), s.tail_capacity); }

enum class Kind { Basic, Inhom };

// u_l ⊗ p -> T_l(p) ⊗ u_l. Basic paths use iota, inhomogeneous ones the combinatorial R.
std::vector<TraceStep> sweep_carrier(Sites& s, int l, Kind kind) {
  std::vector<TraceStep> steps;
  RowTableau carrier = RowTableau::vacuum(s.alphabet, l);
  const int f = s.front();
  for (int k = 1; k <= f || !carrier.is_vacuum(); ++k) {
    RowTableau& site = s.at(k);
    auto out = kind == Kind::Basic ? iota(carrier, site) : combinatorial_R(carrier, site);
    steps.push_back({k, out.tag, carrier, out.right, site, out.left});
    site = std::move(out.left);
    carrier = std::move(out.right);
  }
  return steps;
}

// u_natural ⊗ p -> T_natural(p) ⊗ b(p); sites past F+1 are left untouched
// because the carrier is inert there.
ColumnPair sweep_decoder(Sites& s, Kind kind, std::vector<TraceStep>& steps) {
  ColumnPair carrier = ColumnPair::highest(s.alphabet);
  const int f = s.front();
  for (int k = 1; k <= f + 1; ++k) {
    RowTableau& site = s.at(k);
    if (kind == Kind::Basic) {
      auto out = iota_prime(carrier, site);
      steps.push_back({k, out.tag, carrier, out.right, site, out.left});
      site = std::move(out.left);
      carrier = out.right;
    } else {
      auto out = iota_dprime_inv(carrier, site);
      steps.push_back({k, out.tag, carrier, out.right, site, out.left});
      site = std::move(out.left);
      carrier = out.right;
    }
  }
  if (carrier.top() != 1)
    throw InternalError("decoding carrier left the front holding two balls");
  return carrier;
}

// Right-to-left inverse of sweep_decoder. Returns false if the carrier
// reaching the left end is not u_natural.
bool unsweep_decoder(Sites& s, ColumnPair carrier, Kind kind) {
  for (int k = static_cast<int>(s.rows.size()); k >= 1; --k) {
    RowTableau& site = s.rows[k - 1];
    if (kind == Kind::Basic) {
      auto out = iota_prime_inv(site, carrier);
      carrier = out.left;
      site = std::move(out.right);
    } else {
      auto out = iota_dprime(site, carrier);
      carrier = out.left;
      site = std::move(out.right);
    }
  }
  return carrier == ColumnPair::highest(s.alphabet);
}

template <class Path>
Sites apply_trace(const EvolutionTrace<Path>& trace) {
  Sites s = to_sites(trace.input);
  for (const TraceStep& step : trace.steps) s.at(step.site) = std::get<RowTableau>(step.site_after);
  return s;
}

}  // namespace

// --- paths ------------------------------------------------------------------

BasicPath::BasicPath(Alphabet alphabet, std::vector<Letter> sites)
    : alphabet_(alphabet), sites_(std::move(sites)) {
  for (std::size_t k = 0; k < sites_.size(); ++k)
    if (!alphabet_.contains(sites_[k]))
      throw ContractViolation("site " + std::to_string(k + 1) + " holds letter " + std::to_string(sites_[k]) +
                              " outside 1.." + std::to_string(alphabet_.size()));
  while (!sites_.empty() && sites_.back() == 1) sites_.pop_back();
}

Letter BasicPath::at(int position) const {
  if (position < 1) throw ContractViolation("site positions start at 1");
  return position <= length() ? sites_[position - 1] : 1;
}

InhomPath::InhomPath(Alphabet alphabet, std::vector<RowTableau> sites, int tail_capacity)
    : alphabet_(alphabet), sites_(std::move(sites)), tail_capacity_(tail_capacity) {
  if (tail_capacity_ < 1) throw ContractViolation("tail capacity must be >= 1");
  for (std::size_t k = 0; k < sites_.size(); ++k)
    if (sites_[k].alphabet() != alphabet_)
      throw ContractViolation("site " + std::to_string(k + 1) + " is over a different alphabet");
  while (!sites_.empty() && sites_.back().is_vacuum() && sites_.back().capacity() == tail_capacity_)
    sites_.pop_back();
}

InhomPath InhomPath::vacuum(Alphabet alphabet, const std::vector<int>& capacities, int tail_capacity) {
  std::vector<RowTableau> sites;
  sites.reserve(capacities.size());
  for (int c : capacities) sites.push_back(RowTableau::vacuum(alphabet, c));
  return InhomPath(alphabet, std::move(sites), tail_capacity);
}

int InhomPath::capacity(int position) const {
  if (position < 1) throw ContractViolation("site positions start at 1");
  return position <= length() ? sites_[position - 1].capacity() : tail_capacity_;
}

RowTableau InhomPath::at(int position) const {
  if (position < 1) throw ContractViolation("site positions start at 1");
  return position <= length() ? sites_[position - 1] : RowTableau::vacuum(alphabet_, tail_capacity_);
}

CarrierCapacity::CarrierCapacity(int l) : value_(l) {
  if (l < 1) throw ContractViolation("carrier capacity must be >= 1");
}

BasicPath replay(const EvolutionTrace<BasicPath>& trace) { return to_basic(apply_trace(trace)); }
InhomPath replay(const EvolutionTrace<InhomPath>& trace) { return to_inhom(apply_trace(trace)); }

// --- statistics -------------------------------------------------------------

int ball_count(const BasicPath& p) {
  return static_cast<int>(std::count_if(p.sites().begin(), p.sites().end(), [](Letter a) { return a >= 2; }));
}

int ball_count(const InhomPath& p) {
  int total = 0;
  for (const RowTableau& r : p.sites()) total += r.capacity() - r.count(1);
  return total;
}

bool is_monochrome(const BasicPath& p) {
  return std::all_of(p.sites().begin(), p.sites().end(), [](Letter a) { return a <= 2; });
}

bool is_monochrome(const InhomPath& p) {
  return std::all_of(p.sites().begin(), p.sites().end(), [](const RowTableau& r) { return r.back() <= 2; });
}

Weight weight_of(const BasicPath& p) {
  Weight w(p.alphabet());
  for (Letter a : p.sites())
    if (a >= 2) ++w.counts[a - 1];
  return w;
}

Weight weight_of(const InhomPath& p) {
  Weight w(p.alphabet());
  for (const RowTableau& r : p.sites())
    for (Letter a : r.entries())
      if (a >= 2) ++w.counts[a - 1];
  return w;
}

int front(const BasicPath& p) { return p.length(); }
int front(const InhomPath& p) { return to_sites(p).front(); }

// --- Definition-style evolution ----------------------------------------------

BasicPath K(Letter i, const BasicPath& p) {
  if (i < 2 || i > p.alphabet().size())
    throw ContractViolation("K_i needs 2 <= i <= n, got " + std::to_string(i));
  std::vector<Letter> s = p.sites();
  std::vector<std::size_t> todo;
  for (std::size_t k = 0; k < s.size(); ++k)
    if (s[k] == i) todo.push_back(k);
  for (std::size_t k : todo) {
    std::size_t target = k + 1;
    while (target < s.size() && s[target] != 1) ++target;
    if (target == s.size()) s.push_back(1);
    std::swap(s[k], s[target]);
  }
  return BasicPath(p.alphabet(), std::move(s));
}

BasicPath T_def(const BasicPath& p) {
  BasicPath out = p;
  for (Letter i = p.alphabet().size(); i >= 2; --i) out = K(i, out);
  return out;
}

// --- carrier evolutions --------------------------------------------------------

EvolutionTrace<BasicPath> T_ell_traced(CarrierCapacity l, const BasicPath& p) {
  Sites s = to_sites(p);
  auto steps = sweep_carrier(s, l.resolve(ball_count(p)), Kind::Basic);
  return {p, to_basic(s), std::move(steps)};
}

EvolutionTrace<InhomPath> T_ell_traced(CarrierCapacity l, const InhomPath& p) {
  Sites s = to_sites(p);
  auto steps = sweep_carrier(s, l.resolve(ball_count(p)), Kind::Inhom);
  return {p, to_inhom(std::move(s)), std::move(steps)};
}

BasicPath T_ell(CarrierCapacity l, const BasicPath& p) { return T_ell_traced(l, p).output; }
InhomPath T_ell(CarrierCapacity l, const InhomPath& p) { return T_ell_traced(l, p).output; }

NaturalStep<BasicPath> T_natural(const BasicPath& p) {
  Sites s = to_sites(p);
  std::vector<TraceStep> steps;
  ColumnPair b = sweep_decoder(s, Kind::Basic, steps);
  BasicPath out = to_basic(s);
  return {out, b, {p, out, std::move(steps)}};
}

NaturalStep<InhomPath> T_natural(const InhomPath& p) {
  Sites s = to_sites(p);
  std::vector<TraceStep> steps;
  ColumnPair b = sweep_decoder(s, Kind::Inhom, steps);
  InhomPath out = to_inhom(std::move(s));
  return {out, b, {p, out, std::move(steps)}};
}

std::optional<BasicPath> T_natural_inverse(const BasicPath& image, const ColumnPair& carrier) {
  Sites s = to_sites(image);
  if (!unsweep_decoder(s, carrier, Kind::Basic)) return std::nullopt;
  return to_basic(s);
}

std::optional<InhomPath> T_natural_inverse(const InhomPath& image, const ColumnPair& carrier) {
  Sites s = to_sites(image);
  if (!unsweep_decoder(s, carrier, Kind::Inhom)) return std::nullopt;
  return to_inhom(std::move(s));
}

}  // namespace bbs
