#include "bbs/isomorphisms.hpp"

#include <algorithm>
#include <string>

namespace bbs {

namespace {

void require_box(const RowTableau& b, const char* what) {
  if (b.capacity() != 1) throw ContractViolation(std::string(what) + ": expected a single box");
}

void require_same_alphabet(Alphabet a, Alphabet b) {
  if (a != b) throw ContractViolation("swap of factors over different alphabets");
}

RowTableau box(Alphabet alphabet, Letter a) { return RowTableau(alphabet, {a}); }

// Number of entries of `row` strictly below `value`: the gap index g with
// row_g < value <= row_{g+1} (1-based, row_0 = 0, row_{l+1} = +inf).
int gap_below(const std::vector<Letter>& row, Letter value) {
  return static_cast<int>(std::lower_bound(row.begin(), row.end(), value) - row.begin());
}

// Number of entries <= value: 1-based index of the first entry > value, minus one.
int gap_at_or_below(const std::vector<Letter>& row, Letter value) {
  return static_cast<int>(std::upper_bound(row.begin(), row.end(), value) - row.begin());
}

}  // namespace

std::string_view to_string(SwapCase c) {
  switch (c) {
    case SwapCase::Identity: return "id";
    case SwapCase::ProcessA: return "a";
    case SwapCase::ProcessB: return "b";
    case SwapCase::ProcessC: return "c";
    case SwapCase::ProcessD: return "d";
    case SwapCase::ProcessE: return "e";
    case SwapCase::ProcessF: return "f";
    case SwapCase::ProcessG: return "g";
    case SwapCase::IotaUpper: return "iota:1";
    case SwapCase::IotaLower: return "iota:2";
    case SwapCase::IotaInvUpper: return "iota^-1:1";
    case SwapCase::IotaInvLower: return "iota^-1:2";
    case SwapCase::PrimeInv1: return "iota'^-1:1";
    case SwapCase::PrimeInv2: return "iota'^-1:2";
    case SwapCase::PrimeInv3: return "iota'^-1:3";
    case SwapCase::DPrime1: return "iota'':1";
    case SwapCase::DPrime2: return "iota'':2";
    case SwapCase::DPrime3: return "iota'':3";
    case SwapCase::DPrime4: return "iota'':4";
    case SwapCase::DPrime3Edge: return "iota'':3'";
    case SwapCase::InvI: return "I";
    case SwapCase::InvII: return "II";
    case SwapCase::InvIII: return "III";
    case SwapCase::InvIV: return "IV";
    case SwapCase::InvV: return "V";
    case SwapCase::R: return "R";
  }
  return "?";
}

// --- iota -------------------------------------------------------------------

Swapped<RowTableau, RowTableau> iota(const RowTableau& row, const RowTableau& b) {
  require_box(b, "iota");
  require_same_alphabet(row.alphabet(), b.alphabet());
  const Alphabet abc = row.alphabet();
  const Letter beta = b[0];
  std::vector<Letter> a = row.entries();
  if (beta <= a.front()) {
    const Letter out = a.back();
    a.pop_back();
    a.insert(a.begin(), beta);
    return {box(abc, out), RowTableau(abc, std::move(a)), SwapCase::IotaUpper};
  }
  // alpha_p < beta <= alpha_{p+1}
  const int p = gap_below(a, beta);
  const Letter out = a[p - 1];
  a[p - 1] = beta;
  return {box(abc, out), RowTableau(abc, std::move(a)), SwapCase::IotaLower};
}

Swapped<RowTableau, RowTableau> iota_inv(const RowTableau& b, const RowTableau& row) {
  require_box(b, "iota_inv");
  require_same_alphabet(row.alphabet(), b.alphabet());
  const Alphabet abc = row.alphabet();
  const Letter c = b[0];
  std::vector<Letter> r = row.entries();
  if (c >= r.back()) {
    const Letter out = r.front();
    r.erase(r.begin());
    r.push_back(c);
    return {RowTableau(abc, std::move(r)), box(abc, out), SwapCase::IotaInvUpper};
  }
  // first position with r_p > c
  const int p = gap_at_or_below(r, c);
  const Letter out = r[p];
  r[p] = c;
  return {RowTableau(abc, std::move(r)), box(abc, out), SwapCase::IotaInvLower};
}

// --- iota' ------------------------------------------------------------------

Swapped<RowTableau, ColumnPair> iota_prime(const ColumnPair& carrier, const RowTableau& b) {
  require_box(b, "iota_prime");
  require_same_alphabet(carrier.alphabet(), b.alphabet());
  const Alphabet abc = carrier.alphabet();
  const Letter alpha = carrier.top();
  const Letter beta = carrier.bottom();
  const Letter gamma = b[0];
  if (gamma <= alpha) {
    const SwapCase tag = gamma > 1 ? SwapCase::ProcessE : alpha == 1 ? SwapCase::ProcessA : SwapCase::ProcessB;
    return {box(abc, alpha), ColumnPair(abc, gamma, beta), tag};
  }
  if (gamma <= beta) {
    return {box(abc, beta), ColumnPair(abc, alpha, gamma), alpha == 1 ? SwapCase::ProcessC : SwapCase::ProcessF};
  }
  return {box(abc, alpha), ColumnPair(abc, beta, gamma), alpha == 1 ? SwapCase::ProcessD : SwapCase::ProcessG};
}

Swapped<ColumnPair, RowTableau> iota_prime_inv(const RowTableau& b, const ColumnPair& carrier) {
  require_box(b, "iota_prime_inv");
  require_same_alphabet(carrier.alphabet(), b.alphabet());
  const Alphabet abc = carrier.alphabet();
  const Letter e = b[0];
  const Letter top = carrier.top();
  const Letter bottom = carrier.bottom();
  if (e < top) return {ColumnPair(abc, e, top), box(abc, bottom), SwapCase::PrimeInv3};
  if (e < bottom) return {ColumnPair(abc, e, bottom), box(abc, top), SwapCase::PrimeInv1};
  return {ColumnPair(abc, top, e), box(abc, bottom), SwapCase::PrimeInv2};
}

// --- iota'' -----------------------------------------------------------------

Swapped<ColumnPair, RowTableau> iota_dprime(const RowTableau& row, const ColumnPair& col) {
  require_same_alphabet(row.alphabet(), col.alphabet());
  const Alphabet abc = row.alphabet();
  const Letter beta = col.top();
  const Letter gamma = col.bottom();
  std::vector<Letter> a = row.entries();
  const int l = row.capacity();
  // alpha_i < beta <= alpha_{i+1}, alpha_j < gamma <= alpha_{j+1}, i <= j.
  const int i = gap_below(a, beta);
  const int j = gap_below(a, gamma);
  auto alpha = [&](int k) { return a[k - 1]; };

  if (i >= 1 && j > i) {
    const ColumnPair out(abc, alpha(i), alpha(j));
    a[i - 1] = beta;
    a[j - 1] = gamma;
    return {out, RowTableau(abc, std::move(a)), SwapCase::DPrime1};
  }
  if (i >= 1) {
    const ColumnPair out(abc, alpha(i), beta);
    a[i - 1] = gamma;
    return {out, RowTableau(abc, std::move(a)), SwapCase::DPrime2};
  }
  // beta <= alpha_1 from here on.
  if (j == l) {
    const ColumnPair out(abc, alpha(l), gamma);
    a.pop_back();
    a.insert(a.begin(), beta);
    return {out, RowTableau(abc, std::move(a)), SwapCase::DPrime4};
  }
  if (j >= 1) {
    const ColumnPair out(abc, alpha(j), alpha(l));
    a[j - 1] = gamma;
    a.pop_back();
    a.insert(a.begin(), beta);
    return {out, RowTableau(abc, std::move(a)), SwapCase::DPrime3};
  }
  // beta < gamma <= alpha_1
  const ColumnPair out(abc, beta, alpha(l));
  a.pop_back();
  a.insert(a.begin(), gamma);
  return {out, RowTableau(abc, std::move(a)), SwapCase::DPrime3Edge};
}

Swapped<RowTableau, ColumnPair> iota_dprime_inv(const ColumnPair& col, const RowTableau& row) {
  require_same_alphabet(row.alphabet(), col.alphabet());
  const Alphabet abc = row.alphabet();
  const Letter alpha = col.top();
  const Letter beta = col.bottom();
  std::vector<Letter> g = row.entries();
  const int l = row.capacity();
  // gamma_{i-1} <= alpha < gamma_i, gamma_{j-1} <= beta < gamma_j (1-based, may be l+1).
  const int i = gap_at_or_below(g, alpha) + 1;
  const int j = gap_at_or_below(g, beta) + 1;
  auto gamma = [&](int k) { return g[k - 1]; };

  if (i == l + 1) {  // (I) gamma_l <= alpha
    const ColumnPair out(abc, gamma(1), beta);
    g.erase(g.begin());
    g.push_back(alpha);
    return {RowTableau(abc, std::move(g)), out, SwapCase::InvI};
  }
  if (j == l + 1 && i >= 2) {  // (II)
    const ColumnPair out(abc, gamma(1), gamma(i));
    g[i - 1] = alpha;
    g.erase(g.begin());
    g.push_back(beta);
    return {RowTableau(abc, std::move(g)), out, SwapCase::InvII};
  }
  if (j == l + 1) {  // (III) alpha < gamma_1, gamma_l <= beta
    const ColumnPair out(abc, alpha, gamma(1));
    g.erase(g.begin());
    g.push_back(beta);
    return {RowTableau(abc, std::move(g)), out, SwapCase::InvIII};
  }
  if (i < j) {  // (IV)
    const ColumnPair out(abc, gamma(i), gamma(j));
    g[i - 1] = alpha;
    g[j - 1] = beta;
    return {RowTableau(abc, std::move(g)), out, SwapCase::InvIV};
  }
  // (V) gamma_{i-1} <= alpha, beta < gamma_i
  const ColumnPair out(abc, beta, gamma(i));
  g[i - 1] = alpha;
  return {RowTableau(abc, std::move(g)), out, SwapCase::InvV};
}

// --- combinatorial R ----------------------------------------------------------

std::vector<int> r_potential(const CountVector& x, const CountVector& y) {
  const int n = x.size();
  if (y.size() != n) throw ContractViolation("combinatorial R needs count vectors over one alphabet");
  // subscripts modulo n with representatives 1..n
  auto wrap = [n](int k) { return (k - 1) % n + 1; };
  std::vector<int> P(n + 1, 0);  // P[1..n]
  for (int i = 1; i <= n; ++i) {
    int best = 0;
    int partial = 0;  // sum_{k<j} (y_{k+i-1} - x_{k+i-1})
    for (int j = 1; j <= n; ++j) {
      const int candidate = partial + y[wrap(j + i - 1)];
      if (j == 1 || candidate > best) best = candidate;
      partial += y[wrap(j + i - 1)] - x[wrap(j + i - 1)];
    }
    P[i] = best;
  }
  return std::vector<int>(P.begin() + 1, P.end());
}

std::pair<CountVector, CountVector> combinatorial_R(const CountVector& x, const CountVector& y) {
  const int n = x.size();
  const std::vector<int> P = r_potential(x, y);
  auto p = [&](int i) { return P[(i - 1) % n]; };  // P_{n+1} = P_1
  std::vector<int> xs(n), ys(n);
  for (int i = 1; i <= n; ++i) {
    xs[i - 1] = y[i] + p(i + 1) - p(i);
    ys[i - 1] = x[i] + p(i) - p(i + 1);
  }
  return {CountVector(std::move(xs)), CountVector(std::move(ys))};
}

Swapped<RowTableau, RowTableau> combinatorial_R(const RowTableau& x, const RowTableau& y) {
  require_same_alphabet(x.alphabet(), y.alphabet());
  auto [xs, ys] = combinatorial_R(row_to_counts(x), row_to_counts(y));
  return {counts_to_row(xs), counts_to_row(ys), SwapCase::R};
}

// --- dispatch ---------------------------------------------------------------

namespace {

template <class L, class R>
SwapResult widen(Swapped<L, R> s) {
  return {Factor(std::move(s.left)), Factor(std::move(s.right)), s.tag};
}

}  // namespace

SwapResult swap_factors(const Factor& left, const Factor& right) {
  const auto* lrow = std::get_if<RowTableau>(&left);
  const auto* rrow = std::get_if<RowTableau>(&right);
  const auto* lcol = std::get_if<ColumnPair>(&left);
  const auto* rcol = std::get_if<ColumnPair>(&right);

  if (lrow && rrow) {
    if (lrow->capacity() == rrow->capacity()) return {left, right, SwapCase::Identity};
    if (rrow->capacity() == 1) return widen(iota(*lrow, *rrow));
    if (lrow->capacity() == 1) return widen(iota_inv(*lrow, *rrow));
    return widen(combinatorial_R(*lrow, *rrow));
  }
  if (lrow && rcol) {
    if (lrow->capacity() == 1) return widen(iota_prime_inv(*lrow, *rcol));
    return widen(iota_dprime(*lrow, *rcol));
  }
  if (lcol && rrow) {
    if (rrow->capacity() == 1) return widen(iota_prime(*lcol, *rrow));
    return widen(iota_dprime_inv(*lcol, *rrow));
  }
  return {left, right, SwapCase::Identity};
}

std::pair<TensorElement, SwapCase> sigma_traced(int i, const TensorElement& t) {
  if (i < 1 || i >= static_cast<int>(t.size()))
    throw ContractViolation("sigma index " + std::to_string(i) + " outside 1.." + std::to_string(t.size() - 1));
  SwapResult s = swap_factors(t[i - 1], t[i]);
  std::vector<Factor> f = t.factors();
  f[i - 1] = std::move(s.left);
  f[i] = std::move(s.right);
  return {TensorElement(std::move(f)), s.tag};
}

TensorElement sigma(int i, const TensorElement& t) { return sigma_traced(i, t).first; }

TensorElement apply_sigma_word(std::span<const int> word, const TensorElement& t) {
  TensorElement out = t;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = sigma(*it, out);
  return out;
}

}  // namespace bbs
