#include "bbs/verify.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <numeric>

#include "bbs/separation.hpp"
#include "bbs/text.hpp"

namespace bbs {

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
  }

 private:
  Clock::time_point start_ = Clock::now();
};

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::string shapes_label(std::span<const FactorShape> shapes) {
  std::string s;
  for (std::size_t k = 0; k < shapes.size(); ++k) {
    if (k > 0) s += ",";
    s += to_string(shapes[k]);
  }
  return s;
}

// Runs `check` on every element (or on seeded samples) until it reports a failure.
template <class Check>
void for_each_sample(std::span<const FactorShape> shapes, Alphabet alphabet, SamplingMode mode, RelationReport& report,
                     Check check) {
  auto visit = [&](const TensorElement& t) {
    ++report.domain;
    try {
      if (auto failure = check(t)) report.counterexample = to_string(t) + ": " + *failure;
    } catch (const std::exception& e) {
      report.counterexample = to_string(t) + ": " + e.what();
    }
    return report.passed();
  };
  if (mode.exhaustive) {
    for (const TensorElement& t : enumerate_product(shapes, alphabet))
      if (!visit(t)) return;
  } else {
    Rng rng(mode.seed);
    for (std::size_t c = 0; c < mode.count; ++c)
      if (!visit(random_element(shapes, alphabet, rng))) return;
  }
}

TensorElement pair_of(const Factor& a, const Factor& b) { return TensorElement({a, b}); }

RowTableau row_from_counts(std::initializer_list<int> counts, Alphabet alphabet) {
  std::vector<int> c(counts);
  c.resize(alphabet.size(), 0);
  return counts_to_row(CountVector(std::move(c)));
}

std::vector<std::pair<Shape, int>> row_row_column_components(int l1, int l2) {
  std::vector<std::pair<Shape, int>> out;
  for (int x = 1; x <= l2; ++x) out.push_back({Shape{l1 + l2 - x, x, 1, 1}, 1});
  for (int x = 0; x <= l2; ++x) out.push_back({Shape{l1 + l2 - x + 1, x + 1}, 1});
  for (int x = 0; x <= l2 - 1; ++x) out.push_back({Shape{l1 + l2 - x, x + 1, 1}, 2});
  out.push_back({Shape{l1, l2 + 1, 1}, 1});
  return out;
}

}  // namespace

// --- random inputs ------------------------------------------------------------

TensorElement random_element(std::span<const FactorShape> shapes, Alphabet alphabet, Rng& rng) {
  const int n = alphabet.size();
  std::vector<Factor> factors;
  for (const FactorShape& s : shapes) {
    if (s.is_row()) {
      std::vector<Letter> letters(s.length);
      for (Letter& a : letters) a = uniform(rng, 1, n);
      std::sort(letters.begin(), letters.end());
      factors.emplace_back(RowTableau(alphabet, std::move(letters)));
    } else {
      const Letter a = uniform(rng, 1, n);
      Letter b = uniform(rng, 1, n - 1);
      if (b >= a) ++b;
      factors.emplace_back(ColumnPair(alphabet, std::min(a, b), std::max(a, b)));
    }
  }
  return TensorElement(std::move(factors));
}

BasicPath random_basic_path(Rng& rng, Alphabet alphabet, int max_balls, int max_length) {
  const int length = uniform(rng, 1, max_length);
  const int balls = uniform(rng, 0, std::min(max_balls, length));
  std::vector<int> positions(length);
  std::iota(positions.begin(), positions.end(), 0);
  std::shuffle(positions.begin(), positions.end(), rng);
  std::vector<Letter> sites(length, 1);
  for (int k = 0; k < balls; ++k) sites[positions[k]] = uniform(rng, 2, alphabet.size());
  return BasicPath(alphabet, std::move(sites));
}

InhomPath random_inhom_path(Rng& rng, Alphabet alphabet, int max_balls, int max_length, int max_capacity) {
  const int length = uniform(rng, 1, max_length);
  const int tail = uniform(rng, 1, max_capacity);
  int budget = uniform(rng, 0, max_balls);
  std::vector<RowTableau> sites;
  sites.reserve(length);
  for (int k = 0; k < length; ++k) {
    std::vector<Letter> letters(uniform(rng, 1, max_capacity), 1);
    for (Letter& a : letters)
      if (budget > 0 && uniform(rng, 0, 2) == 0) {
        a = uniform(rng, 2, alphabet.size());
        --budget;
      }
    std::sort(letters.begin(), letters.end());
    sites.emplace_back(alphabet, std::move(letters));
  }
  return InhomPath(alphabet, std::move(sites), tail);
}

// --- symmetric group ----------------------------------------------------------

RelationReport check_symmetric_group(std::span<const FactorShape> shapes, Alphabet alphabet, SamplingMode mode) {
  Stopwatch clock;
  RelationReport report{"symmetric-group[" + shapes_label(shapes) + "] n=" + std::to_string(alphabet.size()), 0,
                        std::nullopt, 0.0};
  const int k = static_cast<int>(shapes.size());
  for_each_sample(shapes, alphabet, mode, report, [k](const TensorElement& t) -> std::optional<std::string> {
    for (int i = 1; i < k; ++i)
      if (sigma(i, sigma(i, t)) != t) return "sigma_" + std::to_string(i) + "^2 != id";
    for (int i = 1; i < k; ++i)
      for (int j = i + 2; j < k; ++j)
        if (sigma(i, sigma(j, t)) != sigma(j, sigma(i, t)))
          return "sigma_" + std::to_string(i) + " and sigma_" + std::to_string(j) + " do not commute";
    for (int i = 1; i + 1 < k; ++i) {
      const TensorElement lhs = sigma(i, sigma(i + 1, sigma(i, t)));
      const TensorElement rhs = sigma(i + 1, sigma(i, sigma(i + 1, t)));
      if (lhs != rhs)
        return "braid relation at i=" + std::to_string(i) + ": " + to_string(lhs) + " vs " + to_string(rhs);
    }
    return std::nullopt;
  });
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

// --- highest weight chains ------------------------------------------------------

std::vector<HighestWeightChain> row_box_column_chains() {
  const Alphabet n3(3);
  auto chain = [&](std::string name, std::initializer_list<const char*> items) {
    HighestWeightChain c{std::move(name), n3, {}};
    for (const char* s : items) c.elements.push_back(parse_tensor(s, n3));
    return c;
  };
  return {
      chain("B3*B1*Bnat u=<111>*<1>*[2/3]",
            {"<111>*<1>*[2/3]", "<1>*<111>*[2/3]", "<1>*[1/2]*<113>", "[1/2]*<1>*<113>", "[1/2]*<111>*<3>",
             "<111>*[1/2]*<3>", "<111>*<1>*[2/3]"}),
      chain("B3*B1*Bnat u=<111>*<2>*[1/3]",
            {"<111>*<2>*[1/3]", "<1>*<112>*[1/3]", "<1>*[2/3]*<111>", "[1/2]*<3>*<111>", "[1/2]*<113>*<1>",
             "<111>*[2/3]*<1>", "<111>*<2>*[1/3]"}),
  };
}

std::vector<HighestWeightChain> row_row_column_chains(int l1, int l2) {
  if (!(l1 > l2 && l2 >= 1)) throw ContractViolation("row-row-column chains need l1 > l2 >= 1");
  const Alphabet n3(3);
  auto row = [&](int a, int b, int c) { return Factor(row_from_counts({a, b, c}, n3)); };
  const Factor c12 = ColumnPair(n3, 1, 2);
  const Factor c13 = ColumnPair(n3, 1, 3);
  const Factor c23 = ColumnPair(n3, 2, 3);
  std::vector<HighestWeightChain> out;
  for (int x = 0; x <= l2 - 1; ++x) {
    const std::string tag = " l1=" + std::to_string(l1) + " l2=" + std::to_string(l2) + " x=" + std::to_string(x);
    out.push_back({"first" + tag,
                   n3,
                   {
                       TensorElement({row(l1, 0, 0), row(l2 - x, x, 0), c23}),
                       TensorElement({row(l2, 0, 0), row(l1 - x, x, 0), c23}),
                       TensorElement({row(l2, 0, 0), c12, row(l1 - x - 1, x, 1)}),
                       TensorElement({c12, row(l2, 0, 0), row(l1 - x - 1, x, 1)}),
                       TensorElement({c12, row(l1, 0, 0), row(l2 - x - 1, x, 1)}),
                       TensorElement({row(l1, 0, 0), c12, row(l2 - x - 1, x, 1)}),
                       TensorElement({row(l1, 0, 0), row(l2 - x, x, 0), c23}),
                   }});
    out.push_back({"second" + tag,
                   n3,
                   {
                       TensorElement({row(l1, 0, 0), row(l2 - x - 1, x + 1, 0), c13}),
                       TensorElement({row(l2, 0, 0), row(l1 - x - 1, x + 1, 0), c13}),
                       TensorElement({row(l2, 0, 0), c23, row(l1 - x, x, 0)}),
                       TensorElement({c12, row(l2 - 1, 0, 1), row(l1 - x, x, 0)}),
                       TensorElement({c12, row(l1 - 1, 0, 1), row(l2 - x, x, 0)}),
                       TensorElement({row(l1, 0, 0), c23, row(l2 - x, x, 0)}),
                       TensorElement({row(l1, 0, 0), row(l2 - x - 1, x + 1, 0), c13}),
                   }});
  }
  return out;
}

RelationReport check_chain(const HighestWeightChain& chain) {
  Stopwatch clock;
  RelationReport report{"chain " + chain.name, chain.elements.size(), std::nullopt, 0.0};
  if (!is_highest_weight(chain.elements.front())) {
    report.counterexample = "start " + to_string(chain.elements.front()) + " is not highest weight";
  } else if (chain.elements.front() != chain.elements.back()) {
    report.counterexample = "chain does not close";
  } else {
    for (std::size_t k = 1; k < chain.elements.size(); ++k) {
      const int i = k % 2 == 1 ? 1 : 2;
      const TensorElement got = sigma(i, chain.elements[k - 1]);
      if (got != chain.elements[k]) {
        report.counterexample = "step " + std::to_string(k) + " (sigma_" + std::to_string(i) + "): expected " +
                                to_string(chain.elements[k]) + ", got " + to_string(got);
        break;
      }
    }
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

RelationReport check_highest_weight_chains() {
  Stopwatch clock;
  RelationReport report{"highest-weight-chains", 0, std::nullopt, 0.0};
  std::vector<HighestWeightChain> chains = row_box_column_chains();
  for (HighestWeightChain& c : row_row_column_chains(3, 2)) chains.push_back(std::move(c));
  for (const HighestWeightChain& c : chains) {
    const RelationReport r = check_chain(c);
    report.domain += r.domain;
    if (!r.passed()) {
      report.counterexample = c.name + ": " + *r.counterexample;
      break;
    }
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

// --- carrier composition --------------------------------------------------------

std::vector<int> carrier_word_x(int columns, int boxes) {
  std::vector<int> w;
  for (int k = 1; k <= columns; ++k)
    for (int i = boxes + k - 1; i >= k; --i) w.push_back(i);
  for (int i = columns + boxes; i >= 1; --i) w.push_back(i);
  return w;
}

std::vector<int> carrier_word_y(int columns, int boxes) {
  std::vector<int> w;
  for (int i = columns + boxes; i >= 1; --i) w.push_back(i);
  for (int k = 1; k <= columns; ++k)
    for (int i = boxes + k; i >= k + 1; --i) w.push_back(i);
  return w;
}

std::string render_sigma_word(std::span<const int> word, std::span<const int> group_sizes) {
  std::string s;
  std::size_t pos = 0;
  for (int g : group_sizes) {
    s += '(';
    for (int k = 0; k < g && pos < word.size(); ++k, ++pos) s += std::to_string(word[pos]);
    s += ')';
  }
  return s;
}

RelationReport check_carrier_composition(int columns, int boxes, int carrier_capacity, Alphabet alphabet,
                                         SamplingMode mode) {
  Stopwatch clock;
  if (columns < 1 || boxes < 1) throw ContractViolation("carrier composition needs N, L >= 1");
  std::vector<FactorShape> shapes{FactorShape::row(carrier_capacity)};
  shapes.insert(shapes.end(), columns, FactorShape::column());
  shapes.insert(shapes.end(), boxes, FactorShape::row(1));
  std::vector<FactorShape> target(boxes, FactorShape::row(1));
  target.insert(target.end(), columns, FactorShape::column());
  target.push_back(FactorShape::row(carrier_capacity));

  const std::vector<int> x = carrier_word_x(columns, boxes);
  const std::vector<int> y = carrier_word_y(columns, boxes);
  RelationReport report{"carrier-composition N=" + std::to_string(columns) + " L=" + std::to_string(boxes) +
                            " l=" + std::to_string(carrier_capacity) + " n=" + std::to_string(alphabet.size()),
                        0, std::nullopt, 0.0};
  for_each_sample(shapes, alphabet, mode, report, [&](const TensorElement& t) -> std::optional<std::string> {
    const TensorElement via_x = apply_sigma_word(x, t);
    const TensorElement via_y = apply_sigma_word(y, t);
    if (via_x.shapes() != target) return "x does not reach B_1^L * B_nat^N * B_l";
    if (via_x != via_y) return "x gives " + to_string(via_x) + ", y gives " + to_string(via_y);
    return std::nullopt;
  });
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

// --- decompositions -------------------------------------------------------------

std::vector<DecompositionFixture> decomposition_fixtures() {
  const auto row = FactorShape::row;
  const FactorShape col = FactorShape::column();
  return {
      {"B_2*B_1", {row(2), row(1)}, Alphabet(3), {{Shape{3}, 1}, {Shape{2, 1}, 1}}},
      {"B_3*B_1", {row(3), row(1)}, Alphabet(4), {{Shape{4}, 1}, {Shape{3, 1}, 1}}},
      {"B_nat*B_1", {col, row(1)}, Alphabet(4), {{Shape{2, 1}, 1}, {Shape{1, 1, 1}, 1}}},
      {"B_3*B_nat", {row(3), col}, Alphabet(4), {{Shape{4, 1}, 1}, {Shape{3, 1, 1}, 1}}},
      {"B_3*B_1*B_nat",
       {row(3), row(1), col},
       Alphabet(5),
       {{Shape{3, 1, 1, 1}, 1}, {Shape{3, 2, 1}, 1}, {Shape{4, 2}, 1}, {Shape{5, 1}, 1}, {Shape{4, 1, 1}, 2}}},
      {"B_3*B_2*B_nat", {row(3), row(2), col}, Alphabet(5), row_row_column_components(3, 2)},
      {"B_4*B_2*B_nat", {row(4), row(2), col}, Alphabet(5), row_row_column_components(4, 2)},
  };
}

RelationReport check_decomposition(const DecompositionFixture& fixture) {
  Stopwatch clock;
  RelationReport report{"decomposition " + fixture.name + " n=" + std::to_string(fixture.alphabet.size()), 0,
                        std::nullopt, 0.0};
  const std::vector<TensorElement> hw = enumerate_highest_weights(fixture.factors, fixture.alphabet);
  report.domain = hw.size();
  const auto groups = group_by_weight(hw);

  std::map<Weight, int> expected;
  for (const auto& [shape, m] : fixture.components) expected[Weight::of_shape(shape, fixture.alphabet)] += m;

  for (const auto& [w, m] : expected) {
    const auto it = groups.find(w);
    const int got = it == groups.end() ? 0 : static_cast<int>(it->second.size());
    if (got != m) {
      report.counterexample = "weight " + to_string(w) + ": expected multiplicity " + std::to_string(m) + ", found " +
                              std::to_string(got);
      break;
    }
  }
  if (report.passed())
    for (const auto& [w, elems] : groups)
      if (!expected.contains(w)) {
        report.counterexample = "unexpected highest weight " + to_string(w) + " at " + to_string(elems.front());
        break;
      }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

// --- unique isomorphism oracle ----------------------------------------------------

IsomorphismTable oracle_unique_isomorphism(FactorShape left, FactorShape right, Alphabet alphabet) {
  const std::vector<FactorShape> src_shapes{left, right};
  const std::vector<FactorShape> dst_shapes{right, left};

  std::map<Weight, TensorElement> dst_hw;
  for (const TensorElement& u : enumerate_highest_weights(dst_shapes, alphabet)) {
    auto [it, fresh] = dst_hw.emplace(weight_of(u), u);
    if (!fresh) throw AmbiguousOracle("two highest weight elements of weight " + to_string(it->first));
  }

  IsomorphismTable table;
  std::deque<TensorElement> queue;
  for (const TensorElement& u : enumerate_highest_weights(src_shapes, alphabet)) {
    const Weight w = weight_of(u);
    if (table.contains(u)) continue;
    const auto it = dst_hw.find(w);
    if (it == dst_hw.end()) throw InternalError("no highest weight partner of weight " + to_string(w));
    for (const auto& [v, image] : table)
      if (weight_of(v) == w && is_highest_weight(v))
        throw AmbiguousOracle("two highest weight elements of weight " + to_string(w));
    table.emplace(u, it->second);
    queue.push_back(u);
  }

  while (!queue.empty()) {
    const TensorElement b = queue.front();
    queue.pop_front();
    const TensorElement image = table.at(b);
    for (int i = 1; i < alphabet.size(); ++i) {
      auto fb = ftilde(i, b);
      if (!fb) continue;
      auto fimage = ftilde(i, image);
      if (!fimage) throw InternalError("f~ defined on " + to_string(b) + " but not on its image");
      auto [it, fresh] = table.emplace(*fb, *fimage);
      if (fresh) {
        queue.push_back(*fb);
      } else if (it->second != *fimage) {
        throw InternalError("inconsistent propagation at " + to_string(*fb));
      }
    }
  }

  if (table.size() != product_size(src_shapes, alphabet))
    throw InternalError("oracle did not reach every element of the product");
  return table;
}

RelationReport check_against_oracle(FactorShape left, FactorShape right, Alphabet alphabet) {
  Stopwatch clock;
  RelationReport report{"oracle " + to_string(left) + "*" + to_string(right) + " n=" + std::to_string(alphabet.size()),
                        0, std::nullopt, 0.0};
  try {
    const IsomorphismTable table = oracle_unique_isomorphism(left, right, alphabet);
    for (const auto& [t, expected] : table) {
      ++report.domain;
      const SwapResult s = swap_factors(t[0], t[1]);
      const TensorElement got = pair_of(s.left, s.right);
      if (got != expected) {
        report.counterexample = to_string(t) + " -> " + to_string(got) + " [" + std::string(to_string(s.tag)) +
                                "], oracle gives " + to_string(expected);
        break;
      }
    }
  } catch (const std::exception& e) {
    report.counterexample = e.what();
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

RelationReport check_swap_round_trip(FactorShape left, FactorShape right, Alphabet alphabet) {
  Stopwatch clock;
  RelationReport report{"round-trip " + to_string(left) + "*" + to_string(right) + " n=" +
                            std::to_string(alphabet.size()),
                        0, std::nullopt, 0.0};
  const std::vector<FactorShape> shapes{left, right};
  for_each_sample(shapes, alphabet, SamplingMode::all(), report,
                  [](const TensorElement& t) -> std::optional<std::string> {
                    const SwapResult s = swap_factors(t[0], t[1]);
                    const SwapResult back = swap_factors(s.left, s.right);
                    if (pair_of(back.left, back.right) != t)
                      return "returns " + to_string(pair_of(back.left, back.right)) + " via " +
                             to_string(pair_of(s.left, s.right));
                    return std::nullopt;
                  });
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

// --- path suites ------------------------------------------------------------------

namespace {

std::string capacity_label(CarrierCapacity l) { return l.is_infinite() ? "inf" : std::to_string(l.value()); }

template <class Check>
RelationReport run_path_suite(std::string relation, const PathSuite& suite, Check check) {
  Stopwatch clock;
  RelationReport report{std::move(relation), 0, std::nullopt, 0.0};
  Rng rng(suite.seed);
  const int lo_n = std::min(3, suite.max_n);
  for (std::size_t c = 0; c < suite.count && report.passed(); ++c) {
    const Alphabet alphabet(uniform(rng, lo_n, suite.max_n));
    try {
      if (suite.inhomogeneous) {
        const InhomPath p = random_inhom_path(rng, alphabet, suite.max_balls, suite.max_length, suite.max_capacity);
        for (CarrierCapacity l : suite.capacities) {
          ++report.domain;
          if (auto failure = check(p, l)) {
            report.counterexample = "l=" + capacity_label(l) + " n=" + std::to_string(alphabet.size()) + ": " + *failure;
            break;
          }
        }
      } else {
        const BasicPath p = random_basic_path(rng, alphabet, suite.max_balls, suite.max_length);
        for (CarrierCapacity l : suite.capacities) {
          ++report.domain;
          if (auto failure = check(p, l)) {
            report.counterexample = "l=" + capacity_label(l) + " n=" + std::to_string(alphabet.size()) + ": " + *failure;
            break;
          }
        }
      }
    } catch (const std::exception& e) {
      report.counterexample = e.what();
    }
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

std::string suite_label(std::string_view what, const PathSuite& suite) {
  return std::string(what) + (suite.inhomogeneous ? " inhomogeneous" : " basic") + " n<=" +
         std::to_string(suite.max_n) + " seed=" + std::to_string(suite.seed);
}

}  // namespace

RelationReport check_theorem(const PathSuite& suite) {
  return run_path_suite(suite_label("theorem", suite), suite, [](const auto& p, CarrierCapacity l) {
    return check_commutation(p, l).mismatch;
  });
}

RelationReport check_conservation(const PathSuite& suite) {
  return run_path_suite(suite_label("conservation", suite), suite,
                        [](const auto& p, CarrierCapacity l) -> std::optional<std::string> {
                          const ColourWord before = conserved_word(p);
                          const ColourWord after = conserved_word(T_ell(l, p));
                          if (before != after) return "word " + before.str() + " became " + after.str();
                          return std::nullopt;
                        });
}

}  // namespace bbs
