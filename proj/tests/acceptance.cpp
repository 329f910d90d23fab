// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bbs/separation.hpp"
#include "bbs/text.hpp"
#include "bbs/verify.hpp"
#include "published_examples.hpp"

using namespace bbs;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(std::string why) {
    if (ok) detail = std::move(why);
    ok = false;
  }
  void require(const RelationReport& r) {
    if (!r.passed()) fail(r.relation + ": " + *r.counterexample);
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_ms;  // 0 = no runtime bound
  std::function<void(Outcome&)> body;
};

const Alphabet n5(5);

void evolution_matches(const std::array<std::string_view, 4>& rows, Outcome& out) {
  BasicPath p = parse_ascii(rows[0], n5);
  for (int t = 1; t <= 3; ++t) {
    p = T_def(p);
    const std::string got = to_ascii(p, 33);
    if (got != rows[t]) out.fail("t=" + std::to_string(t) + ": " + got);
  }
}

void separation_matches(int t, Outcome& out) {
  const auto rec = decode(parse_ascii(published::coloured[t], n5));
  const std::string tag = "t=" + std::to_string(t) + " ";
  if (rec.steps() != 8) return out.fail(tag + "took " + std::to_string(rec.steps()) + " sweeps");
  for (int s = 0; s <= 8; ++s)
    if (to_ascii(rec.states[s], 33) != published::separations[t].rows[s])
      out.fail(tag + "s=" + std::to_string(s) + ": " + to_ascii(rec.states[s], 33));
  for (int s = 0; s < 8; ++s)
    if (rec.removed[s] != published::removed[s]) out.fail(tag + "removal at s=" + std::to_string(s));
  if (rec.word.str() != published::word) out.fail(tag + "word " + rec.word.str());
  if (to_ascii(rec.monochrome, 33) != published::monochrome[t]) out.fail(tag + "monochrome part differs");
}

std::vector<FactorShape> shapes_up_to(int max_row) {
  std::vector<FactorShape> out{FactorShape::column()};
  for (int l = 1; l <= max_row; ++l) out.push_back(FactorShape::row(l));
  return out;
}

std::vector<Criterion> criteria() {
  return {
      {1, "monochrome evolution reproduces t=1,2,3 exactly", 1.0,
       [](Outcome& out) { evolution_matches(published::monochrome, out); }},
      {2, "coloured evolution reproduces t=1,2,3 exactly", 1.0,
       [](Outcome& out) { evolution_matches(published::coloured, out); }},
      {3, "decoding table of coloured t=0: nine rows, removals, word 55432542", 1.0,
       [](Outcome& out) { separation_matches(0, out); }},
      {4, "decoding tables of coloured t=1,2,3 and T(p) = T(p~) + y", 0.0,
       [](Outcome& out) {
         for (int t = 1; t <= 3; ++t) separation_matches(t, out);
       }},
      {5, "commutation suite, 1000 basic paths, l in {1,2,3,inf}", 30'000.0,
       [](Outcome& out) {
         PathSuite s;  // n <= 5, <= 25 balls, length <= 60, seed 42
         out.require(check_theorem(s));
       }},
      {6, "commutation suite, 300 inhomogeneous paths, capacities 1..4", 60'000.0,
       [](Outcome& out) {
         PathSuite s;
         s.count = 300;
         s.inhomogeneous = true;
         s.max_capacity = 4;
         out.require(check_theorem(s));
       }},
      {7, "symmetric group relations (two exhaustive products, 1000 samples)", 60'000.0,
       [](Outcome& out) {
         out.require(check_symmetric_group(parse_shapes("3,1,c"), Alphabet(3), SamplingMode::all()));
         out.require(check_symmetric_group(parse_shapes("2,3,c"), Alphabet(3), SamplingMode::all()));
         out.require(check_symmetric_group(parse_shapes("2,2,2"), Alphabet(4), SamplingMode::random(42, 1000)));
       }},
      {8, "highest weight chains reproduce every intermediate", 0.0,
       [](Outcome& out) {
         for (const auto& c : row_box_column_chains()) out.require(check_chain(c));
         for (const auto& c : row_row_column_chains(3, 2)) out.require(check_chain(c));
       }},
      {9, "closed-form swaps equal the unique isomorphism, n <= 4, capacities <= 4", 120'000.0,
       [](Outcome& out) {
         for (int n = 2; n <= 4; ++n) {
           const Alphabet a(n);
           for (FactorShape l : shapes_up_to(4))
             for (FactorShape r : shapes_up_to(4)) {
               out.require(check_against_oracle(l, r, a));
               if (!l.is_row() || !r.is_row()) continue;
               for (const auto& [src, dst] : oracle_unique_isomorphism(l, r, a)) {
                 const auto rr = combinatorial_R(std::get<RowTableau>(src[0]), std::get<RowTableau>(src[1]));
                 if (TensorElement({rr.left, rr.right}) != dst) out.fail("R differs at " + to_string(src));
                 if (r.length == 1) {
                   const auto io = iota(std::get<RowTableau>(src[0]), std::get<RowTableau>(src[1]));
                   if (io.left != rr.left || io.right != rr.right) out.fail("R and iota differ at " + to_string(src));
                 }
               }
             }
         }
       }},
      {10, "T equals T_l for l = ball count, and T_l is stable above it", 0.0,
       [](Outcome& out) {
         Rng rng(42);
         for (int k = 0; k < 1000; ++k) {
           const BasicPath p = random_basic_path(rng, Alphabet(3 + k % 3), 25, 60);
           const int m = std::max(ball_count(p), 1);
           const BasicPath expected = T_def(p);
           for (int l = m; l <= m + 3; ++l)
             if (T_ell(CarrierCapacity(l), p) != expected) out.fail("l=" + std::to_string(l) + " at " + to_ascii(p));
         }
       }},
      {11, "encode(decode(p)) = p on 500 paths; swap round trips exhaustive for n <= 4", 0.0,
       [](Outcome& out) {
         Rng rng(42);
         for (int k = 0; k < 500; ++k) {
           const BasicPath p = random_basic_path(rng, Alphabet(3 + k % 3), 25, 60);
           const auto rec = decode(p);
           if (encode(rec.monochrome, rec.word) != p) out.fail("basic " + to_ascii(p));
           const InhomPath q = random_inhom_path(rng, Alphabet(3 + k % 3), 15, 20, 4);
           const auto qrec = decode(q);
           if (encode(qrec.monochrome, qrec.word) != q) out.fail("inhomogeneous " + to_string(q));
         }
         for (int n = 2; n <= 4; ++n)
           for (FactorShape l : shapes_up_to(4))
             for (FactorShape r : shapes_up_to(4)) out.require(check_swap_round_trip(l, r, Alphabet(n)));
       }},
      {12, "decomposition fixtures match the highest weight census", 0.0,
       [](Outcome& out) {
         for (const auto& f : decomposition_fixtures()) out.require(check_decomposition(f));
       }},
  };
}

}  // namespace

int main() {
  int failures = 0;
  for (const Criterion& c : criteria()) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && c.limit_ms > 0 && ms > c.limit_ms) out.fail("runtime over limit");
    failures += !out.ok;

    std::printf("AC-%02d %s  %s  (%.3f ms", c.id, out.ok ? "PASS" : "FAIL", c.title, ms);
    if (c.limit_ms > 0) std::printf(" / limit %.0f ms", c.limit_ms);
    std::printf(")\n");
    if (!out.ok) std::printf("       %s\n", out.detail.c_str());
  }
  std::printf("%d/12 criteria passed\n", 12 - failures);
  return failures == 0 ? 0 : 1;
}
