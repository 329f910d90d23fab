// bbs: evolve, separate and verify box-ball states from the command line.
//
//   bbs evolve --steps 3 --operator T state.txt
//   echo 55432.....542....2 | bbs separate --trace
//   bbs verify theorem --n 5 --count 1000 --seed 42
//
// Exit codes: 0 success, 1 a check failed, 2 bad input or flags.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "bbs/io.hpp"
#include "bbs/text.hpp"

namespace {

using namespace bbs;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

struct InputOptions {
  std::string file;
  std::string state;
  std::optional<int> n;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("input", in.file, "State file (JSON document or ASCII path); stdin when omitted");
  cmd->add_option("--state", in.state, "State given inline instead of a file");
  cmd->add_option("--n", in.n, "Alphabet size n")->check(CLI::Range(2, 1000));
}

StateDocument read_input(const InputOptions& in) {
  std::string text;
  if (!in.state.empty()) {
    text = in.state;
  } else if (!in.file.empty() && in.file != "-") {
    std::ifstream f(in.file);
    if (!f) throw ParseError("cannot open " + in.file);
    text.assign(std::istreambuf_iterator<char>(f), {});
  } else {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  }
  return parse_state_document(text, in.n);
}

std::string row_label(char tag, std::size_t k, std::size_t last) {
  std::string label = std::string(1, tag) + "=" + std::to_string(k);
  const std::size_t width = 2 + std::to_string(last).size() + 3;
  label.append(width - label.size(), ' ');
  return label;
}

int max_width(const std::vector<AnyPath>& states, int input_width) {
  int w = input_width;
  for (const AnyPath& p : states)
    if (const auto* b = std::get_if<BasicPath>(&p)) w = std::max(w, b->length());
  return w;
}

std::string describe_step(const TraceStep& s) {
  return "  site " + std::to_string(s.site) + ": " + to_string(s.carrier_before) + " * " + to_string(s.site_before) +
         " -> " + to_string(s.site_after) + " * " + to_string(s.carrier_after) + "  [" + std::string(to_string(s.tag)) +
         "]";
}

// --- evolve -------------------------------------------------------------------

struct EvolveOptions {
  InputOptions in;
  int steps = 1;
  std::string op = "T";
  bool json = false;
};

AnyPath evolve_once(const std::string& op, const AnyPath& p) {
  if (op == "T") {
    const auto* b = std::get_if<BasicPath>(&p);
    if (!b) throw ContractViolation("operator T is defined on basic paths; use Tl:<l> for inhomogeneous paths");
    return T_def(*b);
  }
  if (op == "Tnat") return std::visit([](const auto& q) -> AnyPath { return T_natural(q).path; }, p);
  if (op.rfind("Tl:", 0) == 0) {
    const std::string arg = op.substr(3);
    CarrierCapacity l = CarrierCapacity::infinite();
    if (arg != "inf") {
      int value = 0;
      try {
        std::size_t used = 0;
        value = std::stoi(arg, &used);
        if (used != arg.size()) throw std::invalid_argument(arg);
      } catch (const std::exception&) {
        throw ParseError("bad carrier capacity '" + arg + "' in --operator");
      }
      if (value < 1) throw ParseError("carrier capacity must be >= 1 in --operator");
      l = CarrierCapacity(value);
    }
    return std::visit([l](const auto& q) -> AnyPath { return T_ell(l, q); }, p);
  }
  throw ParseError("unknown operator '" + op + "' (expected T, Tl:<l>, Tl:inf or Tnat)");
}

int run_evolve(const EvolveOptions& opt) {
  const StateDocument doc = read_input(opt.in);
  std::vector<AnyPath> states{doc.state};
  for (int t = 0; t < opt.steps; ++t) states.push_back(evolve_once(opt.op, states.back()));
  if (opt.json) {
    for (std::size_t t = 0; t < states.size(); ++t) {
      Json j = to_json(StateDocument{doc.alphabet, states[t], doc.width});
      j["t"] = t;
      std::cout << j.dump() << '\n';
    }
    return kOk;
  }
  const int width = max_width(states, doc.width);
  for (std::size_t t = 0; t < states.size(); ++t)
    std::cout << row_label('t', t, states.size() - 1) << render_state(states[t], width) << '\n';
  return kOk;
}

// --- separate -----------------------------------------------------------------

struct SeparateOptions {
  InputOptions in;
  bool json = false;
  bool trace = false;
};

template <class Path>
int print_separation(const SeparationRecord<Path>& rec, const StateDocument& doc, const SeparateOptions& opt) {
  if (opt.json) {
    std::cout << to_json(rec).dump(2) << '\n';
    return kOk;
  }
  std::vector<AnyPath> states(rec.states.begin(), rec.states.end());
  const int width = max_width(states, doc.width);
  const std::size_t last = states.size() - 1;
  for (std::size_t s = 0; s < states.size(); ++s) {
    std::cout << row_label('s', s, last) << render_state(states[s], width);
    if (s < rec.removed.size()) std::cout << ' ' << rec.removed[s];
    std::cout << '\n';
    if (opt.trace && s < rec.traces.size())
      for (const TraceStep& step : rec.traces[s].steps) std::cout << describe_step(step) << '\n';
  }
  std::cout << "y = " << rec.word.str() << '\n';
  return kOk;
}

int run_separate(const SeparateOptions& opt) {
  const StateDocument doc = read_input(opt.in);
  return std::visit([&](const auto& p) { return print_separation(decode(p), doc, opt); }, doc.state);
}

// --- verify -------------------------------------------------------------------

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::optional<std::size_t> count;
  std::optional<int> n;
  std::optional<int> l;
  std::optional<int> l2;
  std::string shapes = "3,1,c";
  int columns = 3;
  int boxes = 3;
  bool inhom = false;
  bool json = false;
};

int report_all(const std::vector<RelationReport>& reports, bool json) {
  bool ok = true;
  for (const RelationReport& r : reports) {
    ok = ok && r.passed();
    if (json) {
      std::cout << to_json(r).dump() << '\n';
      continue;
    }
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.relation << "  (" << r.domain << " checked, " << r.elapsed_ms
              << " ms)\n";
    if (r.counterexample) std::cout << "  counterexample: " << *r.counterexample << '\n';
  }
  return ok ? kOk : kFailed;
}

SamplingMode sampling(const VerifyOptions& opt) {
  return opt.count ? SamplingMode::random(opt.seed, *opt.count) : SamplingMode::all();
}

PathSuite path_suite(const VerifyOptions& opt) {
  PathSuite s;
  s.seed = opt.seed;
  s.inhomogeneous = opt.inhom;
  if (opt.count) s.count = *opt.count;
  if (opt.n) s.max_n = *opt.n;
  if (opt.l) s.capacities = {CarrierCapacity(*opt.l)};
  return s;
}

int run_verify(const std::string& which, const VerifyOptions& opt) {
  std::vector<RelationReport> reports;
  if (which == "braid") {
    reports.push_back(check_symmetric_group(parse_shapes(opt.shapes), Alphabet(opt.n.value_or(3)), sampling(opt)));
  } else if (which == "chains") {
    if (opt.l && opt.l2) {
      for (const HighestWeightChain& c : row_row_column_chains(*opt.l, *opt.l2)) reports.push_back(check_chain(c));
    } else {
      for (const HighestWeightChain& c : row_box_column_chains()) reports.push_back(check_chain(c));
      for (const HighestWeightChain& c : row_row_column_chains(3, 2)) reports.push_back(check_chain(c));
    }
  } else if (which == "composition") {
    reports.push_back(check_carrier_composition(opt.columns, opt.boxes, opt.l.value_or(2), Alphabet(opt.n.value_or(4)),
                                                sampling(opt)));
  } else if (which == "decomposition") {
    for (const DecompositionFixture& f : decomposition_fixtures()) reports.push_back(check_decomposition(f));
  } else if (which == "theorem") {
    reports.push_back(check_theorem(path_suite(opt)));
  } else if (which == "conservation") {
    reports.push_back(check_conservation(path_suite(opt)));
  }
  return report_all(reports, opt.json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coloured box-ball system: evolution, colour separation and crystal checks"};
  app.require_subcommand(1);

  EvolveOptions evolve;
  CLI::App* evolve_cmd = app.add_subcommand("evolve", "Print the time evolution of a state");
  add_input_options(evolve_cmd, evolve.in);
  evolve_cmd->add_option("--steps", evolve.steps, "Number of time steps")->check(CLI::NonNegativeNumber);
  evolve_cmd->add_option("--operator", evolve.op, "T, Tl:<l>, Tl:inf or Tnat");
  evolve_cmd->add_flag("--json", evolve.json, "One JSON state document per line");

  SeparateOptions separate;
  CLI::App* separate_cmd = app.add_subcommand("separate", "Strip letters >= 3 with the decoding carrier");
  add_input_options(separate_cmd, separate.in);
  separate_cmd->add_flag("--json", separate.json, "Emit the separation record as JSON");
  separate_cmd->add_flag("--trace", separate.trace, "Show every carrier step");

  VerifyOptions verify;
  std::string which;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", which, "braid, chains, composition, decomposition, theorem or conservation")
      ->required()
      ->check(CLI::IsMember({"braid", "chains", "composition", "decomposition", "theorem", "conservation"}));
  verify_cmd->add_option("--seed", verify.seed, "Random seed");
  verify_cmd->add_option("--count", verify.count, "Random samples (exhaustive when omitted, where supported)");
  verify_cmd->add_option("--n", verify.n, "Alphabet size (largest n for path suites)")->check(CLI::Range(2, 1000));
  verify_cmd->add_option("--l", verify.l, "Carrier capacity, or l1 for chains")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--l2", verify.l2, "l2 for chains")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--shapes", verify.shapes, "Factor shapes for braid, e.g. 3,1,c");
  verify_cmd->add_option("--columns", verify.columns, "Column count for composition")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--boxes", verify.boxes, "Box count for composition")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--inhom", verify.inhom, "Use inhomogeneous paths in path suites");
  verify_cmd->add_flag("--json", verify.json, "Emit JSON lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*evolve_cmd) return run_evolve(evolve);
    if (*separate_cmd) return run_separate(separate);
    return run_verify(which, verify);
  } catch (const bbs::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const bbs::ContractViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const bbs::DomainTooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFailed;
  }
}
