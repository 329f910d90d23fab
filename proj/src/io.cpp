#include "bbs/io.hpp"

#include <algorithm>

#include "bbs/text.hpp"

namespace bbs {

namespace {

std::string_view trim(std::string_view s) {
  const auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!s.empty() && blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && blank(s.back())) s.remove_suffix(1);
  return s;
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("state document: missing \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ParseError(std::string("state document: \"") + key + "\" has the wrong type");
  }
}

Alphabet alphabet_field(const Json& j) {
  const int n = field<int>(j, "n");
  if (n < 2) throw ParseError("state document: n must be >= 2, got " + std::to_string(n));
  return Alphabet(n);
}

RowTableau site_from_json(const Json& site, Alphabet alphabet, std::size_t index) {
  const std::string where = "site " + std::to_string(index + 1);
  if (!site.is_object()) throw ParseError(where + ": expected {capacity, counts}");
  const int capacity = field<int>(site, "capacity");
  const auto counts = field<std::vector<int>>(site, "counts");
  if (static_cast<int>(counts.size()) != alphabet.size())
    throw ParseError(where + ": counts has " + std::to_string(counts.size()) + " entries, n = " +
                     std::to_string(alphabet.size()));
  if (std::any_of(counts.begin(), counts.end(), [](int c) { return c < 0; }))
    throw ParseError(where + ": negative count");
  int total = 0;
  for (int c : counts) total += c;
  if (capacity < 1 || total != capacity)
    throw ParseError(where + ": counts sum to " + std::to_string(total) + " but capacity is " +
                     std::to_string(capacity));
  return counts_to_row(CountVector(counts));
}

Json site_to_json(const RowTableau& b) {
  return {{"capacity", b.capacity()}, {"counts", row_to_counts(b).counts()}};
}

int largest_letter(std::string_view text) {
  int a = 2;
  for (char c : text)
    if (c >= '2' && c <= '9') a = std::max(a, c - '0');
  return a;
}

template <class Path>
Json record_to_json(const SeparationRecord<Path>& rec) {
  Json steps = Json::array();
  for (std::size_t s = 0; s < rec.states.size(); ++s) {
    Json row{{"s", s}, {"state", path_to_json(rec.states[s])}};
    if (s < rec.removed.size()) row["removed"] = rec.removed[s];
    steps.push_back(std::move(row));
  }
  return {{"monochrome", path_to_json(rec.monochrome)}, {"word", rec.word.str()}, {"steps", std::move(steps)}};
}

}  // namespace

StateDocument state_document_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("state document: expected a JSON object");
  const Alphabet alphabet = alphabet_field(j);
  const std::string mode = field<std::string>(j, "mode");
  if (mode == "basic") {
    if (j.contains("state") && j.at("state").is_array()) {
      const auto letters = field<std::vector<int>>(j, "state");
      for (std::size_t k = 0; k < letters.size(); ++k)
        if (!alphabet.contains(letters[k]))
          throw ParseError("letter " + std::to_string(letters[k]) + " at site " + std::to_string(k + 1) +
                           " outside 1.." + std::to_string(alphabet.size()));
      return {alphabet, BasicPath(alphabet, letters), static_cast<int>(letters.size())};
    }
    const std::string state = field<std::string>(j, "state");
    return {alphabet, parse_ascii(state, alphabet), static_cast<int>(state.size())};
  }
  if (mode == "inhom" || mode == "inhomogeneous") {
    const Json& sites = j.contains("sites") ? j.at("sites") : throw ParseError("state document: missing \"sites\"");
    if (!sites.is_array()) throw ParseError("state document: \"sites\" must be an array");
    std::vector<RowTableau> rows;
    for (std::size_t k = 0; k < sites.size(); ++k) rows.push_back(site_from_json(sites[k], alphabet, k));
    const int tail = j.contains("tail_capacity") ? field<int>(j, "tail_capacity") : 1;
    if (tail < 1) throw ParseError("state document: tail_capacity must be >= 1");
    const int width = static_cast<int>(rows.size());
    return {alphabet, InhomPath(alphabet, std::move(rows), tail), width};
  }
  throw ParseError("state document: unknown mode \"" + mode + "\"");
}

StateDocument parse_state_document(std::string_view text, std::optional<int> n) {
  const std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') {
    Json j;
    try {
      j = Json::parse(body);
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("state document: ") + e.what());
    }
    StateDocument doc = state_document_from_json(j);
    if (n && *n != doc.alphabet.size())
      throw ParseError("--n " + std::to_string(*n) + " disagrees with document n = " +
                       std::to_string(doc.alphabet.size()));
    return doc;
  }
  const Alphabet alphabet(n.value_or(largest_letter(body)));
  return {alphabet, parse_ascii(body, alphabet), static_cast<int>(body.size())};
}

Json to_json(const StateDocument& doc) {
  Json j{{"n", doc.alphabet.size()}};
  if (const auto* p = std::get_if<BasicPath>(&doc.state)) {
    j["mode"] = "basic";
    j["state"] = path_to_json(*p);
    if (j["state"].is_string() && static_cast<int>(j["state"].get<std::string>().size()) < doc.width)
      j["state"] = to_ascii(*p, doc.width);
  } else {
    const auto& q = std::get<InhomPath>(doc.state);
    j["mode"] = "inhom";
    j["sites"] = path_to_json(q);
    j["tail_capacity"] = q.tail_capacity();
  }
  return j;
}

Json path_to_json(const BasicPath& p) {
  if (p.alphabet().size() <= 9) return to_ascii(p);
  return p.sites();
}

Json path_to_json(const InhomPath& p) {
  Json sites = Json::array();
  for (const RowTableau& b : p.sites()) sites.push_back(site_to_json(b));
  return sites;
}

Json to_json(const SeparationRecord<BasicPath>& rec) { return record_to_json(rec); }
Json to_json(const SeparationRecord<InhomPath>& rec) { return record_to_json(rec); }

Json to_json(const RelationReport& report) {
  Json j{{"relation", report.relation},
         {"domain", report.domain},
         {"result", report.passed() ? "pass" : "fail"},
         {"counterexample", nullptr},
         {"elapsed_ms", report.elapsed_ms}};
  if (report.counterexample) j["counterexample"] = *report.counterexample;
  return j;
}

std::string render_state(const AnyPath& p, int width) {
  if (const auto* b = std::get_if<BasicPath>(&p)) {
    if (b->alphabet().size() <= 9) return to_ascii(*b, width);
    std::string s;
    for (std::size_t k = 0; k < b->sites().size(); ++k) s += (k ? "," : "") + std::to_string(b->sites()[k]);
    return s;
  }
  return to_string(std::get<InhomPath>(p));
}

}  // namespace bbs
