#include "bbs/text.hpp"

#include <cctype>
#include <charconv>

namespace bbs {

namespace {

std::string letter_list(const std::vector<Letter>& letters, bool wide) {
  std::string s;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (wide && k > 0) s += ',';
    s += std::to_string(letters[k]);
  }
  return s;
}

int parse_int(std::string_view text, std::string_view context) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ParseError("bad number '" + std::string(text) + "' in " + std::string(context));
  return v;
}

std::vector<Letter> parse_letters(std::string_view body, std::string_view context) {
  std::vector<Letter> out;
  if (body.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = body.find(',', start);
      out.push_back(parse_int(body.substr(start, comma - start), context));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return out;
  }
  for (std::size_t k = 0; k < body.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(body[k])))
      throw ParseError("unexpected character '" + std::string(1, body[k]) + "' at offset " + std::to_string(k) +
                       " in " + std::string(context));
    out.push_back(body[k] - '0');
  }
  return out;
}

}  // namespace

std::string to_string(const RowTableau& b) {
  return "<" + letter_list(b.entries(), b.alphabet().size() > 9) + ">";
}

std::string to_string(const ColumnPair& b) {
  return "[" + std::to_string(b.top()) + "/" + std::to_string(b.bottom()) + "]";
}

std::string to_string(const Factor& b) {
  return std::visit([](const auto& x) { return to_string(x); }, b);
}

std::string to_string(const TensorElement& t) {
  std::string s;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k > 0) s += '*';
    s += to_string(t[k]);
  }
  return s;
}

std::string to_string(const Weight& w) { return "(" + letter_list(w.counts, true) + ")"; }

std::string to_string(FactorShape s) { return s.is_row() ? std::to_string(s.length) : "c"; }

std::string to_string(const Shape& s) { return "(" + letter_list(s.parts(), true) + ")"; }

Factor parse_factor(std::string_view text, Alphabet alphabet) {
  const std::string context = "factor '" + std::string(text) + "'";
  if (text.size() >= 3 && text.front() == '<' && text.back() == '>') {
    try {
      return RowTableau(alphabet, parse_letters(text.substr(1, text.size() - 2), context));
    } catch (const ContractViolation& e) {
      throw ParseError(context + ": " + e.what());
    }
  }
  if (text.size() >= 5 && text.front() == '[' && text.back() == ']') {
    const std::string_view body = text.substr(1, text.size() - 2);
    const std::size_t slash = body.find('/');
    if (slash == std::string_view::npos) throw ParseError(context + ": column needs 'top/bottom'");
    try {
      return ColumnPair(alphabet, parse_int(body.substr(0, slash), context), parse_int(body.substr(slash + 1), context));
    } catch (const ContractViolation& e) {
      throw ParseError(context + ": " + e.what());
    }
  }
  throw ParseError(context + ": expected <row> or [top/bottom]");
}

TensorElement parse_tensor(std::string_view text, Alphabet alphabet) {
  std::vector<Factor> factors;
  std::size_t start = 0;
  while (true) {
    const std::size_t star = text.find('*', start);
    factors.push_back(parse_factor(text.substr(start, star - start), alphabet));
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return TensorElement(std::move(factors));
}

std::vector<FactorShape> parse_shapes(std::string_view text) {
  std::vector<FactorShape> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma - start);
    if (item == "c") {
      out.push_back(FactorShape::column());
    } else {
      const int l = parse_int(item, "shape list");
      if (l < 1) throw ParseError("row length must be >= 1 in shape list");
      out.push_back(FactorShape::row(l));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_ascii(const BasicPath& p, int width) {
  if (p.alphabet().size() > 9) throw ContractViolation("ASCII paths need n <= 9");
  std::string s;
  for (Letter a : p.sites()) s += a == 1 ? '.' : static_cast<char>('0' + a);
  if (static_cast<int>(s.size()) < width) s.append(width - s.size(), '.');
  return s;
}

BasicPath parse_ascii(std::string_view text, Alphabet alphabet) {
  if (alphabet.size() > 9) throw ParseError("ASCII paths need n <= 9, got n = " + std::to_string(alphabet.size()));
  std::vector<Letter> sites;
  sites.reserve(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char c = text[k];
    Letter a = 0;
    if (c == '.') {
      a = 1;
    } else if (c >= '1' && c <= '9') {
      a = c - '0';
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "' at site " + std::to_string(k + 1));
    }
    if (!alphabet.contains(a))
      throw ParseError("letter " + std::to_string(a) + " at site " + std::to_string(k + 1) + " exceeds n = " +
                       std::to_string(alphabet.size()));
    sites.push_back(a);
  }
  return BasicPath(alphabet, std::move(sites));
}

std::string to_string(const InhomPath& p) {
  std::string s;
  for (int k = 0; k < p.length(); ++k) {
    if (k > 0) s += '|';
    s += to_string(p.sites()[k]);
  }
  return s;
}

}  // namespace bbs
