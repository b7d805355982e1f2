#include "monid/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

namespace monid {

namespace {

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n')
          advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c)
      return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c))
      fail(std::string("expected '") + c + "'" + found());
  }

  std::optional<std::string> identifier() {
    skip_space();
    if (pos_ >= text_.size())
      return std::nullopt;
    const char c = text_[pos_];
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_')
      return std::nullopt;
    std::string out;
    while (pos_ < text_.size()) {
      const char d = text_[pos_];
      if (!std::isalnum(static_cast<unsigned char>(d)) && d != '_')
        break;
      out.push_back(d);
      advance();
    }
    return out;
  }

  /// Unsigned decimal integer; rejects a sign with a specific message.
  std::uint64_t integer(const char* what) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '-')
      fail(std::string("negative ") + what);
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail(std::string("expected ") + what + found());
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
        fail(std::string(what) + " too large");
      value = value * 10 + digit;
      advance();
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string found() const {
    if (pos_ >= text_.size())
      return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

Exponent parse_product(Lexer& lex, const std::map<std::string, Var>& vars, std::size_t n) {
  Exponent m(n);
  do {
    const auto line = lex.line(), column = lex.column();
    if (lex.peek() == '1') {
      if (lex.integer("factor") != 1)
        throw ParseError("numeric factor other than 1", line, column);
      continue;
    }
    auto name = lex.identifier();
    if (!name)
      lex.fail("expected a variable name");
    const auto it = vars.find(*name);
    if (it == vars.end())
      throw ParseError("unknown variable '" + *name + "'", line, column);
    std::uint64_t k = 1;
    if (lex.accept('^')) {
      k = lex.integer("exponent");
      if (k == 0)
        lex.fail("exponent must be positive");
    }
    const std::uint64_t total = m[it->second] + k;
    if (total > std::numeric_limits<Coord>::max())
      lex.fail("exponent too large");
    m[it->second] = static_cast<Coord>(total);
  } while (lex.accept('*'));
  return m;
}

} // namespace

MonomialIdeal parse_ideal(std::string_view text) {
  Lexer lex(text);
  {
    const auto line = lex.line(), column = lex.column();
    auto kw = lex.identifier();
    if (kw != "ring")
      throw ParseError("expected 'ring <n>;'", line, column);
  }
  const auto n64 = lex.integer("number of variables");
  if (n64 == 0)
    lex.fail("a ring needs at least one variable");
  if (n64 > 4096)
    lex.fail("too many variables");
  const auto n = static_cast<std::size_t>(n64);
  lex.expect(';');

  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back("x" + std::to_string(i + 1));

  {
    // "vars" is a keyword only directly after the ring statement.
    Lexer probe = lex;
    if (probe.identifier() == "vars") {
      lex = probe;
      names.clear();
      do {
        const auto line = lex.line(), column = lex.column();
        auto name = lex.identifier();
        if (!name)
          lex.fail("expected a variable name");
        if (std::find(names.begin(), names.end(), *name) != names.end())
          throw ParseError("duplicate variable name '" + *name + "'", line, column);
        names.push_back(*name);
      } while (lex.accept(','));
      if (names.size() != n)
        lex.fail("vars lists " + std::to_string(names.size()) + " names, ring has " +
                 std::to_string(n));
      lex.expect(';');
    }
  }

  std::map<std::string, Var> vars;
  for (Var v = 0; v < n; ++v)
    vars.emplace(names[v], v);

  std::vector<Exponent> gens;
  while (!lex.at_end()) {
    gens.push_back(parse_product(lex, vars, n));
    if (!lex.at_end())
      lex.expect(';');
  }

  std::vector<Var> order(n);
  for (Var v = 0; v < n; ++v)
    order[v] = v;
  return MonomialIdeal(PolyRing(std::move(names), std::move(order)), std::move(gens));
}

MonomialIdeal read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ideal(buf.str());
}

std::string format_monomial(const PolyRing& ring, const Exponent& m) {
  std::string out;
  for (Var v = 0; v < m.size(); ++v) {
    if (m[v] == 0)
      continue;
    if (!out.empty())
      out += '*';
    out += ring.name(v);
    if (m[v] > 1)
      out += '^' + std::to_string(m[v]);
  }
  return out.empty() ? "1" : out;
}

std::string format_ideal(const MonomialIdeal& ideal) {
  const auto& ring = ideal.ring();
  std::string out = "ring " + std::to_string(ring.size()) + ";\n";
  if (ring.names() != PolyRing(ring.size()).names()) {
    out += "vars ";
    for (Var v = 0; v < ring.size(); ++v)
      out += (v ? "," : "") + ring.name(v);
    out += ";\n";
  }
  for (const auto& g : ideal.gens())
    out += format_monomial(ring, g) + ";\n";
  return out;
}

nlohmann::ordered_json exponent_to_json(const Exponent& e) {
  auto arr = nlohmann::ordered_json::array();
  for (auto c : e.coords())
    arr.push_back(c);
  return arr;
}

nlohmann::ordered_json ideal_to_json(const MonomialIdeal& ideal) {
  nlohmann::ordered_json j;
  j["n"] = ideal.num_vars();
  auto gens = nlohmann::ordered_json::array();
  for (const auto& g : ideal.gens()) // already lex sorted
    gens.push_back(exponent_to_json(g));
  j["gens"] = std::move(gens);
  return j;
}

MonomialIdeal ideal_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    if (n == 0)
      throw DomainError("a ring needs at least one variable");
    std::vector<Exponent> gens;
    for (const auto& g : j.at("gens")) {
      for (const auto& c : g)
        if (!c.is_number_unsigned())
          throw DomainError("exponents must be non-negative integers");
      auto coords = g.get<std::vector<Coord>>();
      if (coords.size() != n)
        throw DomainError("generator length does not match n");
      gens.emplace_back(std::move(coords));
    }
    return MonomialIdeal(PolyRing(n), std::move(gens));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed ideal JSON: ") + e.what());
  }
}

} // namespace monid
