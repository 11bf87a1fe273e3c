#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wordmorph/fixedpoint.hpp"
#include "wordmorph/nonuniformize.hpp"

namespace wordmorph {

/// Parsed pieces of a spec file, before the prolongability check that a full
/// presentation performs.
struct SpecParts {
  Morphism morphism;
  Symbol start;
  Coding coding;
};

namespace detail {

inline std::vector<std::string> tokenize_line(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos)
    line = line.substr(0, hash);
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

[[noreturn]] inline void parse_fail(errc code, std::size_t line_no, const std::string& what) {
  fail(code, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace detail

/// Line-oriented grammar: `alphabet <sym>+`, `start <sym>`,
/// `rule <sym> -> <sym>*`, optional `code <sym> -> <sym>`; '#' starts a
/// comment. The coding defaults to the identity on unlisted symbols.
inline SpecParts parse_spec_parts(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::optional<Symbol> start;
  std::vector<std::pair<Symbol, Word>> rules;
  std::vector<bool> has_rule;
  std::vector<std::optional<Symbol>> code_images;

  auto require_alphabet = [&](std::size_t line_no) -> const Alphabet& {
    if (!alphabet)
      detail::parse_fail(errc::parse_error, line_no, "alphabet not yet declared");
    return *alphabet;
  };
  auto lookup = [&](const std::string& token, std::size_t line_no) -> Symbol {
    Symbol s = [&] {
      try {
        return Symbol(token);
      } catch (const error& e) {
        detail::parse_fail(errc::parse_error, line_no, e.what());
      }
    }();
    if (!require_alphabet(line_no).contains(s))
      detail::parse_fail(errc::unknown_symbol, line_no, "unknown symbol '" + token + "'");
    return s;
  };

  std::istringstream in{std::string(text)};
  std::string raw_line;
  std::size_t line_no = 0;
  while (std::getline(in, raw_line)) {
    ++line_no;
    std::vector<std::string> tokens = detail::tokenize_line(raw_line);
    if (tokens.empty()) continue;
    const std::string& directive = tokens.front();

    if (directive == "alphabet") {
      if (alphabet)
        detail::parse_fail(errc::parse_error, line_no, "duplicate alphabet declaration");
      if (tokens.size() < 2)
        detail::parse_fail(errc::parse_error, line_no, "alphabet needs at least one symbol");
      std::vector<Symbol> symbols;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        try {
          symbols.emplace_back(tokens[i]);
        } catch (const error& e) {
          detail::parse_fail(errc::parse_error, line_no, e.what());
        }
      }
      try {
        alphabet.emplace(std::move(symbols));
      } catch (const error& e) {
        detail::parse_fail(errc::parse_error, line_no, e.what());
      }
      has_rule.assign(alphabet->size(), false);
      code_images.assign(alphabet->size(), std::nullopt);
    } else if (directive == "start") {
      if (start) detail::parse_fail(errc::parse_error, line_no, "duplicate start declaration");
      if (tokens.size() != 2)
        detail::parse_fail(errc::parse_error, line_no, "start needs exactly one symbol");
      start = lookup(tokens[1], line_no);
    } else if (directive == "rule") {
      if (tokens.size() < 3 || tokens[2] != "->")
        detail::parse_fail(errc::parse_error, line_no, "expected: rule <sym> -> <sym>*");
      Symbol lhs = lookup(tokens[1], line_no);
      std::size_t idx = *alphabet->index_of(lhs);
      if (has_rule[idx])
        detail::parse_fail(errc::parse_error, line_no,
                           "duplicate rule for '" + lhs.name() + "'");
      Word image;
      for (std::size_t i = 3; i < tokens.size(); ++i)
        image.push_back(lookup(tokens[i], line_no));
      rules.emplace_back(lhs, std::move(image));
      has_rule[idx] = true;
    } else if (directive == "code") {
      if (tokens.size() != 4 || tokens[2] != "->")
        detail::parse_fail(errc::parse_error, line_no, "expected: code <sym> -> <sym>");
      Symbol lhs = lookup(tokens[1], line_no);
      std::size_t idx = *alphabet->index_of(lhs);
      if (code_images[idx])
        detail::parse_fail(errc::parse_error, line_no,
                           "duplicate code line for '" + lhs.name() + "'");
      code_images[idx] = lookup(tokens[3], line_no);
    } else {
      detail::parse_fail(errc::parse_error, line_no,
                         "unknown directive '" + directive + "'");
    }
  }

  if (!alphabet) fail(errc::parse_error, "missing alphabet declaration");
  if (!start) fail(errc::parse_error, "missing start declaration");
  for (std::size_t i = 0; i < alphabet->size(); ++i)
    if (!has_rule[i])
      fail(errc::missing_rule, "missing rule for '" + (*alphabet)[i].name() + "'");

  Morphism morphism(*alphabet, *alphabet, std::move(rules));

  std::vector<std::pair<Symbol, Word>> code_rules;
  for (std::size_t i = 0; i < alphabet->size(); ++i) {
    Symbol s = (*alphabet)[i];
    code_rules.emplace_back(s, Word::single(code_images[i].value_or(s)));
  }
  Coding coding(Morphism(*alphabet, *alphabet, std::move(code_rules)));

  return SpecParts{std::move(morphism), *start, std::move(coding)};
}

inline MorphicPresentation parse_spec(std::string_view text) {
  SpecParts parts = parse_spec_parts(text);
  return MorphicPresentation(std::move(parts.morphism), parts.start,
                             std::move(parts.coding));
}

inline std::string emit_spec(const MorphicPresentation& p) {
  std::string out;
  out += "alphabet";
  for (Symbol s : p.morphism().domain()) {
    out += ' ';
    out += s.name();
  }
  out += '\n';
  out += "start " + p.start().name() + "\n";
  for (Symbol s : p.morphism().domain()) {
    out += "rule " + s.name() + " ->";
    for (Symbol t : p.morphism().image(s)) {
      out += ' ';
      out += t.name();
    }
    out += '\n';
  }
  if (!p.coding().is_identity()) {
    for (Symbol s : p.morphism().domain())
      out += "code " + s.name() + " -> " + p.coding().letter_image(s).name() + "\n";
  }
  return out;
}

inline std::string emit_spec(const NonUniformizationResult& r) {
  return emit_spec(r.presentation());
}

}  // namespace wordmorph
