#pragma once

#include <cctype>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wordmorph/error.hpp"

namespace wordmorph {

namespace detail {

struct SymbolTable {
  std::mutex mutex;
  std::deque<std::string> names;  // deque keeps references stable
  std::unordered_map<std::string_view, std::uint32_t> ids;
};

inline SymbolTable& symbol_table() {
  static SymbolTable table;
  return table;
}

}  // namespace detail

/// An interned letter. Equality is name equality; copies are cheap, so
/// words of a hundred thousand letters stay lightweight.
class Symbol {
public:
  explicit Symbol(std::string_view name) : id_(intern(name)) {}

  const std::string& name() const {
    auto& table = detail::symbol_table();
    std::lock_guard lock(table.mutex);
    return table.names[id_];
  }

  std::uint32_t id() const noexcept { return id_; }

  friend bool operator==(Symbol, Symbol) = default;

private:
  std::uint32_t id_;

  static std::uint32_t intern(std::string_view name) {
    if (name.empty()) fail(errc::invalid_symbol, "symbol name must be non-empty");
    if (name == "->") fail(errc::invalid_symbol, "'->' is a reserved token");
    for (char ch : name) {
      if (std::isspace(static_cast<unsigned char>(ch)))
        fail(errc::invalid_symbol, "symbol name contains whitespace: '" + std::string(name) + "'");
      if (ch == '#')
        fail(errc::invalid_symbol, "symbol name contains reserved '#': '" + std::string(name) + "'");
    }
    auto& table = detail::symbol_table();
    std::lock_guard lock(table.mutex);
    if (auto it = table.ids.find(name); it != table.ids.end()) return it->second;
    auto id = static_cast<std::uint32_t>(table.names.size());
    table.names.emplace_back(name);
    table.ids.emplace(table.names.back(), id);
    return id;
  }
};

struct SymbolHash {
  std::size_t operator()(Symbol s) const noexcept { return s.id(); }
};

/// A finite, possibly empty, sequence of symbols.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Symbol> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Symbol> letters) : letters_(letters) {}

  static Word single(Symbol s) { return Word({s}); }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Symbol operator[](std::size_t i) const { return letters_[i]; }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  void push_back(Symbol s) { letters_.push_back(s); }
  void append(const Word& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  }
  void reserve(std::size_t n) { letters_.reserve(n); }

  /// Letters in [first, last).
  Word subword(std::size_t first, std::size_t last) const {
    if (first > last || last > letters_.size())
      fail(errc::index_out_of_range, "subword range out of bounds");
    return Word(std::vector<Symbol>(letters_.begin() + static_cast<std::ptrdiff_t>(first),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(last)));
  }

  friend bool operator==(const Word&, const Word&) = default;

private:
  std::vector<Symbol> letters_;
};

inline Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.append(b);
  return out;
}

/// True iff w = p y for some word y.
inline bool is_prefix(const Word& p, const Word& w) {
  if (p.size() > w.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!(p[i] == w[i])) return false;
  return true;
}

/// Ascending 0-based indices of `target` in `w`.
inline std::vector<std::size_t> occurrences(const Word& w, Symbol target) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] == target) out.push_back(i);
  return out;
}

/// For each consecutive pair of zeros, the number of one-letters strictly
/// between them. Rejects any letter other than `zero` and `one`.
inline std::vector<std::size_t> runs_between_zeros(const Word& w, Symbol zero, Symbol one) {
  for (Symbol s : w)
    if (!(s == zero) && !(s == one))
      fail(errc::alien_symbol, "runs_between_zeros: unexpected letter '" + s.name() + "'");
  std::vector<std::size_t> out;
  std::optional<std::size_t> previous_zero;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == zero) {
      if (previous_zero) out.push_back(i - *previous_zero - 1);
      previous_zero = i;
    }
  }
  return out;
}

/// Symbol names joined by single spaces.
inline std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += w[i].name();
  }
  return out;
}

/// An ordered finite set of distinct symbols; the order is the canonical
/// iteration order everywhere in the library.
class Alphabet {
public:
  explicit Alphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) fail(errc::invalid_alphabet, "alphabet must be non-empty");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      auto [it, inserted] = index_.emplace(symbols_[i].id(), i);
      if (!inserted)
        fail(errc::invalid_alphabet, "duplicate symbol '" + symbols_[i].name() + "' in alphabet");
    }
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  bool contains(Symbol s) const { return index_.contains(s.id()); }

  std::optional<std::size_t> index_of(Symbol s) const {
    if (auto it = index_.find(s.id()); it != index_.end()) return it->second;
    return std::nullopt;
  }

  bool subset_of(const Alphabet& other) const {
    for (Symbol s : symbols_)
      if (!other.contains(s)) return false;
    return true;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_;
  }

private:
  std::vector<Symbol> symbols_;
  std::unordered_map<std::uint32_t, std::size_t> index_;
};

/// A name not colliding with anything in `taken`; tries `base`, then
/// base1, base2, ...
inline Symbol fresh_symbol(const std::string& base, const Alphabet& taken) {
  std::string candidate = base;
  for (int n = 1; taken.contains(Symbol(candidate)); ++n)
    candidate = base + std::to_string(n);
  return Symbol(candidate);
}

}  // namespace wordmorph
