#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "skewtor/symbols.hpp"

namespace skewtor {

// A monomial in the free algebra: a finite sequence of generator symbols.
// The empty word is the unit e.
struct Word {
  std::vector<GeneratorSymbol> symbols;

  Word() = default;
  Word(std::initializer_list<GeneratorSymbol> list) : symbols(list) {}
  explicit Word(std::vector<GeneratorSymbol> syms) : symbols(std::move(syms)) {}

  static Word unit() { return {}; }

  std::size_t degree() const { return symbols.size(); }
  bool empty() const { return symbols.empty(); }

  friend bool operator==(const Word&, const Word&) = default;

  // Canonical storage order: degree first, then lexicographic by the natural
  // symbol order (family, base_index, starred).
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.symbols.size() <=> b.symbols.size(); c != 0) return c;
    for (std::size_t k = 0; k < a.symbols.size(); ++k)
      if (auto c = a.symbols[k] <=> b.symbols[k]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  friend Word operator*(const Word& a, const Word& b) {
    Word out = a;
    out.symbols.insert(out.symbols.end(), b.symbols.begin(), b.symbols.end());
    return out;
  }

  Word subword(std::size_t pos, std::size_t len) const {
    return Word(std::vector<GeneratorSymbol>(symbols.begin() + pos, symbols.begin() + pos + len));
  }

  bool matches_at(const Word& pattern, std::size_t pos) const {
    if (pos + pattern.degree() > degree()) return false;
    return std::equal(pattern.symbols.begin(), pattern.symbols.end(), symbols.begin() + pos);
  }

  std::optional<std::size_t> find(const Word& pattern, std::size_t from = 0) const {
    if (pattern.degree() > degree()) return std::nullopt;
    for (std::size_t pos = from; pos + pattern.degree() <= degree(); ++pos)
      if (matches_at(pattern, pos)) return pos;
    return std::nullopt;
  }

  // Word part of the star involution: reverse and star every symbol.
  Word reversed_starred() const {
    Word out;
    out.symbols.reserve(symbols.size());
    for (auto it = symbols.rbegin(); it != symbols.rend(); ++it)
      out.symbols.push_back(it->star());
    return out;
  }

  std::string str() const {
    if (symbols.empty()) return "e";
    std::string out;
    for (std::size_t k = 0; k < symbols.size(); ++k) {
      if (k > 0) out += ' ';
      out += name(symbols[k]);
    }
    return out;
  }
};

}  // namespace skewtor
