#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "skewtor/errors.hpp"

namespace skewtor {

// Two generator alphabets share one symbol type. The torus family holds the
// unitaries u, v and their adjoints; the coordinate family holds x1..xn with
// the involution pairing x1<->x2, x3<->x4, ...  In both families the star
// partner of (base_index, starred) is (base_index, !starred).
enum class GeneratorFamily : std::uint8_t { Torus = 0, Coordinate = 1 };

struct GeneratorSymbol {
  GeneratorFamily family = GeneratorFamily::Torus;
  std::uint8_t base_index = 0;
  bool starred = false;

  friend auto operator<=>(const GeneratorSymbol&, const GeneratorSymbol&) = default;

  GeneratorSymbol star() const { return {family, base_index, !starred}; }
};

namespace gen {
inline constexpr GeneratorSymbol u{GeneratorFamily::Torus, 0, false};
inline constexpr GeneratorSymbol u_star{GeneratorFamily::Torus, 0, true};
inline constexpr GeneratorSymbol v{GeneratorFamily::Torus, 1, false};
inline constexpr GeneratorSymbol v_star{GeneratorFamily::Torus, 1, true};

// x_k, 1-based: x1 = (0,plain), x2 = (0,star), x3 = (1,plain), x4 = (1,star), ...
inline GeneratorSymbol x(int k) {
  if (k < 1 || k > 255)
    throw Error(ErrorCode::ParseError, "coordinate generator index out of range");
  return {GeneratorFamily::Coordinate, static_cast<std::uint8_t>((k - 1) / 2), (k - 1) % 2 == 1};
}
}  // namespace gen

inline std::string name(GeneratorSymbol s) {
  if (s.family == GeneratorFamily::Torus) {
    std::string base = s.base_index == 0 ? "u" : "v";
    if (s.starred) base += '*';
    return base;
  }
  return "x" + std::to_string(2 * s.base_index + (s.starred ? 1 : 0) + 1);
}

}  // namespace skewtor
