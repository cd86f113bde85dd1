#pragma once

#include <string>
#include <string_view>

#include "combtile/board.hpp"

namespace combtile {

// Symbolic form of a tiling: tile symbols in start-slot order with equal
// adjacent symbols collapsed to a superscript count ("hfh", "f²", ...).
std::string symbolic(const Tiling& t);

struct RenderedTiling {
  std::string symbolic;
  // One label per slot; all teeth of one tile share a label, tiles labelled
  // a, b, c, ... in start order.
  std::string slot_row;
  // Internal cell boundaries under their right slot: '|' fault, '.' plain.
  std::string boundary_row;
};

// Throws std::invalid_argument on an invalid tiling.
RenderedTiling render_tiling(const Tiling& t);

// Parses "h@0,f@1,h@2" (kind@start-slot, comma separated) into a tiling of
// the smallest board covering the placements, and validates it. Throws
// std::invalid_argument on grammar errors or an invalid tiling.
Tiling parse_tiling_spec(std::string_view spec);

}  // namespace combtile
