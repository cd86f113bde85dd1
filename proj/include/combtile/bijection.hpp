#pragma once

#include <utility>
#include <vector>

#include "combtile/board.hpp"
#include "combtile/integer.hpp"

namespace combtile {

// Comb tilings of an n-board are in bijection with ordered pairs of omino
// tilings (squares, dominoes, trominoes) of two n-boards: a tile's teeth all
// share one parity, so every even-start tile maps to an m-omino on the first
// board and every odd-start tile to one on the second, at the cells its
// teeth occupy.

struct OminoPiece {
  int size = 1;  // 1, 2 or 3 cells
  int cell = 0;  // leftmost covered cell

  friend constexpr bool operator==(const OminoPiece&, const OminoPiece&) = default;
};

struct OminoTiling {
  int cells = 0;
  std::vector<OminoPiece> pieces;  // in board order

  friend bool operator==(const OminoTiling&, const OminoTiling&) = default;
};

// True iff pieces tile {0,...,cells-1} as contiguous runs in order.
bool validate(const OminoTiling& t);

// Throws std::invalid_argument on an invalid tiling.
std::pair<OminoTiling, OminoTiling> to_board_pair(const Tiling& t);

// Inverse of to_board_pair; the two boards must be valid and equally long.
Tiling from_board_pair(const OminoTiling& left, const OminoTiling& right);

// Number of omino tilings of an n-board with piece sizes drawn from the set:
// s(n) = sum over sizes m of s(n-m), s(0) = 1, s(n<0) = 0.
Int count_omino_tilings(long long cells, TileSet sizes);

}  // namespace combtile
