#include "combtile/bijection.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace combtile {

bool validate(const OminoTiling& t) {
  if (t.cells < 0) return false;
  int next_free = 0;
  for (const OminoPiece& p : t.pieces) {
    if (p.size < 1 || p.size > 3) return false;
    if (p.cell != next_free) return false;
    next_free += p.size;
  }
  return next_free == t.cells;
}

std::pair<OminoTiling, OminoTiling> to_board_pair(const Tiling& t) {
  if (!validate(t)) throw std::invalid_argument("to_board_pair: invalid tiling");
  OminoTiling left{t.cells, {}};
  OminoTiling right{t.cells, {}};
  for (const TilePlacement& p : t.placements) {
    OminoTiling& board = (p.start % 2 == 0) ? left : right;
    board.pieces.push_back({teeth(p.kind), p.start / 2});
  }
  return {std::move(left), std::move(right)};
}

Tiling from_board_pair(const OminoTiling& left, const OminoTiling& right) {
  if (left.cells != right.cells) {
    throw std::invalid_argument("from_board_pair: board lengths differ");
  }
  if (!validate(left) || !validate(right)) {
    throw std::invalid_argument("from_board_pair: invalid omino tiling");
  }
  Tiling out;
  out.cells = left.cells;
  out.placements.reserve(left.pieces.size() + right.pieces.size());
  for (const OminoPiece& p : left.pieces) {
    out.placements.push_back({kind_from_teeth(p.size), 2 * p.cell});
  }
  for (const OminoPiece& p : right.pieces) {
    out.placements.push_back({kind_from_teeth(p.size), 2 * p.cell + 1});
  }
  std::sort(out.placements.begin(), out.placements.end());
  return out;
}

Int count_omino_tilings(long long cells, TileSet sizes) {
  if (sizes.empty()) throw std::invalid_argument("count_omino_tilings: empty size set");
  if (cells < 0) return 0;
  // One memo per size subset; subsets are few and small.
  static std::mutex mutex;
  static std::map<std::string, std::vector<Int>> memos;
  std::lock_guard<std::mutex> lock(mutex);
  std::vector<Int>& memo = memos[sizes.str()];
  while (static_cast<long long>(memo.size()) <= cells) {
    const long long k = static_cast<long long>(memo.size());
    Int value = (k == 0) ? 1 : 0;
    for (int m = 1; m <= 3; ++m) {
      if (sizes.contains(m) && k - m >= 0) value += memo[static_cast<std::size_t>(k - m)];
    }
    memo.push_back(std::move(value));
  }
  return memo[static_cast<std::size_t>(cells)];
}

}  // namespace combtile
