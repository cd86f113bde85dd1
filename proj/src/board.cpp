#include "combtile/board.hpp"

#include <algorithm>
#include <array>

namespace combtile {

char symbol(TileKind k) {
  switch (k) {
    case TileKind::half_square: return 'h';
    case TileKind::fence: return 'f';
    case TileKind::comb: return 'c';
  }
  return '?';
}

std::optional<TileKind> kind_from_symbol(char c) {
  switch (c) {
    case 'h': return TileKind::half_square;
    case 'f': return TileKind::fence;
    case 'c': return TileKind::comb;
    default: return std::nullopt;
  }
}

TileKind kind_from_teeth(int m) {
  if (m < 1 || m > 3) {
    throw std::invalid_argument("tile teeth count must be 1, 2 or 3, got " + std::to_string(m));
  }
  return static_cast<TileKind>(m);
}

TileSet TileSet::of(std::initializer_list<int> teeth_counts) {
  unsigned bits = 0;
  for (int m : teeth_counts) {
    kind_from_teeth(m);  // validates
    bits |= 1u << m;
  }
  if (bits == 0) throw std::invalid_argument("tile set must be non-empty");
  return TileSet(bits);
}

std::optional<TileSet> TileSet::parse(std::string_view symbols) {
  unsigned bits = 0;
  for (char c : symbols) {
    auto k = kind_from_symbol(c);
    if (!k) return std::nullopt;
    bits |= 1u << teeth(*k);
  }
  if (bits == 0) return std::nullopt;
  return TileSet(bits);
}

std::string TileSet::str() const {
  std::string out;
  for (int m = 1; m <= 3; ++m) {
    if (contains(m)) out += symbol(static_cast<TileKind>(m));
  }
  return out;
}

EnumerationCapExceeded::EnumerationCapExceeded(int cells, int cap)
    : std::runtime_error("enumeration of a " + std::to_string(cells) +
                         "-board refused: exceeds the enumeration cap of " +
                         std::to_string(cap) + " cells"),
      cells_(cells),
      cap_(cap) {}

bool validate(const Tiling& t) {
  if (t.cells < 0) return false;
  const int total_slots = 2 * t.cells;
  std::vector<char> covered(static_cast<std::size_t>(total_slots), 0);
  int prev_start = -1;
  for (const TilePlacement& p : t.placements) {
    if (p.start <= prev_start) return false;  // canonical order, distinct starts
    prev_start = p.start;
    if (p.start < 0 || p.last_slot() >= total_slots) return false;
    for (int i = 0; i < teeth(p.kind); ++i) {
      const int slot = p.start + 2 * i;
      if (covered[static_cast<std::size_t>(slot)]) return false;
      covered[static_cast<std::size_t>(slot)] = 1;
    }
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

Int count_tilings(int cells, TileSet tiles) {
  if (cells < 0) throw std::invalid_argument("count_tilings: board length must be >= 0");
  if (tiles.empty()) throw std::invalid_argument("count_tilings: tile set must be non-empty");
  const int total_slots = 2 * cells;
  // dp[mask]: ways to fill every slot < p, with bit i of mask holding the
  // occupancy of slot p+i. A tile placed at p can reach p+4; that slot is
  // provably free whenever p is (no earlier tile reaches past p+3), and it
  // enters the window as the mask shifts.
  std::array<Int, 16> dp{};
  std::array<Int, 16> next{};
  dp[0] = 1;
  for (int p = 0; p < total_slots; ++p) {
    for (Int& x : next) x = 0;
    for (int mask = 0; mask < 16; ++mask) {
      if (dp[mask] == 0) continue;
      if (mask & 1) {
        next[mask >> 1] += dp[mask];
        continue;
      }
      // slot p is empty, so some new tile's first tooth lands here
      if (tiles.contains(1)) {
        next[mask >> 1] += dp[mask];
      }
      if (tiles.contains(2) && p + 2 < total_slots && !(mask & 0b100)) {
        next[(mask | 0b100) >> 1] += dp[mask];
      }
      if (tiles.contains(3) && p + 4 < total_slots && !(mask & 0b100)) {
        next[((mask | 0b100) >> 1) | 0b1000] += dp[mask];
      }
    }
    std::swap(dp, next);
  }
  return dp[0];
}

namespace detail {

void check_enumerable(int cells, TileSet tiles, int cap) {
  if (cells < 0) throw std::invalid_argument("enumeration: board length must be >= 0");
  if (tiles.empty()) throw std::invalid_argument("enumeration: tile set must be non-empty");
  if (cells > cap) throw EnumerationCapExceeded(cells, cap);
  if (cells > kMaxEnumerableCells) {
    throw std::invalid_argument("enumeration supports boards of at most " +
                                std::to_string(kMaxEnumerableCells) + " cells");
  }
}

}  // namespace detail

std::vector<Tiling> enumerate_tilings(int cells, TileSet tiles, int cap) {
  std::vector<Tiling> out;
  for_each_tiling(
      cells, tiles,
      [&](std::span<const TilePlacement> placements) {
        out.push_back(Tiling{cells, {placements.begin(), placements.end()}});
      },
      cap);
  return out;
}

}  // namespace combtile
