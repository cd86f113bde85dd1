#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "combtile/integer.hpp"

namespace combtile {

// An n-board is a row of n unit cells; each cell splits into two slots of
// width 1/2. Slot k is the left (k even) or right (k odd) half of cell k/2.
// A tile with m teeth placed at slot s occupies s, s+2, ..., s+2(m-1):
// teeth and gaps alternate at half-cell pitch.

enum class TileKind : int {
  half_square = 1,  // h: one tooth
  fence = 2,        // f: two teeth
  comb = 3,         // c: three teeth
};

constexpr int teeth(TileKind k) { return static_cast<int>(k); }
char symbol(TileKind k);                       // 'h', 'f' or 'c'
std::optional<TileKind> kind_from_symbol(char c);
TileKind kind_from_teeth(int m);               // throws std::invalid_argument

struct TilePlacement {
  TileKind kind = TileKind::half_square;
  int start = 0;  // slot index of the first tooth

  int last_slot() const { return start + 2 * (teeth(kind) - 1); }
  bool covers(int slot) const {
    return slot >= start && slot <= last_slot() && (slot - start) % 2 == 0;
  }

  // Ordered by position first so that enumeration order equals the
  // lexicographic order of placement sequences.
  friend constexpr auto operator<=>(const TilePlacement& a, const TilePlacement& b) {
    if (auto c = a.start <=> b.start; c != 0) return c;
    return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
  }
  friend constexpr bool operator==(const TilePlacement&, const TilePlacement&) = default;
};

// A complete tiling: the placements' slots partition {0, ..., 2*cells-1}.
// Canonical form keeps placements sorted by start slot.
struct Tiling {
  int cells = 0;
  std::vector<TilePlacement> placements;

  friend bool operator==(const Tiling&, const Tiling&) = default;
  friend auto operator<=>(const Tiling&, const Tiling&) = default;
};

// Non-empty subset of the three tile kinds (equivalently, of omino sizes
// {1,2,3} on the paired boards).
class TileSet {
 public:
  constexpr TileSet() = default;

  static constexpr TileSet all() { return TileSet(0b1110); }
  static TileSet of(std::initializer_list<int> teeth_counts);   // throws on bad counts
  static std::optional<TileSet> parse(std::string_view symbols);  // e.g. "hf", "hfc"

  constexpr bool contains(int m) const { return m >= 1 && m <= 3 && (bits_ >> m) & 1u; }
  constexpr bool contains(TileKind k) const { return contains(teeth(k)); }
  constexpr bool empty() const { return bits_ == 0; }
  std::string str() const;  // symbols in h,f,c order

  friend constexpr bool operator==(const TileSet&, const TileSet&) = default;

 private:
  explicit constexpr TileSet(unsigned bits) : bits_(bits) {}
  unsigned bits_ = 0;
};

inline constexpr int kDefaultEnumerationCap = 14;
// Slot occupancy is tracked in a 64-bit mask during enumeration.
inline constexpr int kMaxEnumerableCells = 32;

// Thrown when an exhaustive enumeration is asked for a board longer than the
// configured cap (tiling counts grow like T(n+2)^2, so this guards against
// accidental exponential blowups).
class EnumerationCapExceeded : public std::runtime_error {
 public:
  EnumerationCapExceeded(int cells, int cap);
  int cells() const { return cells_; }
  int cap() const { return cap_; }

 private:
  int cells_;
  int cap_;
};

// True iff t satisfies the Tiling invariants: placements sorted by start,
// all slots in range, and the occupied slots partition the board exactly.
bool validate(const Tiling& t);

// Exact number of tilings of an n-board by the given tile set, via a
// left-to-right transfer over slots whose state is the occupancy of the next
// four slots (a comb reaches at most four slots past its start). Linear in n
// and fully independent of the enumeration path.
Int count_tilings(int cells, TileSet tiles);

namespace detail {

template <typename Visitor>
void enumerate_rec(int total_slots, TileSet tiles, std::uint64_t occupied, int frontier,
                   std::vector<TilePlacement>& acc, Visitor&& visit) {
  while (frontier < total_slots && ((occupied >> frontier) & 1u)) ++frontier;
  if (frontier == total_slots) {
    visit(std::span<const TilePlacement>(acc));
    return;
  }
  for (int m = 1; m <= 3; ++m) {
    if (!tiles.contains(m)) continue;
    const int last = frontier + 2 * (m - 1);
    if (last >= total_slots) break;  // larger m reaches even further
    std::uint64_t bits = 0;
    for (int i = 0; i < m; ++i) bits |= std::uint64_t{1} << (frontier + 2 * i);
    if (occupied & bits) continue;
    acc.push_back({static_cast<TileKind>(m), frontier});
    enumerate_rec(total_slots, tiles, occupied | bits, frontier + 1, acc, visit);
    acc.pop_back();
  }
}

void check_enumerable(int cells, TileSet tiles, int cap);

}  // namespace detail

// Visits every tiling of an n-board exactly once, in lexicographic order of
// the placement sequence (leftmost empty slot filled with each admissible
// kind, fewest teeth first). The span passed to the visitor is only valid
// for the duration of the call.
template <typename Visitor>
void for_each_tiling(int cells, TileSet tiles, Visitor&& visit,
                     int cap = kDefaultEnumerationCap) {
  detail::check_enumerable(cells, tiles, cap);
  std::vector<TilePlacement> acc;
  acc.reserve(static_cast<std::size_t>(2 * cells));
  detail::enumerate_rec(2 * cells, tiles, 0, 0, acc, visit);
}

// Materialized form of for_each_tiling. Fine up to n = 12 or so; beyond that
// prefer the visitor (n = 14 already has ~9.8 million tilings).
std::vector<Tiling> enumerate_tilings(int cells, TileSet tiles,
                                      int cap = kDefaultEnumerationCap);

}  // namespace combtile
