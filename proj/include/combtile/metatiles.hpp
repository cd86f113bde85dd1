#pragma once

#include <span>
#include <vector>

#include "combtile/board.hpp"
#include "combtile/integer.hpp"

namespace combtile {

// A fault line is a cell boundary straddled by no tile; tilings split into
// metatiles exactly there. A metatile is a fault-free tiling segment.

// Ordered contents of the final two slots: the teeth counts of the tiles
// owning slot 2l-2 (left) and slot 2l-1 (right).
struct SigmaSignature {
  int left = 0;
  int right = 0;

  friend constexpr bool operator==(const SigmaSignature&, const SigmaSignature&) = default;
};

struct Metatile {
  Tiling body;  // rebased so the first occupied slot is 0
  SigmaSignature sigma;
  bool mixed = false;  // uses at least two distinct tile kinds

  int length() const { return body.cells; }
  // Canonical-body equality; sigma and mixed are derived.
  friend bool operator==(const Metatile& a, const Metatile& b) { return a.body == b.body; }
};

// Internal cell boundaries (1..cells-1) crossed by no placement.
std::vector<int> fault_lines(int cells, std::span<const TilePlacement> placements);
bool has_internal_fault(int cells, std::span<const TilePlacement> placements);

// Owners of the final two slots of a (partial or full) board; cells >= 1.
SigmaSignature final_signature(int cells, std::span<const TilePlacement> placements);

bool is_mixed(std::span<const TilePlacement> placements);

// True iff some fault-delimited segment uses at least two tile kinds.
bool contains_mixed_metatile(int cells, std::span<const TilePlacement> placements);

// Checks that body is a valid fault-free tiling of at least one cell and
// derives its signature; throws std::invalid_argument otherwise.
Metatile as_metatile(Tiling body);

// Splits a valid tiling at every fault line. Concatenating the parts (with
// slot re-basing undone) reproduces the input exactly.
std::vector<Metatile> decompose(const Tiling& t);
Tiling concatenate(std::span<const Metatile> parts);

// All single-metatile tilings of an l-board, in enumeration order.
std::vector<Metatile> enumerate_metatiles(int length, TileSet tiles,
                                          int cap = kDefaultEnumerationCap);

// Swaps the two slots of every cell. An involution on metatiles: fixed
// points are exactly the unmixed ones, and sigma digits swap.
Metatile swap_involution(const Metatile& m);

// Number of mixed metatiles of length l, closed form 4(T(l)+T(l-1)) - 2[l=2];
// zero for l < 2.
Int mu(long long length);
// Same quantity by the recurrence
// mu(l) = mu(l-1)+mu(l-2)+mu(l-3) + 6[l=3] + 2([l=2]+[l=4]+[l=5]).
Int mu_by_recurrence(long long length);

// Number of metatiles of length l ending with signature {a,b}, a != b (the
// two orders count equally, so the pair is taken unordered):
//   {1,2}: T(l) + T(l-2)
//   {1,3}: 2 T(l-1)
//   {2,3}: T(l-1) + T(l-3)
// Throws std::invalid_argument unless {a,b} are distinct teeth counts.
Int mu_sigma(long long length, int a, int b);
// Same by the per-signature recurrences (delta seeds at l=2,4 / l=3 / l=3,5).
Int mu_sigma_by_recurrence(long long length, int a, int b);

// Expands (2z^2+6z^3+2z^4+2z^5)/(1-z-z^2-z^3) and
// 4(z^2+z^3)/(1-z-z^2-z^3) - 2z^2 to the given order and checks both against
// mu coefficient-wise; order >= 1.
bool mu_series_check(int order);

}  // namespace combtile
