#include "combtile/metatiles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <mutex>

#include "combtile/sequences.hpp"

namespace combtile {
namespace {

// Boundary b (between cells b-1 and b) is crossed by a placement iff the
// placement occupies a slot < 2b and a slot >= 2b; for a tile at slot s with
// m teeth that is exactly b in [s/2 + 1, s/2 + m - 1].
template <typename MarkBoundary>
void scan_covered_boundaries(std::span<const TilePlacement> placements, MarkBoundary&& mark) {
  for (const TilePlacement& p : placements) {
    const int base = p.start / 2;
    for (int d = 1; d < teeth(p.kind); ++d) mark(base + d);
  }
}

// Boundary mask for boards of at most 64 cells (bits 1..63).
std::uint64_t covered_mask64(std::span<const TilePlacement> placements) {
  std::uint64_t mask = 0;
  scan_covered_boundaries(placements, [&](int b) {
    if (b > 0 && b < 64) mask |= std::uint64_t{1} << b;
  });
  return mask;
}

unsigned kind_bits(std::span<const TilePlacement> placements) {
  unsigned bits = 0;
  for (const TilePlacement& p : placements) bits |= 1u << teeth(p.kind);
  return bits;
}

Metatile make_metatile_unchecked(Tiling body) {
  Metatile m;
  m.sigma = final_signature(body.cells, body.placements);
  m.mixed = is_mixed(body.placements);
  m.body = std::move(body);
  return m;
}

}  // namespace

std::vector<int> fault_lines(int cells, std::span<const TilePlacement> placements) {
  std::vector<int> faults;
  if (cells <= 64) {
    const std::uint64_t covered = covered_mask64(placements);
    for (int b = 1; b < cells; ++b) {
      if (!((covered >> b) & 1u)) faults.push_back(b);
    }
  } else {
    std::vector<char> covered(static_cast<std::size_t>(cells), 0);
    scan_covered_boundaries(placements, [&](int b) { covered[static_cast<std::size_t>(b)] = 1; });
    for (int b = 1; b < cells; ++b) {
      if (!covered[static_cast<std::size_t>(b)]) faults.push_back(b);
    }
  }
  return faults;
}

bool has_internal_fault(int cells, std::span<const TilePlacement> placements) {
  if (cells <= 1) return false;
  if (cells <= 64) {
    const std::uint64_t all = ((std::uint64_t{1} << (cells - 1)) - 1) << 1;  // bits 1..cells-1
    return (covered_mask64(placements) & all) != all;
  }
  return !fault_lines(cells, placements).empty();
}

SigmaSignature final_signature(int cells, std::span<const TilePlacement> placements) {
  SigmaSignature sig;
  const int left_slot = 2 * cells - 2;
  const int right_slot = 2 * cells - 1;
  for (auto it = placements.rbegin(); it != placements.rend(); ++it) {
    if (sig.left == 0 && it->covers(left_slot)) sig.left = teeth(it->kind);
    if (sig.right == 0 && it->covers(right_slot)) sig.right = teeth(it->kind);
    if (sig.left != 0 && sig.right != 0) break;
  }
  return sig;
}

bool is_mixed(std::span<const TilePlacement> placements) {
  return std::popcount(kind_bits(placements)) >= 2;
}

bool contains_mixed_metatile(int cells, std::span<const TilePlacement> placements) {
  if (cells <= 64) {
    const std::uint64_t covered = covered_mask64(placements);
    std::size_t i = 0;
    int segment_end = 1;
    while (i < placements.size()) {
      while (segment_end < cells && ((covered >> segment_end) & 1u)) ++segment_end;
      unsigned kinds = 0;
      while (i < placements.size() && placements[i].start < 2 * segment_end) {
        kinds |= 1u << teeth(placements[i].kind);
        ++i;
      }
      if (std::popcount(kinds) >= 2) return true;
      ++segment_end;
    }
    return false;
  }
  std::vector<int> cuts = fault_lines(cells, placements);
  cuts.push_back(cells);
  std::size_t i = 0;
  for (int end : cuts) {
    unsigned kinds = 0;
    while (i < placements.size() && placements[i].start < 2 * end) {
      kinds |= 1u << teeth(placements[i].kind);
      ++i;
    }
    if (std::popcount(kinds) >= 2) return true;
  }
  return false;
}

Metatile as_metatile(Tiling body) {
  if (body.cells < 1 || !validate(body)) {
    throw std::invalid_argument("as_metatile: body is not a valid tiling of >= 1 cells");
  }
  if (has_internal_fault(body.cells, body.placements)) {
    throw std::invalid_argument("as_metatile: body has an internal fault line");
  }
  return make_metatile_unchecked(std::move(body));
}

std::vector<Metatile> decompose(const Tiling& t) {
  if (!validate(t)) throw std::invalid_argument("decompose: invalid tiling");
  std::vector<Metatile> parts;
  if (t.cells == 0) return parts;
  std::vector<int> cuts = fault_lines(t.cells, t.placements);
  cuts.push_back(t.cells);
  int begin_cell = 0;
  std::size_t i = 0;
  for (int end_cell : cuts) {
    Tiling body;
    body.cells = end_cell - begin_cell;
    while (i < t.placements.size() && t.placements[i].start < 2 * end_cell) {
      body.placements.push_back({t.placements[i].kind, t.placements[i].start - 2 * begin_cell});
      ++i;
    }
    parts.push_back(make_metatile_unchecked(std::move(body)));
    begin_cell = end_cell;
  }
  return parts;
}

Tiling concatenate(std::span<const Metatile> parts) {
  Tiling out;
  for (const Metatile& part : parts) {
    if (part.length() < 1 || !validate(part.body) ||
        has_internal_fault(part.length(), part.body.placements)) {
      throw std::invalid_argument("concatenate: part is not a valid metatile");
    }
    const int offset = 2 * out.cells;
    for (const TilePlacement& p : part.body.placements) {
      out.placements.push_back({p.kind, p.start + offset});
    }
    out.cells += part.length();
  }
  return out;
}

std::vector<Metatile> enumerate_metatiles(int length, TileSet tiles, int cap) {
  if (length < 1) throw std::invalid_argument("enumerate_metatiles: length must be >= 1");
  std::vector<Metatile> out;
  for_each_tiling(
      length, tiles,
      [&](std::span<const TilePlacement> placements) {
        if (has_internal_fault(length, placements)) return;
        out.push_back(make_metatile_unchecked(Tiling{length, {placements.begin(), placements.end()}}));
      },
      cap);
  return out;
}

Metatile swap_involution(const Metatile& m) {
  Tiling body;
  body.cells = m.length();
  body.placements = m.body.placements;
  for (TilePlacement& p : body.placements) p.start ^= 1;
  std::sort(body.placements.begin(), body.placements.end());
  return as_metatile(std::move(body));
}

namespace {

// x(l) = x(l-1) + x(l-2) + x(l-3) + impulses, x(l<0) = 0.
class ImpulseRecurrence {
 public:
  explicit ImpulseRecurrence(std::vector<std::pair<int, int>> impulses)
      : impulses_(std::move(impulses)) {}

  Int at(long long l) const {
    if (l < 0) return 0;
    std::lock_guard<std::mutex> lock(mutex_);
    while (static_cast<long long>(memo_.size()) <= l) {
      const long long k = static_cast<long long>(memo_.size());
      Int value = 0;
      for (auto [index, amount] : impulses_) {
        if (k == index) value += amount;
      }
      for (int t = 1; t <= 3; ++t) {
        if (k - t >= 0) value += memo_[static_cast<std::size_t>(k - t)];
      }
      memo_.push_back(std::move(value));
    }
    return memo_[static_cast<std::size_t>(l)];
  }

 private:
  std::vector<std::pair<int, int>> impulses_;
  mutable std::mutex mutex_;
  mutable std::vector<Int> memo_;
};

// {a,b} -> 12, 13 or 23; validates.
int sigma_class(int a, int b) {
  if (a < 1 || a > 3 || b < 1 || b > 3) {
    throw std::invalid_argument("mu_sigma: signature digits must be in {1,2,3}");
  }
  if (a == b) {
    throw std::invalid_argument("mu_sigma: signature digits must be distinct (mixed metatiles)");
  }
  return a < b ? 10 * a + b : 10 * b + a;
}

}  // namespace

Int mu(long long length) {
  Int value = 4 * (tribonacci(length) + tribonacci(length - 1));
  if (length == 2) value -= 2;
  return value;
}

Int mu_by_recurrence(long long length) {
  static const ImpulseRecurrence rec({{2, 2}, {3, 6}, {4, 2}, {5, 2}});
  return rec.at(length);
}

Int mu_sigma(long long length, int a, int b) {
  switch (sigma_class(a, b)) {
    case 12: return tribonacci(length) + tribonacci(length - 2);
    case 13: return 2 * tribonacci(length - 1);
    case 23: return tribonacci(length - 1) + tribonacci(length - 3);
  }
  return 0;  // unreachable
}

Int mu_sigma_by_recurrence(long long length, int a, int b) {
  static const ImpulseRecurrence rec12({{2, 1}, {4, 1}});
  static const ImpulseRecurrence rec13({{3, 2}});
  static const ImpulseRecurrence rec23({{3, 1}, {5, 1}});
  switch (sigma_class(a, b)) {
    case 12: return rec12.at(length);
    case 13: return rec13.at(length);
    case 23: return rec23.at(length);
  }
  return 0;  // unreachable
}

bool mu_series_check(int order) {
  if (order < 1) throw std::invalid_argument("mu_series_check: order must be >= 1");
  // Truncated quotient by the kernel 1 - z - z^2 - z^3.
  const auto expand = [order](std::vector<Int> numerator) {
    std::vector<Int> q(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
      Int v = k < static_cast<int>(numerator.size()) ? numerator[static_cast<std::size_t>(k)] : 0;
      for (int t = 1; t <= 3; ++t) {
        if (k - t >= 0) v += q[static_cast<std::size_t>(k - t)];
      }
      q[static_cast<std::size_t>(k)] = std::move(v);
    }
    return q;
  };
  std::vector<Int> as_stated = expand({0, 0, 2, 6, 2, 2});
  std::vector<Int> regrouped = expand({0, 0, 4, 4});
  if (order >= 2) regrouped[2] -= 2;
  for (int k = 0; k <= order; ++k) {
    const Int expected = mu(k);
    if (as_stated[static_cast<std::size_t>(k)] != expected) return false;
    if (regrouped[static_cast<std::size_t>(k)] != expected) return false;
  }
  return true;
}

}  // namespace combtile
