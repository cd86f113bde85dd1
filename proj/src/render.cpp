#include "combtile/render.hpp"

#include <algorithm>
#include <charconv>

#include "combtile/metatiles.hpp"

namespace combtile {
namespace {

const char* superscript_digit(char d) {
  switch (d) {
    case '0': return "⁰";
    case '1': return "¹";
    case '2': return "²";
    case '3': return "³";
    case '4': return "⁴";
    case '5': return "⁵";
    case '6': return "⁶";
    case '7': return "⁷";
    case '8': return "⁸";
    default: return "⁹";
  }
}

std::string superscript(std::size_t count) {
  std::string out;
  for (char d : std::to_string(count)) out += superscript_digit(d);
  return out;
}

char tile_label(std::size_t index) {
  static constexpr std::string_view labels =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
  return labels[index % labels.size()];
}

}  // namespace

std::string symbolic(const Tiling& t) {
  std::string out;
  std::size_t i = 0;
  while (i < t.placements.size()) {
    const char sym = symbol(t.placements[i].kind);
    std::size_t run = 1;
    while (i + run < t.placements.size() && symbol(t.placements[i + run].kind) == sym) ++run;
    out += sym;
    if (run > 1) out += superscript(run);
    i += run;
  }
  return out;
}

RenderedTiling render_tiling(const Tiling& t) {
  if (!validate(t)) throw std::invalid_argument("render: invalid tiling");
  RenderedTiling out;
  out.symbolic = symbolic(t);

  out.slot_row.assign(static_cast<std::size_t>(2 * t.cells), '?');
  for (std::size_t i = 0; i < t.placements.size(); ++i) {
    const TilePlacement& p = t.placements[i];
    for (int d = 0; d < teeth(p.kind); ++d) {
      out.slot_row[static_cast<std::size_t>(p.start + 2 * d)] = tile_label(i);
    }
  }

  std::string boundaries(static_cast<std::size_t>(2 * t.cells), ' ');
  const std::vector<int> faults = fault_lines(t.cells, t.placements);
  for (int b = 1; b < t.cells; ++b) {
    boundaries[static_cast<std::size_t>(2 * b)] =
        std::binary_search(faults.begin(), faults.end(), b) ? '|' : '.';
  }
  while (!boundaries.empty() && boundaries.back() == ' ') boundaries.pop_back();
  out.boundary_row = std::move(boundaries);
  return out;
}

Tiling parse_tiling_spec(std::string_view spec) {
  Tiling t;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t end = spec.find(',', pos);
    if (end == std::string_view::npos) end = spec.size();
    std::string_view item = spec.substr(pos, end - pos);
    pos = end + 1;

    if (item.size() < 3 || item[1] != '@') {
      throw std::invalid_argument("tiling spec: expected kind@slot, got '" + std::string(item) + "'");
    }
    const auto kind = kind_from_symbol(item[0]);
    if (!kind) {
      throw std::invalid_argument(std::string("tiling spec: unknown tile symbol '") + item[0] + "'");
    }
    int slot = -1;
    const std::string_view digits = item.substr(2);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), slot);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || slot < 0) {
      throw std::invalid_argument("tiling spec: bad slot index in '" + std::string(item) + "'");
    }
    t.placements.push_back({*kind, slot});
  }
  if (t.placements.empty()) throw std::invalid_argument("tiling spec: no placements");
  std::sort(t.placements.begin(), t.placements.end());
  const int max_slot = std::max_element(t.placements.begin(), t.placements.end(),
                                        [](const TilePlacement& a, const TilePlacement& b) {
                                          return a.last_slot() < b.last_slot();
                                        })
                           ->last_slot();
  t.cells = max_slot / 2 + 1;
  if (!validate(t)) throw std::invalid_argument("tiling spec: placements do not tile a board");
  return t;
}

}  // namespace combtile
