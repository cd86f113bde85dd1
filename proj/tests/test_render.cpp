#include <doctest.h>

#include "combtile/render.hpp"

using namespace combtile;

namespace {

const Tiling kPairH2{1, {{TileKind::half_square, 0}, {TileKind::half_square, 1}}};
const Tiling kBifence{2, {{TileKind::fence, 0}, {TileKind::fence, 1}}};
const Tiling kHfh{2, {{TileKind::half_square, 0}, {TileKind::fence, 1}, {TileKind::half_square, 2}}};
const Tiling kFourH{2,
                    {{TileKind::half_square, 0},
                     {TileKind::half_square, 1},
                     {TileKind::half_square, 2},
                     {TileKind::half_square, 3}}};

}  // namespace

TEST_CASE("symbolic strings collapse runs with superscripts") {
  CHECK(symbolic(kPairH2) == "h²");
  CHECK(symbolic(kBifence) == "f²");
  CHECK(symbolic(kHfh) == "hfh");
  CHECK(symbolic(kFourH) == "h⁴");
  CHECK(symbolic(Tiling{3, {{TileKind::comb, 0}, {TileKind::comb, 1}}}) == "c²");
}

TEST_CASE("rendered rows label teeth and mark boundaries") {
  const RenderedTiling h2 = render_tiling(kPairH2);
  CHECK(h2.slot_row == "ab");
  CHECK(h2.slot_row[0] != h2.slot_row[1]);
  CHECK(h2.boundary_row.empty());

  const RenderedTiling bifence = render_tiling(kBifence);
  CHECK(bifence.slot_row == "abab");
  CHECK(bifence.boundary_row == "  .");  // interlocked: no fault

  const RenderedTiling four_h = render_tiling(kFourH);
  CHECK(four_h.slot_row == "abcd");
  CHECK(four_h.boundary_row == "  |");  // fault between the cells

  const RenderedTiling hfh = render_tiling(kHfh);
  CHECK(hfh.slot_row == "abcb");
  CHECK(hfh.boundary_row == "  .");

  CHECK_THROWS_AS(render_tiling(Tiling{1, {{TileKind::fence, 0}}}), std::invalid_argument);
}

TEST_CASE("tiling specs parse, validate and round-trip") {
  CHECK(parse_tiling_spec("h@0,f@1,h@2") == kHfh);
  CHECK(parse_tiling_spec("f@0,f@1") == kBifence);
  CHECK(parse_tiling_spec("h@0,h@1") == kPairH2);
  // order in the spec is irrelevant; canonical form sorts by start
  CHECK(parse_tiling_spec("h@2,h@0,f@1") == kHfh);

  CHECK_THROWS_AS(parse_tiling_spec(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_tiling_spec("h@0"), std::invalid_argument);       // vacancy
  CHECK_THROWS_AS(parse_tiling_spec("x@0,h@1"), std::invalid_argument);   // bad symbol
  CHECK_THROWS_AS(parse_tiling_spec("h@-1,h@0"), std::invalid_argument);  // bad slot
  CHECK_THROWS_AS(parse_tiling_spec("h0,h1"), std::invalid_argument);     // bad grammar
  CHECK_THROWS_AS(parse_tiling_spec("h@0,h@0,h@1"), std::invalid_argument);
}
