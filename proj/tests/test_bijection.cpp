#include <doctest.h>

#include <set>
#include <string>

#include "combtile/bijection.hpp"
#include "combtile/metatiles.hpp"
#include "combtile/sequences.hpp"

using namespace combtile;

namespace {

std::string pair_key(const std::pair<OminoTiling, OminoTiling>& boards) {
  std::string key;
  for (const OminoPiece& p : boards.first.pieces) key += static_cast<char>('0' + p.size);
  key += '/';
  for (const OminoPiece& p : boards.second.pieces) key += static_cast<char>('0' + p.size);
  return key;
}

}  // namespace

TEST_CASE("omino tiling validation") {
  CHECK(validate(OminoTiling{0, {}}));
  CHECK(validate(OminoTiling{3, {{2, 0}, {1, 2}}}));
  CHECK(!validate(OminoTiling{3, {{2, 0}}}));          // vacancy
  CHECK(!validate(OminoTiling{3, {{2, 0}, {2, 2}}}));  // overflow
  CHECK(!validate(OminoTiling{2, {{1, 1}, {1, 0}}}));  // out of order
  CHECK(!validate(OminoTiling{4, {{4, 0}}}));          // bad size
}

TEST_CASE("board pair projections of the named tilings") {
  const Tiling pair_h{1, {{TileKind::half_square, 0}, {TileKind::half_square, 1}}};
  const auto squares = to_board_pair(pair_h);
  CHECK(squares.first == OminoTiling{1, {{1, 0}}});
  CHECK(squares.second == OminoTiling{1, {{1, 0}}});

  const Tiling bifence{2, {{TileKind::fence, 0}, {TileKind::fence, 1}}};
  const auto dominoes = to_board_pair(bifence);
  CHECK(dominoes.first == OminoTiling{2, {{2, 0}}});
  CHECK(dominoes.second == OminoTiling{2, {{2, 0}}});

  const Tiling bicomb{3, {{TileKind::comb, 0}, {TileKind::comb, 1}}};
  const auto trominoes = to_board_pair(bicomb);
  CHECK(trominoes.first == OminoTiling{3, {{3, 0}}});
  CHECK(trominoes.second == OminoTiling{3, {{3, 0}}});

  CHECK_THROWS_AS(to_board_pair(Tiling{1, {{TileKind::fence, 0}}}), std::invalid_argument);
}

TEST_CASE("from_board_pair inverts and rejects mismatches") {
  const Tiling expected{2,
                        {{TileKind::fence, 0}, {TileKind::half_square, 1}, {TileKind::half_square, 3}}};
  const OminoTiling domino{2, {{2, 0}}};
  const OminoTiling two_squares{2, {{1, 0}, {1, 1}}};
  CHECK(from_board_pair(domino, two_squares) == expected);

  const OminoTiling tromino{3, {{3, 0}}};
  CHECK(from_board_pair(tromino, tromino) ==
        Tiling{3, {{TileKind::comb, 0}, {TileKind::comb, 1}}});

  CHECK_THROWS_AS(from_board_pair(domino, tromino), std::invalid_argument);
  CHECK_THROWS_AS(from_board_pair(OminoTiling{2, {{2, 0}}}, OminoTiling{2, {{1, 0}}}),
                  std::invalid_argument);
}

TEST_CASE("count_omino_tilings examples") {
  CHECK(count_omino_tilings(4, TileSet::all()) == 7);
  CHECK(count_omino_tilings(0, TileSet::of({2})) == 1);
  CHECK(count_omino_tilings(5, TileSet::of({1, 2})) == 8);
  for (int n = 0; n <= 50; ++n) {
    CHECK(count_omino_tilings(n, TileSet::all()) == tribonacci(n + 2));
  }
}

TEST_CASE("to_board_pair is a bijection onto ordered pairs of omino tilings") {
  const std::vector<TileSet> subsets = {TileSet::all(), TileSet::of({1, 2}), TileSet::of({1, 3}),
                                        TileSet::of({2, 3})};
  for (const TileSet& tiles : subsets) {
    for (int n = 0; n <= 8; ++n) {
      std::set<std::string> images;
      Int total = 0;
      for (const Tiling& t : enumerate_tilings(n, tiles)) {
        ++total;
        const auto boards = to_board_pair(t);
        CHECK(validate(boards.first));
        CHECK(validate(boards.second));
        CHECK(boards.first.cells == n);
        CHECK(boards.second.cells == n);
        CHECK(images.insert(pair_key(boards)).second);  // injective
        CHECK(from_board_pair(boards.first, boards.second) == t);
      }
      const Int omino = count_omino_tilings(n, tiles);
      CHECK(total == omino * omino);  // image covers every ordered pair
    }
  }
}

TEST_CASE("suffix law: final-slot owners count as a tribonacci product") {
  for (int n = 1; n <= 8; ++n) {
    Int counts[4][4] = {};
    for_each_tiling(n, TileSet::all(), [&](std::span<const TilePlacement> placements) {
      const SigmaSignature sig = final_signature(n, placements);
      ++counts[sig.left][sig.right];
    });
    for (int m1 = 1; m1 <= 3; ++m1) {
      for (int m2 = 1; m2 <= 3; ++m2) {
        CHECK(counts[m1][m2] == tribonacci(n + 2 - m1) * tribonacci(n + 2 - m2));
      }
    }
  }
}
