#include <doctest.h>

#include <thread>
#include <vector>

#include "combtile/sequences.hpp"

using combtile::Int;

TEST_CASE("tribonacci base cases and small values") {
  CHECK(combtile::tribonacci(1) == 0);
  CHECK(combtile::tribonacci(2) == 1);
  CHECK(combtile::tribonacci(8) == 24);
  CHECK(combtile::tribonacci(0) == 0);
  CHECK(combtile::tribonacci(-7) == 0);
  // first terms: 0 0 1 1 2 4 7 13 24 44 81 149 274
  CHECK(combtile::tribonacci(12) == 274);
  CHECK(combtile::tribonacci(14) == 927);
}

TEST_CASE("fibonacci, narayana, padovan examples") {
  CHECK(combtile::fibonacci(0) == 0);
  CHECK(combtile::fibonacci(1) == 1);
  CHECK(combtile::fibonacci(10) == 55);
  CHECK(combtile::fibonacci(-3) == 0);

  CHECK(combtile::narayana(-3) == 0);
  CHECK(combtile::narayana(0) == 1);
  CHECK(combtile::narayana(6) == 6);

  CHECK(combtile::padovan(0) == 1);
  CHECK(combtile::padovan(1) == 0);
  CHECK(combtile::padovan(9) == 5);
  CHECK(combtile::padovan(-1) == 0);
}

TEST_CASE("recurrences hold exactly up to n = 1000") {
  for (long long n = 0; n <= 1000; ++n) {
    CHECK(combtile::tribonacci(n) == combtile::tribonacci(n - 1) + combtile::tribonacci(n - 2) +
                                         combtile::tribonacci(n - 3) + (n == 2 ? 1 : 0));
    CHECK(combtile::fibonacci(n) ==
          combtile::fibonacci(n - 1) + combtile::fibonacci(n - 2) + (n == 1 ? 1 : 0));
    CHECK(combtile::narayana(n) ==
          combtile::narayana(n - 1) + combtile::narayana(n - 3) + (n == 0 ? 1 : 0));
    CHECK(combtile::padovan(n) ==
          combtile::padovan(n - 2) + combtile::padovan(n - 3) + (n == 0 ? 1 : 0));
  }
}

TEST_CASE("values are non-negative and monotone on their nonzero tails") {
  for (long long n = -5; n <= 400; ++n) {
    CHECK(combtile::tribonacci(n) >= 0);
    CHECK(combtile::fibonacci(n) >= 0);
    CHECK(combtile::narayana(n) >= 0);
    CHECK(combtile::padovan(n) >= 0);
  }
  for (long long n = 2; n <= 400; ++n) {
    CHECK(combtile::tribonacci(n + 1) >= combtile::tribonacci(n));
    CHECK(combtile::padovan(n + 1) >= combtile::padovan(n));
  }
  for (long long n = 1; n <= 400; ++n) {
    CHECK(combtile::fibonacci(n + 1) >= combtile::fibonacci(n));
  }
  for (long long n = 0; n <= 400; ++n) {
    CHECK(combtile::narayana(n + 1) >= combtile::narayana(n));
  }
}

TEST_CASE("repeated calls return identical values") {
  const Int a = combtile::tribonacci(123);
  const Int b = combtile::tribonacci(123);
  CHECK(a == b);
}

TEST_CASE("concurrent callers observe the same values") {
  const Int expected = combtile::tribonacci(600);
  std::vector<std::thread> workers;
  std::vector<Int> results(8);
  for (std::size_t i = 0; i < results.size(); ++i) {
    workers.emplace_back([&, i] {
      Int local = 0;
      for (long long n = 590 + static_cast<long long>(i); n <= 700; ++n) {
        local = combtile::tribonacci(n) + combtile::narayana(n) + combtile::padovan(n);
      }
      (void)local;
      results[i] = combtile::tribonacci(600);
    });
  }
  for (auto& w : workers) w.join();
  for (const Int& r : results) CHECK(r == expected);
}
