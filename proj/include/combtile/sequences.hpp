#pragma once

#include "combtile/integer.hpp"

namespace combtile {

// The four sequences related by the identity registry. Each is defined by a
// linear recurrence with a single Kronecker-delta seed and vanishes below it:
//
//   tribonacci:  T(n) = T(n-1) + T(n-2) + T(n-3) + [n==2],  T(n<2) = 0
//   fibonacci:   F(n) = F(n-1) + F(n-2) + [n==1],           F(n<1) = 0
//   narayana:    c(n) = c(n-1) + c(n-3) + [n==0],           c(n<0) = 0
//   padovan:     p(n) = p(n-2) + p(n-3) + [n==0],           p(n<0) = 0
//
// All four accept any integer argument (negative indices give 0), are pure,
// and memoize internally; concurrent callers see identical values.

Int tribonacci(long long n);
Int fibonacci(long long n);
Int narayana(long long n);
Int padovan(long long n);

}  // namespace combtile
