#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace combtile {

// Every quantity in this library is an exact integer; counts and sequence
// values can run to hundreds of digits, so everything goes through cpp_int.
using Int = boost::multiprecision::cpp_int;

}  // namespace combtile
