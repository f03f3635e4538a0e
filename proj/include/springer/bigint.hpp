#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace springer {

// Springer numbers leave 64-bit range around n = 17.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace springer
