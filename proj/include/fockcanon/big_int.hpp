#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fockcanon {

/// Arbitrary-precision signed integer used for every coefficient and count.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace fockcanon
