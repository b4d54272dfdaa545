#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace opdet {

// Exact signed integer used for every matrix entry, determinant,
// permanent and expansion term. Never overflows.
using Int = boost::multiprecision::cpp_int;

}  // namespace opdet
