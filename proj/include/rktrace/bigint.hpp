#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace rktrace {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(unsigned e) {
    BigInt r = 1;
    return r << e;
}

// ceil(a / 2^e) for nonnegative a
inline BigInt ceil_shr(const BigInt& a, unsigned e) {
    return (a + pow2(e) - 1) >> e;
}

} // namespace rktrace
