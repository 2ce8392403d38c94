#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace fpsp {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt to_big(unsigned __int128 v) {
    BigInt r = static_cast<std::uint64_t>(v >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(v);
    return r;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace fpsp
