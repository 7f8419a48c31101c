#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace cdiag {

using BigInt = boost::multiprecision::cpp_int;

inline auto factorial(unsigned n) -> BigInt
{
    BigInt result = 1;
    for (unsigned i = 2; i <= n; ++i)
        result *= i;
    return result;
}

inline auto to_string(const BigInt & value) -> std::string
{
    return value.str();
}

}
