#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ltab {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt factorial(unsigned n);
BigInt power(unsigned base, unsigned exponent);

}  // namespace ltab
