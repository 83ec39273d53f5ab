#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace braidcover {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt abs_val(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

inline std::string to_string(const BigInt& x) { return x.str(); }

} // namespace braidcover
