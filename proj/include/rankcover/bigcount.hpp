#pragma once
// Exact integers/rationals and multiprecision reals used by every counting and bound routine.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace rankcover {

using BigCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <unsigned Digits>
using Float = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Digits>,
                                            boost::multiprecision::et_off>;
using Real = Float<50>;

BigCount ipow(std::uint64_t base, unsigned exp);
BigCount ceil_div(const BigCount& a, const BigCount& b);
BigCount floor_div(const BigCount& a, const BigCount& b);
BigCount ceil_of(const Rational& x);
BigCount floor_of(const Rational& x);

inline std::string to_string(const BigCount& x) { return x.str(); }

}  // namespace rankcover
