#include "rankcover/bigcount.hpp"

#include <stdexcept>

namespace rankcover {

BigCount ipow(std::uint64_t base, unsigned exp) {
  return boost::multiprecision::pow(BigCount(base), exp);
}

BigCount floor_div(const BigCount& a, const BigCount& b) {
  if (b == 0) throw std::domain_error("division by zero");
  BigCount qt = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --qt;
  return qt;
}

BigCount ceil_div(const BigCount& a, const BigCount& b) { return -floor_div(-a, b); }

BigCount floor_of(const Rational& x) {
  return floor_div(boost::multiprecision::numerator(x), boost::multiprecision::denominator(x));
}

BigCount ceil_of(const Rational& x) {
  return ceil_div(boost::multiprecision::numerator(x), boost::multiprecision::denominator(x));
}

}  // namespace rankcover
