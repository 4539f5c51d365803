#include "et/rational.hpp"

#include <ostream>
#include <sstream>

namespace et {

void Rational::normalize() {
  using boost::multiprecision::gcd;
  if (den_.is_zero()) throw DivisionByZero("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  Natural g = gcd(num_ < 0 ? Natural(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

double Rational::to_double() const {
  return num_.convert_to<double>() / den_.convert_to<double>();
}

std::string Rational::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  os << r.num_;
  if (r.den_ != 1) os << '/' << r.den_;
  return os;
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Natural(text), Natural(1));
    return Rational(Natural(text.substr(0, slash)), Natural(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ParseError("bad rational literal '" + text + "'");
  }
}

}  // namespace et
