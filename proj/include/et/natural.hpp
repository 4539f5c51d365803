#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace et {

// Arbitrary-precision integer. Naturals are cpp_int values kept >= 0 by the
// operations that produce them.
using Natural = boost::multiprecision::cpp_int;

inline std::size_t bit_size(const Natural& n) {
  return n.is_zero() ? 0 : boost::multiprecision::msb(n) + 1;
}

// Largest w with w*(w+1)/2 <= t. Used by the pairing inverse.
inline Natural triangle_root(const Natural& t) {
  using boost::multiprecision::sqrt;
  Natural w = (sqrt(Natural(8) * t + 1) - 1) / 2;
  while (w * (w + 1) / 2 > t) --w;
  while ((w + 1) * (w + 2) / 2 <= t) ++w;
  return w;
}

}  // namespace et
