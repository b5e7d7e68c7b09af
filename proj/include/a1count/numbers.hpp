#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace a1c {

using Int = boost::multiprecision::cpp_int;
using Ratio = boost::multiprecision::cpp_rational;

inline Int numerator(const Ratio& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Ratio& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Ratio& r) { return denominator(r) == 1; }

// Exact conversion; throws when r is not an integer.
inline Int to_int(const Ratio& r) {
  if (!is_integer(r)) throw std::domain_error("to_int: not an integer: " + r.str());
  return numerator(r);
}

inline long long to_ll(const Int& v) { return v.convert_to<long long>(); }

}  // namespace a1c
