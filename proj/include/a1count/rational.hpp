#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

namespace a1c {

// Exact rational with 64-bit numerator and denominator, always reduced,
// denominator positive.  Every denominator that occurs in the torsion
// computations divides lcm(9, 3d) <= 63, so overflow is not a concern.
struct Rat {
  long long num = 0;
  long long den = 1;

  constexpr Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  // representative in [0,1)
  Rat mod1() const {
    long long r = num % den;
    if (r < 0) r += den;
    return Rat(r, den);
  }

  Rat operator-() const { return Rat(-num, den); }
  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend Rat operator*(long long k, const Rat& a) { return Rat(k * a.num, a.den); }
  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }

  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace a1c
