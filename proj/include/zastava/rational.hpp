#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace zastava {

using Int = long long;

/// Exact rational number. Only used where a formula genuinely divides by 2
/// (rho-type pairings); everything else in the library stays in Int.
struct Rational {
  Int num = 0;
  Int den = 1;

  Rational() = default;
  Rational(Int n) : num(n), den(1) {}
  Rational(Int n, Int d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  void normalize() {
    if (den < 0) { num = -num; den = -den; }
    Int g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  bool is_integer() const { return den == 1; }

  friend Rational operator+(Rational a, Rational b) { return Rational(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Rational operator-(Rational a, Rational b) { return Rational(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend Rational operator*(Rational a, Rational b) { return Rational(a.num * b.num, a.den * b.den); }
  friend Rational operator/(Rational a, Rational b) {
    if (b.num == 0) throw std::invalid_argument("Rational: division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }
  friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.num * b.den <= b.num * a.den; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num;
    if (r.den != 1) os << '/' << r.den;
    return os;
  }
};

}  // namespace zastava
