#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace spinchain {

// Arbitrary-precision rational. Constructing from a double is exact, so
// coupling constants enter schedule arithmetic without rounding.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r);

// Exact a + b * sqrt(3) with rational a, b.
struct Surd3 {
  Rational a;
  Rational b;

  Surd3() = default;
  Surd3(Rational ra, Rational rb = 0) : a(std::move(ra)), b(std::move(rb)) {}  // NOLINT

  double value() const;

  friend Surd3 operator+(const Surd3& x, const Surd3& y) { return {x.a + y.a, x.b + y.b}; }
  friend Surd3 operator-(const Surd3& x, const Surd3& y) { return {x.a - y.a, x.b - y.b}; }
  friend Surd3 operator*(const Surd3& x, const Rational& s) { return {x.a * s, x.b * s}; }
  friend Surd3 operator/(const Surd3& x, const Rational& s) { return {x.a / s, x.b / s}; }
  friend bool operator==(const Surd3& x, const Surd3& y) { return x.a == y.a && x.b == y.b; }

  // Exact sign of a + b sqrt(3): -1, 0 or +1.
  int sign() const;

  friend bool operator<(const Surd3& x, const Surd3& y) { return (x - y).sign() < 0; }
};

}  // namespace spinchain
