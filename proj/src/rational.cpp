#include "spinchain/rational.hpp"

#include <cmath>

namespace spinchain {

std::string to_string(const Rational& r) { return r.str(); }

double Surd3::value() const { return to_double(a) + to_double(b) * std::sqrt(3.0); }

int Surd3::sign() const {
  const int sa = a.sign(), sb = b.sign();
  if (sa == 0) return sb;
  if (sb == 0 || sa == sb) return sa;
  // Opposite signs: compare a^2 with 3 b^2.
  const Rational lhs = a * a, rhs = 3 * b * b;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

}  // namespace spinchain
