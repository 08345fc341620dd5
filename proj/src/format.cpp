#include "spinchain/format.hpp"

#include <cstdio>

namespace spinchain {

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

std::string format_complex(std::complex<double> z) {
  const std::string re = format_number(z.real());
  const std::string im = format_number(z.imag());
  if (im == "0") return re;
  if (re == "0") return im + "i";
  if (im.front() == '-') return "(" + re + im + "i)";
  return "(" + re + "+" + im + "i)";
}

}  // namespace spinchain
