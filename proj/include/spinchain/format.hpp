#pragma once

#include <complex>
#include <string>

namespace spinchain {

// Fixed 12 significant digits; negative zero prints as "0".
std::string format_number(double x);

// "a", "bi" or "(a+bi)".
std::string format_complex(std::complex<double> z);

}  // namespace spinchain
