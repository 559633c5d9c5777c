// special.hpp: sinc and the un-normalized Fresnel integrals
//   C(x) = int_0^x cos(u^2) du,   S(x) = int_0^x sin(u^2) du,
// so C, S -> sqrt(pi/8) as x -> inf. The normalized convention of most
// libraries is C_n(t) = sqrt(2/pi) C(t sqrt(pi/2)).

#pragma once

#include <complex>

namespace bosonspin {

/// sin(x)/x with sinc(0) = 1.
double sinc(double x);

/// C(x) + i S(x). Odd in x.
std::complex<double> fresnel(double x);

double fresnel_c(double x);
double fresnel_s(double x);

}  // namespace bosonspin
