#pragma once

#include <complex>

namespace d23 {

using Cplx = std::complex<double>;

inline constexpr double PI = 3.141592653589793238462643383279502884;
inline const Cplx IM{0.0, 1.0};
inline const Cplx IPI{0.0, PI};

}  // namespace d23
