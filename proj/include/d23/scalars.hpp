#pragma once

#include <cmath>

#include "d23/dual.hpp"
#include "d23/types.hpp"

namespace d23 {

// Scalar coefficient functions shared by the R-matrix properties, operator
// product identities and T-Q relations.

template <class S>
S fn_a1(const S& u, const S& eta) {
  using std::sinh;
  return 4.0 * sinh(u - 4.0 * eta) * sinh(u - 2.0 * eta);
}

template <class S>
S fn_e1(const S& u, const S& eta) {
  using std::sinh;
  return 4.0 * sinh(u - 2.0 * eta) * sinh(u);
}

template <class S>
S fn_b1(const S& u, const S& eta) {
  using std::sinh;
  return 4.0 * sinh(u) * sinh(u - 4.0 * eta);
}

template <class S>
S fn_a2(const S& u, const S& eta) {
  using std::sinh;
  return 2.0 * sinh(u - 3.0 * eta);
}

template <class S>
S fn_b2(const S& u, const S& eta) {
  using std::sinh;
  return 2.0 * sinh(u - eta);
}

template <class S>
S fn_rho1(const S& u, const S& eta) {
  return fn_a1(u, eta) * fn_a1(-u, eta);
}

template <class S>
S fn_rho_s(const S& u, const S& eta) {
  using std::sinh;
  return -4.0 * sinh(u - 3.0 * eta) * sinh(u + 3.0 * eta);
}

template <class S>
S fn_rho_ss(const S& u, const S& eta) {
  using std::cosh;
  using std::sinh;
  const S h = 0.5 * u;
  return -sinh(h + 2.0 * eta) * sinh(h - 2.0 * eta) * cosh(h + eta) * cosh(h - eta);
}

template <class S>
S fn_rho_t0(const S& u, const S& eta) {
  using std::sinh;
  return 4.0 * sinh(u + 2.0 * eta) * sinh(u - 4.0 * eta);
}

}  // namespace d23
