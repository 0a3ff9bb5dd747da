#pragma once

#include <cmath>

#include "d23/types.hpp"

namespace d23 {

// Forward-mode dual number over complex doubles. Matrix builders are generic
// over the scalar, so seeding u with deriv 1 differentiates any R/K/transfer
// matrix in u exactly.
struct Dual {
  Cplx v{0.0, 0.0};
  Cplx d{0.0, 0.0};

  Dual() = default;
  Dual(double x) : v(x) {}
  Dual(const Cplx& x) : v(x) {}
  Dual(const Cplx& value, const Cplx& deriv) : v(value), d(deriv) {}
};

// d/du seed at the point u.
inline Dual dual_seed(const Cplx& u) { return Dual{u, Cplx{1.0, 0.0}}; }

inline Dual operator+(const Dual& a, const Dual& b) { return {a.v + b.v, a.d + b.d}; }
inline Dual operator-(const Dual& a, const Dual& b) { return {a.v - b.v, a.d - b.d}; }
inline Dual operator-(const Dual& a) { return {-a.v, -a.d}; }
inline Dual operator*(const Dual& a, const Dual& b) { return {a.v * b.v, a.v * b.d + a.d * b.v}; }
inline Dual operator/(const Dual& a, const Dual& b) {
  return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
}
inline Dual& operator+=(Dual& a, const Dual& b) { a = a + b; return a; }
inline Dual& operator-=(Dual& a, const Dual& b) { a = a - b; return a; }
inline Dual& operator*=(Dual& a, const Dual& b) { a = a * b; return a; }
inline Dual& operator/=(Dual& a, const Dual& b) { a = a / b; return a; }

inline Dual exp(const Dual& a) { Cplx e = std::exp(a.v); return {e, e * a.d}; }
inline Dual sinh(const Dual& a) { return {std::sinh(a.v), std::cosh(a.v) * a.d}; }
inline Dual cosh(const Dual& a) { return {std::cosh(a.v), std::sinh(a.v) * a.d}; }
inline Dual tanh(const Dual& a) {
  Cplx t = std::tanh(a.v);
  return {t, (1.0 - t * t) * a.d};
}
inline Dual sqrt(const Dual& a) {
  Cplx s = std::sqrt(a.v);
  return {s, a.d / (2.0 * s)};
}
inline Dual log(const Dual& a) { return {std::log(a.v), a.d / a.v}; }

inline const Cplx& value_of(const Cplx& x) { return x; }
inline const Cplx& value_of(const Dual& x) { return x.v; }
inline Cplx deriv_of(const Cplx&) { return {0.0, 0.0}; }
inline const Cplx& deriv_of(const Dual& x) { return x.d; }

}  // namespace d23
