#pragma once

#include <array>
#include <string>
#include <vector>

#include "d23/matrix.hpp"
#include "d23/params.hpp"
#include "d23/rmat_tables.hpp"
#include "d23/scalars.hpp"

namespace d23 {

// ---------------------------------------------------------------------------
// Errata: printed entries whose transcription is ambiguous or inconsistent.
// Each switch selects between the literal text and the variant adopted after
// minimizing the Yang-Baxter residual (margin >= 6 orders of magnitude; see
// tests/test_rmat.cpp which re-derives every resolution).
// ---------------------------------------------------------------------------
struct RsvVariant {
  bool sin_family_as_sinh = true;  // r15..r18: "sin 2eta" -> sinh 2eta
  bool r31_from_r27 = true;        // r31 printed as -e^{-u} r26 (duplicate of r34) -> -e^{-u} r27
  bool rsn_r38_minus = true;       // (rsn) row 19 prints r^+_38 in the r^- block -> r^-_38
};

inline constexpr RsvVariant kPrintedRsv{false, false, false};
inline constexpr RsvVariant kAdoptedRsv{};

struct ErratumRecord {
  const char* id;
  const char* printed;
  const char* adopted;
  const char* resolved_by;
};

const std::vector<ErratumRecord>& errata_table();
std::string errata_json();
std::string errata_hash();

// ---------------------------------------------------------------------------
// Constant matrices
// ---------------------------------------------------------------------------

template <class S>
Mat<S> gauge_u(const S& eta) {
  using std::cosh;
  using std::sinh;
  using std::sqrt;
  Mat<S> u(6, 6);
  const S ch = cosh(eta), ch2 = cosh(2.0 * eta), ch3 = cosh(3.0 * eta), sh = sinh(eta);
  u(0, 0) = ch;
  u(1, 1) = ch;
  u(2, 2) = sqrt(ch3);
  u(3, 2) = 2.0 * sh * sh * sqrt(ch);
  u(3, 3) = -ch2 * sqrt(ch);
  u(4, 4) = ch2;
  u(5, 5) = ch2;
  return u;
}

template <class S>
Mat<S> gauge_u_inv(const S& eta) {
  using std::cosh;
  using std::sinh;
  using std::sqrt;
  Mat<S> u(6, 6);
  const S ch = cosh(eta), ch2 = cosh(2.0 * eta), ch3 = cosh(3.0 * eta), sh = sinh(eta);
  const S a = sqrt(ch3), b = 2.0 * sh * sh * sqrt(ch), c = -ch2 * sqrt(ch);
  u(0, 0) = 1.0 / ch;
  u(1, 1) = 1.0 / ch;
  u(2, 2) = 1.0 / a;
  u(3, 2) = -b / (a * c);
  u(3, 3) = 1.0 / c;
  u(4, 4) = 1.0 / ch2;
  u(5, 5) = 1.0 / ch2;
  return u;
}

template <class S>
Mat<S> matrix_m(const S& eta) {
  using std::exp;
  Mat<S> m(6, 6);
  m(0, 0) = exp(6.0 * eta);
  m(1, 1) = exp(2.0 * eta);
  m(2, 2) = S(1.0);
  m(3, 3) = S(1.0);
  m(4, 4) = exp(-2.0 * eta);
  m(5, 5) = exp(-6.0 * eta);
  return m;
}

template <class S>
Mat<S> matrix_mbar(const S& eta) {
  using std::exp;
  Mat<S> m(4, 4);
  m(0, 0) = exp(4.0 * eta);
  m(1, 1) = exp(2.0 * eta);
  m(2, 2) = exp(-2.0 * eta);
  m(3, 3) = exp(-4.0 * eta);
  return m;
}

template <class S>
Mat<S> matrix_vbar(const S& eta) {
  using std::cosh;
  using std::sinh;
  using std::sqrt;
  Mat<S> v(6, 6);
  const S ch2 = cosh(2.0 * eta), sh = sinh(eta);
  const S off = -sqrt(cosh(3.0 * eta) / cosh(eta));
  v(0, 0) = ch2;
  v(1, 1) = ch2;
  v(2, 2) = 2.0 * sh * sh;
  v(2, 3) = off;
  v(3, 2) = off;
  v(3, 3) = -2.0 * sh * sh;
  v(4, 4) = ch2;
  v(5, 5) = ch2;
  return v;
}

// ---------------------------------------------------------------------------
// Fundamental 36x36 R-matrix (vector (x) vector)
// ---------------------------------------------------------------------------

namespace detail {

inline bool in34(int a) { return a == 3 || a == 4; }
inline int prime(int a) { return 7 - a; }

inline double bar_idx(int a) {
  if (a < 3) return a + 1.0;
  if (a > 4) return a - 1.0;
  return 3.5;
}

}  // namespace detail

template <class S>
Mat<S> r_vv_ungauged(const S& u, const S& eta) {
  using std::exp;
  using detail::in34;
  using detail::prime;

  const S xu = exp(u), x2 = exp(2.0 * u);
  const S q2 = exp(2.0 * eta), q4 = exp(4.0 * eta), q8 = exp(8.0 * eta);
  const S one{1.0};

  Mat<S> r(36, 36);
  auto add = [&r](int a, int b, int g, int d, const S& coef) {
    r((a - 1) * 6 + (g - 1), (b - 1) * 6 + (d - 1)) += coef;
  };

  const S t1 = (x2 - q4) * (x2 - q8);
  const S t2 = q2 * (x2 - one) * (x2 - q8);
  const S t3 = (q4 - one) * (x2 - q8);

  for (int a = 1; a <= 6; ++a) {
    if (!in34(a)) add(a, a, a, a, t1);
    for (int b = 1; b <= 6; ++b) {
      if (a != b && a != prime(b) && !(in34(a) && in34(b))) add(a, a, b, b, t2);
      if (!in34(a) && !in34(b) && a != prime(b)) {
        if (a < b) add(a, b, b, a, -t3);
        if (a > b) add(a, b, b, a, -t3 * x2);
      }
    }
  }

  // mixing with the degenerate middle pair (alpha in {1,2} or {5,6}, beta in {3,4})
  const S glob = -0.5 * t3;
  for (int b = 3; b <= 4; ++b) {
    for (int a : {1, 2}) {
      const S ca = glob * (xu + one);
      add(a, b, b, a, ca);
      add(prime(b), prime(a), prime(a), prime(b), ca);
      const S cb = -glob * (xu - one);
      add(a, b, prime(b), a, cb);
      add(prime(b), prime(a), prime(a), b, cb);
    }
    for (int a : {5, 6}) {
      const S ca = glob * (xu + one) * xu;
      add(a, b, b, a, ca);
      add(prime(b), prime(a), prime(a), prime(b), ca);
      const S cb = glob * (xu - one) * xu;
      add(a, b, prime(b), a, cb);
      add(prime(b), prime(a), prime(a), b, cb);
    }
  }

  // a^alpha_beta block (anti-diagonal Weyl pattern)
  for (int a = 1; a <= 6; ++a) {
    if (in34(a)) continue;
    for (int b = 1; b <= 6; ++b) {
      if (in34(b)) continue;
      S coef;
      if (a == b) {
        coef = (q4 * x2 - q8) * (x2 - one);
      } else {
        const S ebar = exp(2.0 * eta * (detail::bar_idx(a) - detail::bar_idx(b)));
        const S delta = (a == prime(b)) ? S(1.0) : S(0.0);
        if (a < b)
          coef = (q4 - one) * (q8 * ebar * (x2 - one) - delta * (x2 - q8));
        else
          coef = (q4 - one) * x2 * (ebar * (x2 - one) - delta * (x2 - q8));
      }
      add(a, b, prime(a), prime(b), coef);
    }
  }

  // b^{+-}_alpha blocks
  for (int a = 1; a <= 6; ++a) {
    if (in34(a)) continue;
    S bp, bm;
    if (a < 3) {
      const S pre = exp(eta * (2.0 * a - 1.0)) * (q4 - one) * (x2 - one);
      bp = pre * (xu + q4);
      bm = -pre * (xu - q4);
    } else {
      const S pre = exp(eta * (2.0 * a - 9.0)) * (q4 - one) * (x2 - one) * xu;
      bp = pre * (xu + q4);
      bm = pre * (xu - q4);
    }
    for (int b = 3; b <= 4; ++b) {
      add(a, b, prime(a), prime(b), 0.5 * bp);
      add(prime(b), prime(a), b, a, 0.5 * bp);
      add(a, b, prime(a), b, 0.5 * bm);
      add(b, prime(a), b, a, 0.5 * bm);
    }
  }

  // c^{+-}, d^{+-} on the middle pair
  const S cp = 0.5 * (q4 - one) * (q4 + one) * xu * (xu - one) * (xu + q4) + t2;
  const S cm = -0.5 * (q4 - one) * (q4 + one) * xu * (xu + one) * (xu - q4) + t2;
  const S dp = 0.5 * (q4 - one) * (q4 - one) * xu * (xu + one) * (xu + q4);
  const S dm = -0.5 * (q4 - one) * (q4 - one) * xu * (xu - one) * (xu - q4);
  for (int a = 3; a <= 4; ++a) {
    add(a, a, prime(a), prime(a), cp);
    add(a, a, a, a, cm);
    add(a, prime(a), prime(a), a, dp);
    add(a, prime(a), a, prime(a), dm);
  }

  const S pref = exp(-2.0 * (u + 3.0 * eta));
  return pref * r;
}

template <class S>
Mat<S> r_vv(const S& u, const S& eta) {
  const Mat<S> g = kron(gauge_u(eta), gauge_u(eta));
  const Mat<S> gi = kron(gauge_u_inv(eta), gauge_u_inv(eta));
  return g * r_vv_ungauged(u, eta) * gi;
}

inline CMat r_vv(Cplx u, const ModelParams& p) { return r_vv(u, p.eta); }

// ---------------------------------------------------------------------------
// Spinor-vector 24x24 R-matrices
// ---------------------------------------------------------------------------

namespace detail {

// r^+_1..r^+_40 (index 0 unused)
template <class S>
std::array<S, 41> rsv_plus_coeffs(const S& u, const S& eta, const RsvVariant& var) {
  using std::cosh;
  using std::exp;
  using std::sinh;
  using std::sqrt;
  using std::tanh;

  std::array<S, 41> r{};
  const S sh = sinh(eta), ch = cosh(eta), ch2 = cosh(2.0 * eta), ch3 = cosh(3.0 * eta);
  const S sh2 = sinh(2.0 * eta), sh4 = sinh(4.0 * eta);
  const S half = S(0.5);

  r[1] = 2.0 * sinh(u - 3.0 * eta);
  r[2] = 2.0 * sinh(u - eta);
  const S g1 = (exp(eta) * sh4 - 2.0 * exp(2.0 * eta) * sh) / ch2;
  r[3] = 2.0 * sinh(u - 2.0 * eta) + g1;
  r[4] = 2.0 * sinh(u - 2.0 * eta) - g1;
  r[5] = -2.0 * sh * tanh(2.0 * eta) * sqrt(ch3 / ch);
  r[6] = 2.0 * sh * sh * (1.0 + exp(4.0 * eta) * ch2) / (ch2 * sqrt(ch * ch3));
  r[7] = 4.0 * sinh(half * (u - 3.0 * eta)) * cosh(half * (u - eta));
  r[8] = 4.0 * sinh(half * (u - eta)) * cosh(half * (u - 3.0 * eta));
  const S g2 = (exp(-eta) * sh4 - 2.0 * exp(-2.0 * eta) * sh) / ch2;
  r[9] = 2.0 * sinh(u - 2.0 * eta) + g2;
  r[10] = 2.0 * sinh(u - 2.0 * eta) - g2;
  r[11] = -4.0 * exp(half * u - eta) * sh * cosh(half * (u - eta)) * sqrt(ch3 / ch2);
  r[12] = -2.0 * exp(-half * eta) * sh * (2.0 * ch2 - 1.0 - exp(u - eta)) * sqrt(ch / ch2);
  r[13] = -2.0 * sh * sh * (1.0 + exp(-4.0 * eta) * ch2) / (ch2 * sqrt(ch * ch3));
  r[14] = -4.0 * sh2 * sh * sh / sqrt(ch * ch3);

  // r15..r18: printed with sin(2 eta); YBE selects sinh(2 eta)
  S fam;
  if (var.sin_family_as_sinh) {
    fam = sh2;
  } else {
    const S iu = S(Cplx{0.0, 1.0});
    fam = (exp(2.0 * iu * eta) - exp(-2.0 * iu * eta)) / (2.0 * iu);
  }
  r[15] = 2.0 * exp(-u) * fam;
  r[16] = -2.0 * exp(-u + eta) * fam;
  r[17] = -2.0 * exp(u - eta) * fam;
  r[18] = 2.0 * exp(u) * fam;

  r[19] = exp(-u + 2.0 * eta) * r[11];
  r[20] = -2.0 * exp(half * eta) * sh * (2.0 * ch2 - 1.0 - exp(eta - u)) * sqrt(ch / ch2);
  r[21] = exp(-u + 1.5 * eta) * sh2 * (2.0 * ch2 - 1.0 - exp(u - 3.0 * eta)) / sqrt(ch2 * ch3);
  r[22] = -4.0 * exp(-half * u) * sh * cosh(half * (u - 3.0 * eta)) * sqrt(ch / ch2);
  r[23] = -exp(-u) * r[11];
  r[24] = -exp(-2.0 * eta) * r[20];
  r[25] = -exp(u - 1.5 * eta) * sh2 * (2.0 * ch2 - 1.0 + exp(eta - u)) / sqrt(ch2 * ch3);
  r[26] = 4.0 * exp(half * u - eta) * sh * sinh(half * (u - eta)) * sqrt(ch / ch2);
  r[27] = 4.0 * exp(half * u) * sh * sinh(half * (u - 3.0 * eta)) * sqrt(ch3 / ch2);
  r[28] = -exp(1.5 * eta) * sh2 * (2.0 * ch2 - 1.0 + exp(u - 3.0 * eta)) / sqrt(ch * ch2);
  r[29] = -exp(2.0 * eta) * r[25];
  r[30] = -exp(2.0 * eta) * r[26];
  // r31 printed as -e^{-u} r26 (then r31 == r34); YBE selects -e^{-u} r27
  r[31] = var.r31_from_r27 ? -exp(-u) * r[27] : -exp(-u) * r[26];
  r[32] = -exp(-1.5 * eta) * sh2 * (2.0 * ch2 - 1.0 + exp(3.0 * eta - u)) / sqrt(ch * ch2);
  r[33] = -exp(-u - half * eta) * sh2 * (2.0 * ch2 - 1.0 + exp(u - eta)) / sqrt(ch2 * ch3);
  r[34] = -exp(-u) * r[26];
  r[35] = exp(2.0 * eta) * r[33];
  r[36] = -exp(-u + 2.0 * eta) * r[26];
  r[37] = exp(u - 1.5 * eta) * sh2 * (2.0 * ch2 - 1.0 - exp(3.0 * eta - u)) / sqrt(ch2 * ch3);
  r[38] = exp(u) * r[22];
  r[39] = exp(2.0 * eta) * r[11];
  r[40] = exp(2.0 * eta) * r[12];
  return r;
}

template <class S>
std::array<S, 41> rsv_minus_coeffs(const S& u, const S& eta, const RsvVariant& var) {
  using std::cosh;
  using std::exp;
  using std::sqrt;

  const auto p = rsv_plus_coeffs(u, eta, var);
  const S ch = cosh(eta), ch3 = cosh(3.0 * eta);
  const S w = sqrt(ch3 / ch), wi = sqrt(ch / ch3);

  std::array<S, 41> r{};
  r[1] = p[1];
  r[2] = p[2];
  r[3] = p[4];
  r[4] = p[3];
  r[5] = -p[5];
  r[6] = -p[6];
  r[7] = p[8];
  r[8] = p[7];
  r[9] = p[10];
  r[10] = p[9];
  r[11] = w * p[26];
  r[12] = exp(u) * w * p[33];
  r[13] = -p[13];
  r[14] = -p[14];
  r[15] = p[15];
  r[16] = -p[16];
  r[17] = -p[17];
  r[18] = p[18];
  r[19] = exp(-u + 2.0 * eta) * r[11];
  r[20] = -exp(2.0 * eta - u) * w * p[25];
  r[21] = -exp(-u) * wi * p[28];
  r[22] = exp(-u) * wi * p[27];
  r[23] = exp(-u) * r[11];
  r[24] = exp(2.0 * eta) * r[20];
  r[25] = exp(u - 2.0 * eta) * wi * p[20];
  r[26] = -wi * p[11];
  r[27] = -exp(u) * w * p[22];
  r[28] = exp(u) * w * p[21];
  r[29] = exp(2.0 * eta) * r[25];
  r[30] = exp(2.0 * eta) * r[26];
  r[31] = exp(-u) * r[27];
  r[32] = exp(-u) * w * p[37];
  r[33] = exp(-u) * wi * p[12];
  r[34] = exp(-u) * r[26];
  r[35] = -exp(2.0 * eta) * r[33];
  r[36] = -exp(-u + 2.0 * eta) * r[26];
  r[37] = -exp(u) * wi * p[32];
  r[38] = -exp(u) * r[22];
  r[39] = -exp(2.0 * eta) * r[11];
  r[40] = -exp(2.0 * eta) * r[12];
  return r;
}

}  // namespace detail

// R^{s(+-)v}(u) on V_spinor (x) V_vector, spinor index slowest.
template <class S>
Mat<S> r_sv(Rep rep, const S& u, const S& eta, const RsvVariant& var = kAdoptedRsv) {
  if (rep == Rep::V6) throw std::invalid_argument("r_sv: rep must be a spinor");
  Mat<S> r(24, 24);
  if (rep == Rep::SP) {
    const auto c = detail::rsv_plus_coeffs(u, eta, var);
    for (const auto& e : tables::kRspEntries)
      r(e.row, e.col) = double(e.sign) * c[e.coef];
  } else {
    const auto cm = detail::rsv_minus_coeffs(u, eta, var);
    const auto cp = detail::rsv_plus_coeffs(u, eta, var);
    for (const auto& e : tables::kRsnEntries) {
      // (rsn) row 19 prints r^+_38 where the minus block is expected
      const bool printed_plus = (e.row == 18 && e.col == 9);
      const S val = (printed_plus && !var.rsn_r38_minus) ? cp[e.coef] : cm[e.coef];
      r(e.row, e.col) = double(e.sign) * val;
    }
  }
  return r;
}

inline CMat r_sv(Rep rep, Cplx u, const ModelParams& p) { return r_sv(rep, u, p.eta); }

// R^{v s(+-)}(u) on V_vector (x) V_spinor: the space-exchanged matrix.
template <class S>
Mat<S> r_vs(Rep rep, const S& u, const S& eta, const RsvVariant& var = kAdoptedRsv) {
  const Mat<S> p46 = permutation_op<S>(4, 6);
  const Mat<S> p64 = permutation_op<S>(6, 4);
  return p46 * r_sv(rep, u, eta, var) * p64;
}

inline CMat r_vs(Rep rep, Cplx u, const ModelParams& p) { return r_vs(rep, u, p.eta); }

// ---------------------------------------------------------------------------
// Spinor-spinor 16x16 R-matrix R^{s+s-} on V_{s+} (x) V_{s-}
// ---------------------------------------------------------------------------

template <class S>
Mat<S> r_ss(const S& u, const S& eta) {
  using std::cosh;
  using std::exp;
  using std::sinh;

  const S h = 0.5 * u, sh = sinh(eta);
  std::array<S, 14> c{};
  c[1] = sinh(h - 2.0 * eta) * cosh(h - eta);
  c[2] = sinh(h - 2.0 * eta) * cosh(h);
  c[3] = exp(-h) * sh * sinh(h - 2.0 * eta);
  c[4] = -exp(h) * sh * sinh(h - 2.0 * eta);
  c[5] = sinh(h - eta) * cosh(h);
  c[6] = -exp(-h - eta) * sh * cosh(h);
  c[7] = exp(-h + eta) * sh * cosh(h);
  c[8] = exp(u) * c[7];
  c[9] = exp(u - 2.0 * eta) * c[7];
  c[10] = -exp(-u) * sh * cosh(2.0 * eta);
  c[11] = exp(2.0 * u) * c[10];
  c[12] = exp(-h) * sh * (cosh(h) - sinh(h - 2.0 * eta));
  c[13] = exp(h) * sh * (cosh(h) + sinh(h - 2.0 * eta));

  Mat<S> r(16, 16);
  for (const auto& e : tables::kRssEntries) r(e.row, e.col) = double(e.sign) * c[e.coef];
  return r;
}

inline CMat r_ss(Cplx u, const ModelParams& p) { return r_ss(u, p.eta); }

// Swap-conjugated matrix on two equal-dimension factors: R_{21} = P R_{12} P.
template <class S>
Mat<S> swap_conj(const Mat<S>& r, int dim_a, int dim_b) {
  return permutation_op<S>(dim_a, dim_b) * r * permutation_op<S>(dim_b, dim_a);
}

}  // namespace d23
