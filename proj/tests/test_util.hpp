#pragma once

#include <random>

#include "d23/matrix.hpp"

namespace d23::testutil {

inline std::mt19937_64 rng(uint64_t seed) { return std::mt19937_64{seed}; }

inline double uni(std::mt19937_64& g, double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline Cplx rand_cplx(std::mt19937_64& g, double re = 0.9, double im = 0.9) {
  return {uni(g, -re, re), uni(g, -im, im)};
}

inline CMat rand_mat(std::mt19937_64& g, int r, int c) {
  CMat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = rand_cplx(g);
  return m;
}

}  // namespace d23::testutil
