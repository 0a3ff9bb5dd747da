#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "d23/linalg.hpp"
#include "d23/matrix.hpp"
#include "test_util.hpp"

using namespace d23;
using namespace d23::testutil;

TEST_CASE("kron basics") {
  CHECK(rel_residual(kron(CMat::identity(2), CMat::identity(3)), CMat::identity(6)) == 0.0);

  auto g = rng(11);
  CMat m = rand_mat(g, 3, 3);
  CMat two(1, 1);
  two(0, 0) = 2.0;
  CHECK(rel_residual(kron(two, m), 2.0 * m) < 1e-15);

  CMat a = rand_mat(g, 3, 3), b = rand_mat(g, 3, 3), c = rand_mat(g, 3, 3), d = rand_mat(g, 3, 3);
  CHECK(rel_residual(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-12);
  CHECK(rel_residual(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-15);
}

TEST_CASE("permutation operator") {
  CMat p22 = permutation_op(2, 2);
  CHECK(rel_residual(p22 * p22, CMat::identity(4)) == 0.0);

  auto g = rng(12);
  CMat x = rand_mat(g, 3, 1), y = rand_mat(g, 5, 1);
  CHECK(rel_residual(permutation_op(3, 5) * kron(x, y), kron(y, x)) < 1e-15);
}

TEST_CASE("embed") {
  SpaceLayout two{6, 6};
  CHECK(rel_residual(embed(CMat::identity(6), {0}, two), CMat::identity(36)) == 0.0);

  auto g = rng(13);
  CMat a = rand_mat(g, 6, 6);
  CHECK(rel_residual(embed(a, {1}, two), kron(CMat::identity(6), a)) == 0.0);
  CHECK(rel_residual(embed(a, {0}, two), kron(a, CMat::identity(6))) == 0.0);

  // embedding on swapped sites equals conjugation by the pair permutation
  SpaceLayout three{6, 6, 6};
  CMat b = rand_mat(g, 36, 36);
  CMat p = embed(permutation_op(6, 6), {0, 1}, three);
  CHECK(rel_residual(embed(b, {1, 0}, three), p * embed(b, {0, 1}, three) * p) < 1e-12);
}

TEST_CASE("partial trace") {
  auto g = rng(14);
  CMat a = rand_mat(g, 4, 4), b = rand_mat(g, 3, 3);
  SpaceLayout L{4, 3};
  CMat ab = kron(a, b);
  CHECK(rel_residual(partial_trace(ab, L, 1), b.trace() * a) < 1e-14);
  CHECK(rel_residual(partial_trace(ab, L, 0), a.trace() * b) < 1e-14);

  CMat t1 = partial_trace(ab, L, 1);
  SpaceLayout L0{4};
  CHECK(std::abs(partial_trace(t1, L0, 0)(0, 0) - ab.trace()) < 1e-12);

  CHECK(rel_residual(partial_trace(permutation_op(6, 6), SpaceLayout{6, 6}, 0),
                     CMat::identity(6)) == 0.0);

  // partial_trace(X (I (x) B)) over factor 0 = partial_trace(X) B
  CMat x = rand_mat(g, 12, 12);
  CMat ib = kron(CMat::identity(4), b);
  CHECK(rel_residual(partial_trace(x * ib, L, 0), partial_trace(x, L, 0) * b) < 1e-13);
}

TEST_CASE("partial transpose") {
  auto g = rng(15);
  SpaceLayout L{4, 3};
  CMat m = rand_mat(g, 12, 12);
  CHECK(rel_residual(partial_transpose(partial_transpose(m, L, 1), L, 1), m) == 0.0);

  CMat a = rand_mat(g, 4, 4), b = rand_mat(g, 3, 3);
  CHECK(rel_residual(partial_transpose(kron(a, b), L, 1), kron(a, b.transpose())) == 0.0);
  CHECK(rel_residual(partial_transpose(kron(a, b), L, 0), kron(a.transpose(), b)) == 0.0);
}

TEST_CASE("eig") {
  CMat d(3, 3);
  d(0, 0) = 1.0;
  d(1, 1) = 2.0;
  d(2, 2) = 3.0;
  auto r = eig(d, false);
  CHECK(std::abs(r.values[0] - 1.0) < 1e-14);
  CHECK(std::abs(r.values[1] - 2.0) < 1e-14);
  CHECK(std::abs(r.values[2] - 3.0) < 1e-14);

  // P66 spectrum: symmetric subspace dim 21 (+1), antisymmetric 15 (-1)
  auto p = eig(permutation_op(6, 6), false);
  int plus = 0, minus = 0;
  for (auto v : p.values) {
    if (std::abs(v - 1.0) < 1e-10) ++plus;
    if (std::abs(v + 1.0) < 1e-10) ++minus;
  }
  CHECK(plus == 21);
  CHECK(minus == 15);

  auto g = rng(16);
  CMat m = rand_mat(g, 8, 8);
  CMat s = rand_mat(g, 8, 8);
  auto e1 = eig(m, false);
  auto e2 = eig(inverse(s) * m * s, false);
  for (int i = 0; i < 8; ++i) CHECK(std::abs(e1.values[i] - e2.values[i]) < 1e-9);

  // residual bound enforced internally for every returned pair
  for (int k = 0; k < 50; ++k) {
    CMat x = rand_mat(g, 36, 36);
    CHECK_NOTHROW(eig(x, true));
  }
}

TEST_CASE("numeric rank") {
  CHECK(numeric_rank(CMat::identity(6), 1e-8) == 6);
  auto g = rng(17);
  CMat v = rand_mat(g, 6, 1);
  CHECK(numeric_rank(v * v.transpose(), 1e-8) == 1);
}

TEST_CASE("dual arithmetic") {
  auto g = rng(18);
  const Cplx eta{0.3, 0.0};
  for (int k = 0; k < 20; ++k) {
    Cplx u = rand_cplx(g);
    Dual res = sinh(dual_seed(u) - Dual(4.0 * eta));
    Cplx expect = std::cosh(u - 4.0 * eta);
    CHECK(std::abs(res.d - expect) / std::abs(expect) < 1e-13);
    CHECK(std::abs(res.v - std::sinh(u - 4.0 * eta)) < 1e-13);
  }

  // exact product rule
  Dual f{Cplx{1.3, 0.2}, Cplx{0.7, -0.1}};
  Dual h{Cplx{-0.4, 1.1}, Cplx{0.2, 0.5}};
  Dual fg = f * h;
  CHECK(fg.d == f.v * h.d + f.d * h.v);
}

TEST_CASE("bilinear orthonormalization") {
  auto g = rng(19);
  CMat b = rand_mat(g, 8, 3);
  CMat q = orthonormalize_bilinear(b);
  CMat gram = q.transpose() * q;
  CHECK(rel_residual(gram, CMat::identity(3)) < 1e-12);
}
