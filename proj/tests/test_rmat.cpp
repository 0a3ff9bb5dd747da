#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "d23/linalg.hpp"
#include "d23/rmat.hpp"
#include "d23/scalars.hpp"
#include "test_util.hpp"

using namespace d23;
using namespace d23::testutil;

namespace {

CMat scal(Cplx s, int n) { return s * CMat::identity(n); }

}  // namespace

TEST_CASE("gauge matrix") {
  // eta -> 0 limit: diag(1,1,1,-1,1,1)
  CMat u0 = gauge_u(Cplx{1e-9, 0.0});
  CMat expect = CMat::identity(6);
  expect(3, 3) = -1.0;
  CHECK(rel_residual(u0, expect) < 1e-8);

  const Cplx eta{0.3, 0.0};
  CHECK(rel_residual(gauge_u(eta) * gauge_u_inv(eta), CMat::identity(6)) < 1e-12);

  const Cplx v43 = 2.0 * std::pow(std::sinh(eta), 2) * std::sqrt(std::cosh(eta));
  CHECK(std::abs(gauge_u(eta)(3, 2) - v43) < 1e-15);
}

TEST_CASE("scalar function zeros") {
  const Cplx eta{0.3, 0.0};
  CHECK(std::abs(fn_rho1(2.0 * eta, eta)) < 1e-14);
  CHECK(std::abs(fn_rho_s(3.0 * eta, eta)) < 1e-14);
  CHECK(std::abs(fn_rho_t0(4.0 * eta, eta)) < 1e-14);
}

TEST_CASE("constant matrices") {
  const Cplx eta{0.3, 0.0};
  Cplx det{1.0};
  CMat m = matrix_m(eta);
  for (int i = 0; i < 6; ++i) det *= m(i, i);
  CHECK(std::abs(det - 1.0) < 1e-14);

  CHECK(rel_residual(matrix_mbar(Cplx{1e-12, 0.0}), CMat::identity(4)) < 1e-10);

  CMat vb = matrix_vbar(eta);
  const Cplx c2 = std::cosh(2.0 * eta);
  CHECK(rel_residual(vb * vb, scal(c2 * c2, 6)) < 1e-13);
}

TEST_CASE("r_vv regularity") {
  for (Cplx eta : {Cplx{0.3, 0.0}, Cplx{0.55, 0.0}, Cplx{0.3, 0.1}}) {
    CMat r0 = r_vv(Cplx{0.0, 0.0}, eta);
    const Cplx root = std::sqrt(fn_rho1(Cplx{0.0, 0.0}, eta));
    CHECK(rel_residual(r0, root * permutation_op(6, 6)) < 1e-12);
  }
}

TEST_CASE("r_vv unitarity") {
  auto g = rng(21);
  for (Cplx eta : {Cplx{0.3, 0.0}, Cplx{0.55, 0.0}, Cplx{0.3, 0.1}}) {
    for (int k = 0; k < 10; ++k) {
      Cplx u = rand_cplx(g);
      CMat lhs = r_vv(u, eta) * swap_conj(r_vv(-u, eta), 6, 6);
      CHECK(rel_residual(lhs, scal(fn_rho1(u, eta), 36)) < 1e-10);
    }
  }
}

TEST_CASE("r_vv crossing unitarity") {
  auto g = rng(22);
  SpaceLayout L{6, 6};
  for (Cplx eta : {Cplx{0.3, 0.0}, Cplx{0.3, 0.1}}) {
    CMat m1 = embed(matrix_m(eta), {0}, L);
    CMat m1i = inverse(m1);
    for (int k = 0; k < 10; ++k) {
      Cplx u = rand_cplx(g);
      CMat lhs = partial_transpose(r_vv(u, eta), L, 0) * m1 *
                 partial_transpose(swap_conj(r_vv(-u + 8.0 * eta, eta), 6, 6), L, 0) * m1i;
      CHECK(rel_residual(lhs, scal(fn_rho1(u - 4.0 * eta, eta), 36)) < 1e-10);
    }
  }
}

TEST_CASE("r_vv periodicity") {
  auto g = rng(23);
  for (Cplx eta : {Cplx{0.3, 0.0}, Cplx{0.3, 0.1}}) {
    SpaceLayout L{6, 6};
    CMat v2 = embed(matrix_vbar(eta), {1}, L);
    for (int k = 0; k < 5; ++k) {
      Cplx u = rand_cplx(g);
      CMat lhs = r_vv(u + IPI, eta);
      CMat rhs = v2 * r_vv(u, eta) * inverse(v2);
      CHECK(rel_residual(lhs, rhs) < 1e-10);
    }
  }
}

TEST_CASE("r_vv yang-baxter") {
  auto g = rng(24);
  SpaceLayout L{6, 6, 6};
  for (Cplx eta : {Cplx{0.3, 0.0}, Cplx{0.3, 0.1}}) {
    for (int k = 0; k < 5; ++k) {
      Cplx u = rand_cplx(g), v = rand_cplx(g);
      CMat r12 = embed(r_vv(u - v, eta), {0, 1}, L);
      CMat r13 = embed(r_vv(u, eta), {0, 2}, L);
      CMat r23 = embed(r_vv(v, eta), {1, 2}, L);
      CHECK(rel_residual(r12 * r13 * r23, r23 * r13 * r12) < 1e-10);
    }
  }
}

TEST_CASE("r_vv degeneracy ranks") {
  const Cplx eta{0.3, 0.0};
  CHECK(numeric_rank(r_vv(4.0 * eta, eta), 1e-8) == 1);
  CHECK(numeric_rank(r_vv(2.0 * eta + IPI, eta), 1e-8) == 16);
}
