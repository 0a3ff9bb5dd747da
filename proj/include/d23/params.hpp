#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "d23/types.hpp"

namespace d23 {

// Representation label for auxiliary spaces: the 6-dim vector rep and the two
// 4-dim spinor reps.
enum class Rep { V6, SP, SM };

inline int rep_dim(Rep r) { return r == Rep::V6 ? 6 : 4; }

struct ModelParams {
  Cplx eta;
  double tol = 1e-9;

  ModelParams() : ModelParams(Cplx{0.3, 0.0}) {}
  explicit ModelParams(Cplx eta_, double tol_ = 1e-9) : eta(eta_), tol(tol_) {
    // sinh(k eta) appears in denominators and degeneracy scalars for k<=6,
    // cosh(k eta) under square roots for k<=3; reject eta too close to a zero.
    constexpr double kMin = 1e-6;
    for (int k = 1; k <= 6; ++k) {
      if (std::abs(std::sinh(double(k) * eta)) < kMin)
        throw std::invalid_argument("ModelParams: eta too close to a zero of sinh(" +
                                    std::to_string(k) + " eta)");
    }
    for (int k = 1; k <= 3; ++k) {
      if (std::abs(std::cosh(double(k) * eta)) < kMin)
        throw std::invalid_argument("ModelParams: eta too close to a zero of cosh(" +
                                    std::to_string(k) + " eta)");
    }
  }
};

struct OpenBoundary {
  Cplx c{1.0, 0.0};
  Cplx c_prime{1.0, 0.0};

  OpenBoundary() = default;
  OpenBoundary(Cplx c_, Cplx c_prime_) : c(c_), c_prime(c_prime_) {
    if (std::abs(c) < 1e-12 || std::abs(c_prime) < 1e-12)
      throw std::invalid_argument("OpenBoundary: boundary parameters must be nonzero");
  }
};

struct ChainSpec {
  int n_sites = 1;
  std::vector<Cplx> thetas;

  ChainSpec() : thetas{Cplx{0.0, 0.0}} {}
  ChainSpec(int n, std::vector<Cplx> th) : n_sites(n), thetas(std::move(th)) {
    if (n_sites < 1) throw std::invalid_argument("ChainSpec: need at least one site");
    if (static_cast<int>(thetas.size()) != n_sites)
      throw std::invalid_argument("ChainSpec: thetas size != n_sites");
  }
  static ChainSpec homogeneous(int n) { return ChainSpec(n, std::vector<Cplx>(n, Cplx{0.0, 0.0})); }

  int quantum_dim() const {
    int d = 1;
    for (int i = 0; i < n_sites; ++i) d *= 6;
    return d;
  }
};

// Pairwise theta_j +- theta_l must stay away from the zeros of the scalar
// prefactors entering the operator product identities.
bool generic_position_ok(const ChainSpec& chain, const ModelParams& p, double min_abs = 1e-3);

}  // namespace d23
