#pragma once

#include <stdexcept>
#include <vector>

#include "d23/matrix.hpp"

namespace d23 {

struct EigResult {
  std::vector<Cplx> values;  // sorted by (re, im)
  CMat vectors;              // columns match values; empty if not requested
};

class EigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-symmetric complex eigendecomposition. Every returned pair satisfies
// ||M v - lambda v|| <= tol_eig * ||M||_F, else EigError with condition info.
EigResult eig(const CMat& m, bool want_vectors, double tol_eig = 1e-9);

std::vector<double> singular_values(const CMat& m);
int numeric_rank(const CMat& m, double tol = 1e-8);

CMat inverse(const CMat& m);
CMat solve(const CMat& a, const CMat& b);

// Orthonormalization in the bilinear (unconjugated) pairing v^T w; the
// printed projector bases are analytic in eta, so P = B B^T stays a projector
// for complex eta. Column order is preserved, diagonal sign fixed.
CMat orthonormalize_bilinear(const CMat& basis);

// Hermitian QR orthonormalization (metric notions: ranks, principal angles).
CMat orthonormalize_hermitian(const CMat& basis);

// Principal angles between the column spaces of a and b (radians, ascending).
std::vector<double> principal_angles(const CMat& a, const CMat& b);

}  // namespace d23
