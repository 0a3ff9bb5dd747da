#include "d23/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <numeric>
#include <sstream>

namespace d23 {

namespace {

Eigen::MatrixXcd to_eigen(const CMat& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

CMat from_eigen(const Eigen::MatrixXcd& m) {
  CMat out(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

}  // namespace

EigResult eig(const CMat& m, bool want_vectors, double tol_eig) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eig: matrix must be square");
  const auto em = to_eigen(m);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(em, want_vectors);
  if (solver.info() != Eigen::Success) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(em);
    const auto& sv = svd.singularValues();
    std::ostringstream os;
    os << "eig: convergence failure (n=" << m.rows() << ", sigma_max=" << sv(0)
       << ", sigma_min=" << sv(sv.size() - 1) << ")";
    throw EigError(os.str());
  }

  const int n = m.rows();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  const auto& vals = solver.eigenvalues();
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (vals(a).real() != vals(b).real()) return vals(a).real() < vals(b).real();
    return vals(a).imag() < vals(b).imag();
  });

  EigResult out;
  out.values.resize(n);
  for (int i = 0; i < n; ++i) out.values[i] = vals(order[i]);

  if (want_vectors) {
    const auto& vecs = solver.eigenvectors();
    out.vectors = CMat(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) out.vectors(i, j) = vecs(i, order[j]);

    const double mnorm = em.norm();
    for (int j = 0; j < n; ++j) {
      Eigen::VectorXcd v(n);
      for (int i = 0; i < n; ++i) v(i) = out.vectors(i, j);
      const double res = (em * v - out.values[j] * v).norm() / std::max(mnorm, 1e-300);
      if (res > tol_eig) {
        std::ostringstream os;
        os << "eig: residual " << res << " exceeds tol " << tol_eig << " for eigenvalue "
           << out.values[j] << " (||M||_F=" << mnorm << ")";
        throw EigError(os.str());
      }
    }
  }
  return out;
}

std::vector<double> singular_values(const CMat& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
  const auto& sv = svd.singularValues();
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

int numeric_rank(const CMat& m, double tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const auto sv = singular_values(m);
  const double cutoff = tol * sv.front();
  int r = 0;
  for (double s : sv)
    if (s > cutoff) ++r;
  return r;
}

CMat inverse(const CMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix must be square");
  return from_eigen(to_eigen(m).partialPivLu().inverse());
}

CMat solve(const CMat& a, const CMat& b) {
  return from_eigen(to_eigen(a).partialPivLu().solve(to_eigen(b)));
}

CMat orthonormalize_bilinear(const CMat& basis) {
  const int n = basis.rows(), r = basis.cols();
  CMat q = basis;
  for (int j = 0; j < r; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < j; ++k) {
        Cplx dot{0.0, 0.0};
        for (int i = 0; i < n; ++i) dot += q(i, k) * q(i, j);
        for (int i = 0; i < n; ++i) q(i, j) -= dot * q(i, k);
      }
    }
    Cplx nrm2{0.0, 0.0};
    for (int i = 0; i < n; ++i) nrm2 += q(i, j) * q(i, j);
    const Cplx nrm = std::sqrt(nrm2);
    if (std::abs(nrm) < 1e-12)
      throw std::runtime_error("orthonormalize_bilinear: (near-)isotropic column");
    for (int i = 0; i < n; ++i) q(i, j) /= nrm;
  }
  return q;
}

CMat orthonormalize_hermitian(const CMat& basis) {
  Eigen::MatrixXcd b = to_eigen(basis);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(b);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(b.rows(), b.cols());
  return from_eigen(q);
}

std::vector<double> principal_angles(const CMat& a, const CMat& b) {
  Eigen::MatrixXcd qa = to_eigen(orthonormalize_hermitian(a));
  Eigen::MatrixXcd qb = to_eigen(orthonormalize_hermitian(b));
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(qa.adjoint() * qb);
  const auto& sv = svd.singularValues();
  std::vector<double> angles(sv.size());
  for (int i = 0; i < sv.size(); ++i) angles[i] = std::acos(std::min(1.0, sv(i)));
  std::sort(angles.begin(), angles.end());
  return angles;
}

}  // namespace d23
