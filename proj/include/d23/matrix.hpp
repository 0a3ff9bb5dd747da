#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "d23/dual.hpp"
#include "d23/types.hpp"

namespace d23 {

// Dense row-major matrix over a generic scalar (Cplx or Dual). Everything in
// this project is small (<= 1296), so no sparsity and no clever storage.
template <class S>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative dimension");
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1.0);
    return m;
  }
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }

  int rows() const { return r_; }
  int cols() const { return c_; }
  bool empty() const { return a_.empty(); }

  S& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const S& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  std::span<S> data() { return a_; }
  std::span<const S> data() const { return a_; }

  Mat operator*(const Mat& o) const {
    if (c_ != o.r_) throw std::invalid_argument("Mat::operator*: shape mismatch");
    Mat out(r_, o.c_);
    for (int i = 0; i < r_; ++i) {
      const S* ai = &a_[static_cast<size_t>(i) * c_];
      S* oi = &out.a_[static_cast<size_t>(i) * o.c_];
      for (int k = 0; k < c_; ++k) {
        const S aik = ai[k];
        const S* bk = &o.a_[static_cast<size_t>(k) * o.c_];
        for (int j = 0; j < o.c_; ++j) oi[j] += aik * bk[j];
      }
    }
    return out;
  }

  Mat operator+(const Mat& o) const {
    check_same_shape(o);
    Mat out(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
  }
  Mat operator-(const Mat& o) const {
    check_same_shape(o);
    Mat out(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
    return out;
  }
  Mat operator-() const {
    Mat out(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = -a_[i];
    return out;
  }
  Mat& operator+=(const Mat& o) {
    check_same_shape(o);
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }

  friend Mat operator*(const S& s, const Mat& m) {
    Mat out(m.r_, m.c_);
    for (size_t i = 0; i < m.a_.size(); ++i) out.a_[i] = s * m.a_[i];
    return out;
  }
  Mat operator*(const S& s) const { return s * (*this); }

  Mat transpose() const {
    Mat out(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  S trace() const {
    S t{};
    for (int i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
    return t;
  }

 private:
  void check_same_shape(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Mat: shape mismatch");
  }

  int r_ = 0, c_ = 0;
  std::vector<S> a_;
};

using CMat = Mat<Cplx>;
using DMat = Mat<Dual>;

struct SpaceLayout {
  std::vector<int> dims;
  SpaceLayout() = default;
  SpaceLayout(std::initializer_list<int> d) : dims(d) {}
  explicit SpaceLayout(std::vector<int> d) : dims(std::move(d)) {}
  int total() const {
    int t = 1;
    for (int d : dims) t *= d;
    return t;
  }
  int factors() const { return static_cast<int>(dims.size()); }
};

template <class S>
Mat<S> kron(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const S aij = a(i, j);
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

// P: V_A (x) V_B -> V_B (x) V_A, P(x (x) y) = y (x) x.
template <class S = Cplx>
Mat<S> permutation_op(int dim_a, int dim_b) {
  Mat<S> p(dim_a * dim_b, dim_a * dim_b);
  for (int ia = 0; ia < dim_a; ++ia)
    for (int ib = 0; ib < dim_b; ++ib) p(ib * dim_a + ia, ia * dim_b + ib) = S(1.0);
  return p;
}

namespace detail {
inline std::vector<int> strides_of(const SpaceLayout& L) {
  std::vector<int> s(L.dims.size());
  int acc = 1;
  for (int f = static_cast<int>(L.dims.size()) - 1; f >= 0; --f) {
    s[f] = acc;
    acc *= L.dims[f];
  }
  return s;
}
}  // namespace detail

// Operator acting as `a` on the listed factors (in listed order) and as the
// identity elsewhere. `a` is (prod dims[sites]) square with the first listed
// site slowest.
template <class S>
Mat<S> embed(const Mat<S>& a, const std::vector<int>& sites, const SpaceLayout& L) {
  const int nf = L.factors();
  int da = 1;
  for (int s : sites) {
    if (s < 0 || s >= nf) throw std::out_of_range("embed: site out of range");
    da *= L.dims[s];
  }
  if (a.rows() != da || a.cols() != da) throw std::invalid_argument("embed: dimension mismatch");

  const auto stride = detail::strides_of(L);
  std::vector<int> rest;
  for (int f = 0; f < nf; ++f)
    if (std::find(sites.begin(), sites.end(), f) == sites.end()) rest.push_back(f);
  int drest = 1;
  for (int f : rest) drest *= L.dims[f];

  // site digit strides inside a's index (first listed slowest)
  std::vector<int> adig(sites.size());
  {
    int acc = 1;
    for (int t = static_cast<int>(sites.size()) - 1; t >= 0; --t) {
      adig[t] = acc;
      acc *= L.dims[sites[t]];
    }
  }

  Mat<S> out(L.total(), L.total());
  std::vector<int> rdig(rest.size());
  for (int r = 0; r < drest; ++r) {
    int rr = r, base = 0;
    for (size_t t = 0; t < rest.size(); ++t) {
      int dim = L.dims[rest[t]];
      int block = 1;
      for (size_t tt = t + 1; tt < rest.size(); ++tt) block *= L.dims[rest[tt]];
      int digit = (rr / block) % dim;
      base += digit * stride[rest[t]];
      rr %= block;
    }
    for (int ar = 0; ar < da; ++ar) {
      int gr = base;
      for (size_t t = 0; t < sites.size(); ++t) gr += ((ar / adig[t]) % L.dims[sites[t]]) * stride[sites[t]];
      for (int ac = 0; ac < da; ++ac) {
        const S& x = a(ar, ac);
        if (value_of(x) == Cplx{0.0, 0.0} && deriv_of(x) == Cplx{0.0, 0.0}) continue;
        int gc = base;
        for (size_t t = 0; t < sites.size(); ++t) gc += ((ac / adig[t]) % L.dims[sites[t]]) * stride[sites[t]];
        out(gr, gc) = x;
      }
    }
  }
  return out;
}

template <class S>
Mat<S> partial_trace(const Mat<S>& m, const SpaceLayout& L, int factor) {
  const int n = L.total();
  if (m.rows() != n || m.cols() != n) throw std::invalid_argument("partial_trace: dimension mismatch");
  if (factor < 0 || factor >= L.factors()) throw std::out_of_range("partial_trace: factor out of range");
  const auto stride = detail::strides_of(L);
  const int df = L.dims[factor], sf = stride[factor];
  const int nout = n / df;

  // enumerate reduced indices as (outer, inner) around the traced factor
  const int inner = sf;
  const int outer = nout / inner;
  Mat<S> out(nout, nout);
  for (int ro = 0; ro < outer; ++ro)
    for (int ri = 0; ri < inner; ++ri) {
      const int rbase = ro * df * sf + ri;
      for (int co = 0; co < outer; ++co)
        for (int ci = 0; ci < inner; ++ci) {
          const int cbase = co * df * sf + ci;
          S acc{};
          for (int t = 0; t < df; ++t) acc += m(rbase + t * sf, cbase + t * sf);
          out(ro * inner + ri, co * inner + ci) = acc;
        }
    }
  return out;
}

template <class S>
Mat<S> partial_transpose(const Mat<S>& m, const SpaceLayout& L, int factor) {
  const int n = L.total();
  if (m.rows() != n || m.cols() != n) throw std::invalid_argument("partial_transpose: dimension mismatch");
  if (factor < 0 || factor >= L.factors()) throw std::out_of_range("partial_transpose: factor out of range");
  const auto stride = detail::strides_of(L);
  const int df = L.dims[factor], sf = stride[factor];
  Mat<S> out(n, n);
  for (int r = 0; r < n; ++r) {
    const int rdig = (r / sf) % df;
    const int rrest = r - rdig * sf;
    for (int c = 0; c < n; ++c) {
      const int cdig = (c / sf) % df;
      const int crest = c - cdig * sf;
      out(rrest + cdig * sf, crest + rdig * sf) = m(r, c);
    }
  }
  return out;
}

inline double max_abs(const CMat& m) {
  double v = 0.0;
  for (const auto& x : m.data()) v = std::max(v, std::abs(x));
  return v;
}

inline double fro_norm(const CMat& m) {
  double v = 0.0;
  for (const auto& x : m.data()) v += std::norm(x);
  return std::sqrt(v);
}

// Max-entry residual of A-B relative to the largest entry of either operand.
inline double rel_residual(const CMat& a, const CMat& b) {
  double scale = std::max({max_abs(a), max_abs(b), 1e-300});
  return max_abs(a - b) / scale;
}

inline CMat value_of(const DMat& m) {
  CMat out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).v;
  return out;
}

inline CMat deriv_of(const DMat& m) {
  CMat out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).d;
  return out;
}

template <class S>
Mat<S> to_scalar(const CMat& m) {
  Mat<S> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = S(m(i, j));
  return out;
}

}  // namespace d23
