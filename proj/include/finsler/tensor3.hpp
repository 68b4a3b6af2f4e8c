#pragma once

#include <Eigen/Core>

namespace finsler {

/// Dense rank-3 tensor of size n x n x n, stored flat. Small n (2..6);
/// everything is O(n^3) loops over Eigen-backed storage.
template <class Scalar = double>
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int n) : n_(n), data_(Eigen::VectorX<Scalar>::Zero(n * n * n)) {}

  int dim() const { return n_; }
  void setZero() { data_.setZero(); }

  Scalar& operator()(int i, int j, int k) { return data_[(i * n_ + j) * n_ + k]; }
  const Scalar& operator()(int i, int j, int k) const {
    return data_[(i * n_ + j) * n_ + k];
  }

  /// Matrix slice over the last two indices for fixed first index.
  Eigen::MatrixX<Scalar> slice_first(int i) const {
    Eigen::MatrixX<Scalar> m(n_, n_);
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k) m(j, k) = (*this)(i, j, k);
    return m;
  }

  Scalar max_abs() const { return data_.cwiseAbs().maxCoeff(); }

  Tensor3& operator+=(const Tensor3& o) { data_ += o.data_; return *this; }
  Tensor3& operator-=(const Tensor3& o) { data_ -= o.data_; return *this; }
  Tensor3& operator*=(Scalar s) { data_ *= s; return *this; }

  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator*(Scalar s, Tensor3 a) { return a *= s; }

 private:
  int n_ = 0;
  Eigen::VectorX<Scalar> data_;
};

using Tensor3d = Tensor3<double>;

/// T(i,j,k) v^k over the last index.
template <class Scalar>
Eigen::MatrixX<Scalar> contract_last(const Tensor3<Scalar>& t,
                                     const Eigen::VectorX<Scalar>& v) {
  const int n = t.dim();
  Eigen::MatrixX<Scalar> m = Eigen::MatrixX<Scalar>::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) m(i, j) += t(i, j, k) * v[k];
  return m;
}

/// T(i,j,k) v^i over the first index.
template <class Scalar>
Eigen::MatrixX<Scalar> contract_first(const Tensor3<Scalar>& t,
                                      const Eigen::VectorX<Scalar>& v) {
  const int n = t.dim();
  Eigen::MatrixX<Scalar> m = Eigen::MatrixX<Scalar>::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) m(j, k) += t(i, j, k) * v[i];
  return m;
}

/// R(i,j,k) = A(i,m) T(m,j,k): raise/transform the first index.
template <class Scalar>
Tensor3<Scalar> transform_first(const Eigen::MatrixX<Scalar>& a,
                                const Tensor3<Scalar>& t) {
  const int n = t.dim();
  Tensor3<Scalar> r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Scalar s{};
        for (int m = 0; m < n; ++m) s += a(i, m) * t(m, j, k);
        r(i, j, k) = s;
      }
  return r;
}

template <class Scalar>
Scalar max_abs_diff(const Tensor3<Scalar>& a, const Tensor3<Scalar>& b) {
  return (a - b).max_abs();
}

}  // namespace finsler
