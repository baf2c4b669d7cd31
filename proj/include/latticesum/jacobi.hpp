#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace latticesum {

/// Largest matrix accepted by symmetric_eigen.
inline constexpr Eigen::Index kMaxJacobiSize = 64;

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, sorted
/// ascending. Sweeps continue until the off-diagonal Frobenius norm is below
/// 1e-12 of the matrix norm (or the diagonal stops changing at machine
/// precision). Throws std::domain_error if the input is not square, larger
/// than kMaxJacobiSize, or asymmetric beyond 1e-10 * max(1, ||M||).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> symmetric_eigen(
    const Eigen::MatrixBase<Derived>& matrix) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  if (matrix.rows() != matrix.cols()) throw std::domain_error("symmetric_eigen: matrix not square");
  if (matrix.rows() > kMaxJacobiSize) throw std::domain_error("symmetric_eigen: matrix too large");
  const Eigen::Index n = matrix.rows();
  Matrix a = matrix;
  const Scalar norm = a.norm();
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > Scalar(1e-10) * std::max(Scalar(1), norm))
    throw std::domain_error("symmetric_eigen: matrix not symmetric");
  a = Scalar(0.5) * (a + a.transpose()).eval();

  auto off_norm = [&a, n]() {
    Scalar s(0);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
    return std::sqrt(Scalar(2) * s);
  };

  const Scalar target = Scalar(1e-12) * norm;
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_norm() > target; ++sweep) {
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (apq == Scalar(0)) continue;
        // Rotation angle from theta = (a_qq - a_pp) / (2 a_pq), small root.
        const Scalar theta = (a(q, q) - a(p, p)) / (Scalar(2) * apq);
        const Scalar t = (theta >= 0 ? Scalar(1) : Scalar(-1)) /
                         (std::abs(theta) + std::sqrt(theta * theta + Scalar(1)));
        const Scalar c = Scalar(1) / std::sqrt(t * t + Scalar(1));
        const Scalar s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar akp = a(k, p);
          const Scalar akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar apk = a(p, k);
          const Scalar aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = Scalar(0);
        a(q, p) = Scalar(0);
      }
    }
  }

  Vector values = a.diagonal();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index(0));
  std::stable_sort(order.begin(), order.end(),
                   [&values](Eigen::Index i, Eigen::Index j) { return values(i) < values(j); });
  Vector sorted(n);
  for (Eigen::Index i = 0; i < n; ++i) sorted(i) = values(order[static_cast<std::size_t>(i)]);
  return sorted;
}

}  // namespace latticesum
