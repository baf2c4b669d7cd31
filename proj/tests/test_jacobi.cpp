#include <doctest.h>

#include "latticesum/jacobi.hpp"

#include <Eigen/Eigenvalues>

#include <random>

using namespace latticesum;

TEST_CASE("two by two") {
  Eigen::Matrix2d m;
  m << 3.0, 0.5, 0.5, 3.0;
  const Eigen::VectorXd e = symmetric_eigen(m);
  CHECK(e(0) == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(e(1) == doctest::Approx(3.5).epsilon(1e-15));

  m << 3.0, -0.5, -0.5, 3.0;
  CHECK(symmetric_eigen(m)(0) == doctest::Approx(2.5).epsilon(1e-15));
}

TEST_CASE("identity and diagonal input") {
  const Eigen::VectorXd e = symmetric_eigen(Eigen::Matrix3d::Identity());
  CHECK(e == Eigen::Vector3d::Ones());
  Eigen::Matrix3d d = Eigen::Vector3d(3, -1, 2).asDiagonal();
  CHECK(symmetric_eigen(d) == Eigen::Vector3d(-1, 2, 3));
}

TEST_CASE("random symmetric matrices") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> dist;
  for (int n : {2, 5, 8, 16, 64}) {
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = dist(rng);

    const Eigen::VectorXd e = symmetric_eigen(m);
    CHECK(std::abs(e.sum() - m.trace()) <= 1e-10 * std::max(1.0, m.norm()));
    CHECK(std::abs(e.squaredNorm() - m.squaredNorm()) <= 1e-10 * m.squaredNorm());
    for (int i = 1; i < n; ++i) CHECK(e(i - 1) <= e(i));

    // Independent check against Eigen's tridiagonal QR solver.
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(m, Eigen::EigenvaluesOnly);
    CHECK((ref.eigenvalues() - e).cwiseAbs().maxCoeff() <= 1e-11 * m.norm());
  }
}

TEST_CASE("float scalar") {
  Eigen::Matrix2f m;
  m << 1.0f, 2.0f, 2.0f, 1.0f;
  const Eigen::VectorXf e = symmetric_eigen(m);
  CHECK(e(0) == doctest::Approx(-1.0f));
  CHECK(e(1) == doctest::Approx(3.0f));
}

TEST_CASE("degenerate spectrum") {
  Eigen::Matrix3d m;
  m << 2, 1, 1, 1, 2, 1, 1, 1, 2;
  const Eigen::VectorXd e = symmetric_eigen(m);
  CHECK(e(0) == doctest::Approx(1.0));
  CHECK(e(1) == doctest::Approx(1.0));
  CHECK(e(2) == doctest::Approx(4.0));
}

TEST_CASE("invalid input") {
  Eigen::Matrix2d asym;
  asym << 1, 2, 3, 4;
  CHECK_THROWS_AS(symmetric_eigen(asym), std::domain_error);
  CHECK_THROWS_AS(symmetric_eigen(Eigen::MatrixXd::Identity(65, 65)), std::domain_error);
  CHECK_THROWS_AS(symmetric_eigen(Eigen::MatrixXd::Zero(2, 3)), std::domain_error);
}
