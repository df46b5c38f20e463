#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "intertwine/liegroup.hpp"
#include "intertwine/sl2.hpp"

using namespace itw;
using namespace itw::lie;
using Catch::Approx;

namespace {

Matrix random_sl(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    Matrix g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = gauss(rng);
    double d = g.determinant();
    if (std::abs(d) < 1e-3) continue;
    if (d < 0) {
      g.row(0) *= -1.0;
      d = -d;
    }
    g /= std::pow(d, 1.0 / n);
    return g;
  }
}

Matrix random_traceless(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix X(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) X(i, j) = gauss(rng);
  X -= (X.trace() / n) * Matrix::Identity(n, n);
  return X;
}

// Two-sample Kolmogorov-Smirnov statistic.
double ks_statistic(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j])
      ++i;
    else
      ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / a.size() -
                             static_cast<double>(j) / b.size()));
  }
  return d;
}

}  // namespace

TEST_CASE("iwasawa_nak") {
  SECTION("identity") {
    const auto f = iwasawa_nak(Matrix::Identity(3, 3));
    CHECK((f.n - Matrix::Identity(3, 3)).norm() < 1e-14);
    CHECK(f.a_log.norm() < 1e-14);
    CHECK((f.k - Matrix::Identity(3, 3)).norm() < 1e-14);
  }
  SECTION("diagonal input is already in A") {
    Matrix a = Matrix::Zero(2, 2);
    a(0, 0) = 2.0;
    a(1, 1) = 0.5;
    const auto f = iwasawa_nak(a);
    CHECK(f.a_log[0] == Approx(std::log(2.0)).margin(1e-14));
    CHECK(f.a_log[1] == Approx(-std::log(2.0)).margin(1e-14));
    CHECK((f.n - Matrix::Identity(2, 2)).norm() < 1e-14);
    CHECK((f.k - Matrix::Identity(2, 2)).norm() < 1e-14);
  }
  SECTION("round trip on seeded random SL_n, n = 2..6") {
    std::mt19937_64 rng(424242);
    for (int n = 2; n <= 6; ++n) {
      for (int trial = 0; trial < 50; ++trial) {
        const Matrix g = random_sl(n, rng);
        const auto f = iwasawa_nak(g);
        CAPTURE(n, trial);
        CHECK((f.reconstruct() - g).lpNorm<Eigen::Infinity>() <=
              1e-12 * std::max(1.0, g.lpNorm<Eigen::Infinity>()));
        CHECK(std::abs(f.a_log.sum()) < 1e-12);
        CHECK((f.k * f.k.transpose() - Matrix::Identity(n, n)).lpNorm<Eigen::Infinity>() < 1e-12);
        CHECK(f.k.determinant() == Approx(1.0).margin(1e-10));
        // n unit upper triangular
        for (int i = 0; i < n; ++i) {
          CHECK(f.n(i, i) == Approx(1.0).margin(1e-12));
          for (int j = 0; j < i; ++j) CHECK(f.n(i, j) == Approx(0.0).margin(1e-13));
        }
      }
    }
  }
  SECTION("rejects non-unimodular input") {
    CHECK_THROWS_AS(iwasawa_nak(2.0 * Matrix::Identity(3, 3)), std::invalid_argument);
  }
}

TEST_CASE("lie_iwasawa") {
  SECTION("diagonal goes to a, antisymmetric to k") {
    Matrix d = Matrix::Zero(3, 3);
    d(0, 0) = 1;
    d(1, 1) = -2;
    d(2, 2) = 1;
    auto t = lie_iwasawa(d);
    CHECK((t.Xa - d).norm() < 1e-15);
    CHECK(t.Xn.norm() < 1e-15);
    CHECK(t.Xk.norm() < 1e-15);

    Matrix w = Matrix::Zero(3, 3);
    w(0, 1) = 1;
    w(1, 0) = -1;
    t = lie_iwasawa(w);
    CHECK((t.Xk - w).norm() < 1e-15);
    CHECK(t.Xa.norm() < 1e-15);
    CHECK(t.Xn.norm() < 1e-15);
  }
  SECTION("elementary lower entry: components sum back exactly") {
    Matrix e21 = Matrix::Zero(3, 3);
    e21(1, 0) = 1;
    const auto t = lie_iwasawa(e21);
    CHECK((t.Xn + t.Xa + t.Xk - e21).norm() == 0.0);
    CHECK(t.Xn(0, 1) == Approx(1.0));  // strict-upper correction 2U with U = E12/2
  }
  SECTION("linearity and shape invariants on random input") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
      const Matrix X = random_traceless(4, rng);
      const Matrix Y = random_traceless(4, rng);
      const auto tx = lie_iwasawa(X), ty = lie_iwasawa(Y);
      const auto txy = lie_iwasawa(2.0 * X - 3.0 * Y);
      CHECK((txy.Xn - (2.0 * tx.Xn - 3.0 * ty.Xn)).norm() < 1e-12);
      CHECK((txy.Xa - (2.0 * tx.Xa - 3.0 * ty.Xa)).norm() < 1e-12);
      CHECK((txy.Xk - (2.0 * tx.Xk - 3.0 * ty.Xk)).norm() < 1e-12);
      CHECK((tx.Xn + tx.Xa + tx.Xk - X).norm() < 1e-14);
      CHECK((tx.Xk + tx.Xk.transpose()).norm() < 1e-14);
    }
  }
}

TEST_CASE("p_X_general") {
  SECTION("k = identity pairs the diagonal part") {
    Matrix X = Matrix::Zero(2, 2);
    X << 0.5, 2.0, 1.0, -0.5;
    Vector nu(2);
    nu << 1.5, -1.5;
    CHECK(p_X_general(X, Matrix::Identity(2, 2), nu) == Approx(0.5 * 1.5 + (-0.5) * (-1.5)));
  }
  SECTION("zero parameter kills everything") {
    std::mt19937_64 rng(3);
    const Matrix X = random_traceless(3, rng);
    const Matrix k = haar_sample_k(3, rng);
    CHECK(p_X_general(X, k, Vector::Zero(3)) == Approx(0.0).margin(1e-15));
  }
  SECTION("cross-module agreement with the sl2 compact picture") {
    // sl2's p_X uses the scalar identification rho = 1; in diagonal
    // coordinates that parameter is tau * (1/2, -1/2).
    std::mt19937_64 rng(2718);
    std::uniform_real_distribution<double> uphi(0.0, 2 * kPi), ut(-3.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
      const double phi = uphi(rng), tau = ut(rng);
      const Matrix X = random_traceless(2, rng);
      Vector nu(2);
      nu << tau / 2, -tau / 2;
      const sl2::Mat2 X2 = X;
      const double lhs = sl2::p_X(X2, phi, tau);
      const double rhs = p_X_general(X, sl2::rotation(phi), nu);
      CHECK(lhs == Approx(rhs).margin(1e-12));
    }
  }
  SECTION("left M1-invariance under block rotations") {
    // nu~ = diag(a, a, b) is centralized by SO(2) x {1} block rotations.
    std::mt19937_64 rng(5150);
    Vector nu(3);
    nu << 1.0, 1.0, -2.0;
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix k = haar_sample_k(3, rng);
      const Matrix X = random_traceless(3, rng);
      const double theta = 0.1 + 0.25 * trial;
      Matrix m = Matrix::Identity(3, 3);
      m(0, 0) = std::cos(theta);
      m(0, 1) = std::sin(theta);
      m(1, 0) = -std::sin(theta);
      m(1, 1) = std::cos(theta);
      CHECK(p_X_general(X, m * k, nu) == Approx(p_X_general(X, k, nu)).margin(1e-10));
    }
  }
}

TEST_CASE("haar_sample_k") {
  SECTION("constructed properties") {
    std::mt19937_64 rng(1);
    for (int n : {2, 3, 5}) {
      const Matrix k = haar_sample_k(n, rng);
      CHECK((k.transpose() * k - Matrix::Identity(n, n)).lpNorm<Eigen::Infinity>() < 1e-12);
      CHECK(k.determinant() == Approx(1.0).margin(1e-10));
    }
  }
  SECTION("entries have mean zero") {
    const int N = 100000;
    std::mt19937_64 rng(9001);
    Matrix mean = Matrix::Zero(3, 3);
    for (int i = 0; i < N; ++i) mean += haar_sample_k(3, rng);
    mean /= N;
    CHECK(mean.lpNorm<Eigen::Infinity>() <= 4.0 / std::sqrt(static_cast<double>(N)));
  }
  SECTION("left-invariance of the distribution (KS on an entry)") {
    const int N = 20000;
    std::mt19937_64 rng(77);
    const Matrix q = haar_sample_k(3, 123456u);  // fixed rotation
    std::vector<double> plain, rotated;
    for (int i = 0; i < N; ++i) {
      const Matrix k = haar_sample_k(3, rng);
      plain.push_back(k(0, 0));
      rotated.push_back((q * haar_sample_k(3, rng))(0, 0));
    }
    // two-sided threshold at roughly the 3-sigma level
    const double threshold = 1.82 * std::sqrt(2.0 / N);
    CHECK(ks_statistic(plain, rotated) < threshold);
  }
  SECTION("n = 1 rejected") {
    std::mt19937_64 rng(1);
    CHECK_THROWS_AS(haar_sample_k(1, rng), std::invalid_argument);
  }
}

TEST_CASE("group/algebra compatibility by finite differences") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3;
    const Matrix X = random_traceless(n, rng);
    const Matrix k = haar_sample_k(n, rng);
    const auto t = lie_iwasawa(k * X * k.transpose());

    const double h = 1e-6;
    const auto fp = iwasawa_nak((k * (h * X).exp()).eval());
    const auto fm = iwasawa_nak((k * (-h * X).exp()).eval());
    const Matrix dn = (fp.n - fm.n) / (2 * h);
    const Vector da = (fp.a_log - fm.a_log) / (2 * h);
    const Matrix dk = ((fp.k - fm.k) / (2 * h)) * k.transpose();

    CHECK((dn - t.Xn).lpNorm<Eigen::Infinity>() < 1e-6);
    CHECK((da - t.Xa.diagonal()).lpNorm<Eigen::Infinity>() < 1e-6);
    CHECK((dk - t.Xk).lpNorm<Eigen::Infinity>() < 1e-6);
  }
}

TEST_CASE("separation_sweep") {
  Vector nu2(2);
  nu2 << 1.0, -1.0;
  const auto rep2 = separation_sweep(2, nu2, 100, 8675309u);
  CHECK(rep2.pass());
  CHECK(rep2.pairs_tested + rep2.same_coset_skipped == 100);

  Vector nu3(3);
  nu3 << 2.0, 0.5, -2.5;  // regular
  const auto rep3 = separation_sweep(3, nu3, 100, 1234u);
  CHECK(rep3.pass());
  CHECK(rep3.pairs_tested == 100);  // Haar pairs are almost surely distinct cosets

  // nu~ = 0: M1 = K, every pair is the same coset, vacuous pass
  const auto rep0 = separation_sweep(3, Vector::Zero(3), 20, 5u);
  CHECK(rep0.pass());
  CHECK(rep0.pairs_tested == 0);
  CHECK(rep0.same_coset_skipped == 20);
}
