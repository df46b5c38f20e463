#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "intertwine/cfun.hpp"

using namespace itw;
using Catch::Approx;

namespace {

// Seeded generic parameter with Re(nu) deep inside the chamber.
SpectralParameter generic_nu(const RootSystem& rs, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const Eigen::VectorXd rho_vec = to_eigen(rho(rs));
  SpectralParameter nu;
  nu.re = 3.0 * rho_vec;
  nu.im = Eigen::VectorXd::Zero(rs.ambient_dim);
  for (int i = 0; i < rs.ambient_dim; ++i) {
    nu.re[i] += 0.2 * u(rng);
    nu.im[i] = 2.0 * u(rng);
  }
  return nu;
}

}  // namespace

TEST_CASE("c_factor examples") {
  SECTION("p=1, q=0, nu_b = 1 gives 1") {
    const auto v = c_factor_value(1, 0, Complex(1, 0));
    REQUIRE(v.is_finite());
    CHECK(std::abs(v.value - 1.0) < 1e-12);
  }
  SECTION("pole at nu_b = 0") {
    CHECK(c_factor_value(1, 0, Complex(0, 0)).kind == SymKind::Pole);
  }
  SECTION("p=2, q=0, nu_b = 2 gives 1") {
    const auto v = c_factor_value(2, 0, Complex(2, 0));
    REQUIRE(v.is_finite());
    CHECK(std::abs(v.value - 1.0) < 1e-12);
  }
  SECTION("p=0 rejected") {
    CHECK_THROWS_AS(c_factor_value(0, 0, Complex(1, 0)), std::invalid_argument);
  }
}

TEST_CASE("r_function basic values") {
  const auto a1 = build_root_system('A', 1);
  const auto group = weyl_group(a1);
  const auto& s = group[1];

  SECTION("identity gives the empty product") {
    const auto v = r_function(a1, group[0], SpectralParameter::zero(2));
    REQUIRE(v.value.is_finite());
    CHECK(v.value.value == Complex(1, 0));
    CHECK(v.factors.empty());
  }
  SECTION("A_1 split: nu = (z/2) alpha gives Gamma(z/2) / (sqrt(pi) Gamma((z+1)/2))") {
    for (double z : {0.7, 1.0, 2.5, 4.0}) {
      SpectralParameter nu =
          SpectralParameter::real(0.5 * z * to_eigen(a1.root(a1.positive[0])));
      const auto v = r_function(a1, s, nu);
      REQUIRE(v.value.is_finite());
      const Complex expect = gamma_fn(Complex(z / 2, 0)) /
                             (std::sqrt(kPi) * gamma_fn(Complex((z + 1) / 2, 0)));
      CHECK(std::abs(v.value.value - expect) < 1e-12 * std::abs(expect));
    }
  }
  SECTION("A_2 longest element at rho is finite nonzero") {
    const auto a2 = build_root_system('A', 2);
    const auto g2 = weyl_group(a2);
    const WeylElement* longest = &g2[0];
    for (const auto& w : g2)
      if (w.length() > longest->length()) longest = &w;
    const auto v = r_function(a2, *longest, SpectralParameter::real(to_eigen(rho(a2))));
    REQUIRE(v.value.is_finite());
    CHECK(v.factors.size() == 3);
    CHECK(std::abs(v.value.value) > 0.0);
    for (const auto& f : v.factors) CHECK(f.value.is_finite());
  }
}

TEST_CASE("cocycle identity at seeded generic parameters") {
  std::mt19937_64 rng(20240817);
  for (auto [type, rank] : {std::pair<char, int>{'A', 2}, {'B', 2}}) {
    const auto rs = build_root_system(type, rank);
    const auto group = weyl_group(rs);
    std::map<RatMat, int> index;
    for (size_t i = 0; i < group.size(); ++i) index[group[i].matrix] = static_cast<int>(i);

    for (int trial = 0; trial < 5; ++trial) {
      const auto nu = generic_nu(rs, rng);
      for (const auto& w1 : group)
        for (const auto& w2 : group) {
          const auto& w12 = group[static_cast<size_t>(index.at(mat_mul(w1.matrix, w2.matrix)))];
          if (w12.length() != w1.length() + w2.length()) continue;
          const auto lhs = r_function(rs, w12, nu);
          const auto rhs1 = r_function(rs, w1, weyl_apply(w2, nu));
          const auto rhs2 = r_function(rs, w2, nu);
          REQUIRE(lhs.value.is_finite());
          REQUIRE(rhs1.value.is_finite());
          REQUIRE(rhs2.value.is_finite());
          const Complex rhs = rhs1.value.value * rhs2.value.value;
          CHECK(std::abs(lhs.value.value - rhs) <= 1e-10 * std::abs(rhs));
        }
    }
  }
}

TEST_CASE("r depends on nu only through pairings with Phi_w") {
  // Perturbing nu orthogonally to span(Phi_w) leaves r unchanged.
  const auto a2 = build_root_system('A', 2);
  const auto s1 = weyl_from_word(a2, {0});  // Phi = {alpha_1}
  std::mt19937_64 rng(7);
  const auto nu = generic_nu(a2, rng);
  const auto base = r_function(a2, s1, nu);
  REQUIRE(base.value.is_finite());

  // alpha_1 = e_1 - e_2; (1,1,0) and (0,0,1) are orthogonal to it.
  for (auto dir : {std::array<double, 3>{1, 1, 0}, {0, 0, 1}}) {
    SpectralParameter shifted = nu;
    for (int i = 0; i < 3; ++i) {
      shifted.re[i] += 0.7 * dir[static_cast<size_t>(i)];
      shifted.im[i] += 1.3 * dir[static_cast<size_t>(i)];
    }
    const auto v = r_function(a2, s1, shifted);
    REQUIRE(v.value.is_finite());
    CHECK(std::abs(v.value.value - base.value.value) < 1e-11 * std::abs(base.value.value));
  }
}

TEST_CASE("verify_no_zeros_poles") {
  const auto a1 = build_root_system('A', 1);
  const auto s = weyl_group(a1)[1];
  const Eigen::VectorXd alpha = to_eigen(a1.root(a1.positive[0]));

  SECTION("clean sweep on the interior ray") {
    std::vector<SpectralParameter> grid;
    for (double z = 0.1; z <= 5.0; z += 0.1)
      grid.push_back(SpectralParameter::real(0.5 * z * alpha));
    const auto rep = verify_no_zeros_poles(a1, s, grid);
    CHECK(rep.clean());
    CHECK(rep.points == static_cast<int>(grid.size()));
  }
  SECTION("A_2 longest element along the rho ray") {
    const auto a2 = build_root_system('A', 2);
    const auto g2 = weyl_group(a2);
    const WeylElement* longest = &g2[0];
    for (const auto& w : g2)
      if (w.length() > longest->length()) longest = &w;
    std::vector<SpectralParameter> grid;
    for (double t = 0.2; t <= 4.0; t += 0.2)
      grid.push_back(SpectralParameter::real(t * to_eigen(rho(a2))));
    CHECK(verify_no_zeros_poles(a2, *longest, grid).clean());
  }
  SECTION("out-of-domain point is reported with its factor") {
    const auto rep = verify_no_zeros_poles(a1, s, {SpectralParameter::zero(2)});
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].kind == SymKind::Pole);
    CHECK(rep.violations[0].factor_index == 0);
  }
}

TEST_CASE("SL2 consistency via the duplication identity") {
  // Gamma(z/2)/(sqrt(pi) Gamma((z+1)/2)) == 2^{1-z} Gamma(z)/Gamma((z+1)/2)^2
  for (double re : {0.3, 0.9, 1.7, 3.2}) {
    for (double im : {-20.0, -1.0, 0.0, 0.5, 8.0}) {
      const Complex z(re, im);
      const Complex lhs = gamma_fn(z / 2.0) / (std::sqrt(kPi) * gamma_fn((z + 1.0) / 2.0));
      const Complex rhs =
          std::pow(Complex(2, 0), 1.0 - z) * gamma_fn(z) / std::pow(gamma_fn((z + 1.0) / 2.0), 2);
      CHECK(std::abs(lhs - rhs) <= 1e-11 * std::abs(rhs));
    }
  }
}
