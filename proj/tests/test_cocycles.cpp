#include <random>

#include "doctest.h"
#include "lauricella/cocycles.hpp"

using namespace lauricella;
using namespace lauricella::parameters;
using namespace lauricella::cocycles;

namespace {

struct Setup {
  ParameterVector pv;
  IndexClassification cls;
  PointConfiguration cfg;
  FramePair fr;
};

Setup make(const std::vector<Rational>& alpha, std::vector<double> x = {}) {
  Setup s{ParameterVector::from_alpha_exact(alpha), {}, {}, {}};
  s.cls = classify(s.pv);
  s.cfg = x.empty() ? aligned_configuration(s.cls) : configuration_from_points(s.cls, x);
  s.fr = frame(s.pv, s.cls, s.cfg);
  return s;
}

Matrix duality_matrix(const Setup& s) {
  int m = s.pv.m;
  Matrix C(m + 1, m + 1);
  for (int i = 1; i <= m + 1; ++i)
    for (int j = 1; j <= m + 1; ++j)
      C(i - 1, j - 1) = residue_pairing(s.fr.phi[i], s.fr.psi[j], s.pv, s.cls, s.cfg);
  return C;
}

}  // namespace

TEST_CASE("laurent expansion round trip") {
  auto s = make({Rational(-1, 3), Rational(-1, 5), Rational(-1, 4), Rational(1, 2),
                 Rational(1, 3) + Rational(1, 5) + Rational(1, 4) - Rational(1, 2)});
  RationalOneForm f;
  f.add_pole(1, 2, {2.0, 1.0});
  f.add_pole(2, 1, {-1.0, 0.0});
  f.add_poly(1, {0.5, 0.0});
  auto L = laurent(f, 1, s.cfg, 14);
  // compare against direct evaluation near x_1
  Complex t = Complex(s.cfg.x[1], 0.0) + Complex(0.01, 0.007);
  Complex v{0.0, 0.0};
  Complex sloc = t - s.cfg.x[1];
  for (int k = L.k0; k <= L.kmax(); ++k) v += L.at(k) * std::pow(sloc, k);
  CHECK(std::abs(v - f.eval(t, s.cfg)) < 1e-12 * std::abs(f.eval(t, s.cfg)));

  // at infinity: ds-coefficients, compare f(t) dt = g(s) ds with t = 1/s
  auto Li = laurent(f, 4, s.cfg, 8);
  Complex sp{0.02, 0.013};
  Complex ti = 1.0 / sp;
  Complex g{0.0, 0.0};
  for (int k = Li.k0; k <= Li.kmax(); ++k) g += Li.at(k) * std::pow(sp, k);
  CHECK(std::abs(g - f.eval(ti, s.cfg) * (-1.0 / (sp * sp))) < 1e-9);
}

TEST_CASE("generic frame duality") {
  auto s = make({Rational(-1, 3), Rational(-1, 5), Rational(-1, 4), Rational(1, 2),
                 Rational(1, 3) + Rational(1, 5) + Rational(1, 4) - Rational(1, 2)});
  Matrix C = duality_matrix(s);
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) {
      Complex want = (i == j) ? two_pi_i : Complex{0.0, 0.0};
      CHECK(std::abs(C(i, j) - want) < 1e-12);
    }
}

TEST_CASE("duality with vanishing middle exponent uses the bump form") {
  auto s = make({Rational(-1, 2), Rational(0), Rational(-1, 4), Rational(1, 2), Rational(1, 4)});
  CHECK(s.cls.in_N0(1));
  Matrix C = duality_matrix(s);
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) {
      Complex want = (i == j) ? two_pi_i : Complex{0.0, 0.0};
      CHECK(std::abs(C(i, j) - want) < 1e-11);
    }
}

TEST_CASE("duality in the fully integral stratum") {
  auto s = make({Rational(0), Rational(0), Rational(0), Rational(1), Rational(-1)});
  Matrix C = duality_matrix(s);
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) {
      Complex want = (i == j) ? two_pi_i : Complex{0.0, 0.0};
      CHECK(std::abs(C(i, j) - want) < 1e-11);
    }
}

TEST_CASE("duality with both tail exponents zero") {
  auto s = make({Rational(0), Rational(0), Rational(0), Rational(0), Rational(0)});
  Matrix C = duality_matrix(s);
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) {
      Complex want = (i == j) ? two_pi_i : Complex{0.0, 0.0};
      CHECK(std::abs(C(i, j) - want) < 1e-11);
    }
}

TEST_CASE("extra row and column of the duality table") {
  auto s = make({Rational(-1, 3), Rational(-1, 5), Rational(-1, 4), Rational(1, 2),
                 Rational(1, 3) + Rational(1, 5) + Rational(1, 4) - Rational(1, 2)});
  int m = s.pv.m;
  for (int j = 1; j <= m; ++j) {
    Complex v = residue_pairing(s.fr.phi[0], s.fr.psi[j], s.pv, s.cls, s.cfg);
    CHECK(std::abs(v + two_pi_i) < 1e-12);
  }
  Complex v = residue_pairing(s.fr.phi[0], s.fr.psi[m + 1], s.pv, s.cls, s.cfg);
  CHECK(std::abs(v + two_pi_i * s.pv[m + 1].value) < 1e-12);
  for (int i = 1; i <= m; ++i) {
    Complex w = residue_pairing(s.fr.phi[i], s.fr.psi[m + 2], s.pv, s.cls, s.cfg);
    CHECK(std::abs(w + two_pi_i * s.pv[i].value) < 1e-12);
  }
  Complex w = residue_pairing(s.fr.phi[m + 1], s.fr.psi[m + 2], s.pv, s.cls, s.cfg);
  CHECK(std::abs(w + two_pi_i) < 1e-12);
}

TEST_CASE("worked example: trivial exponents, dual pairing matrix") {
  auto s = make({Rational(0), Rational(0), Rational(0), Rational(0), Rational(0)}, {0.3, 0.6});
  double x1 = 0.3, x2 = 0.6;
  // cocycle bases of the worked example
  RationalOneForm phi0;
  phi0.add_pole(3, 1, {1.0, 0.0});
  RationalOneForm dt;  // nabla(t) = dt since omega = 0
  dt.add_poly(0, {1.0, 0.0});
  RationalOneForm tdt;
  tdt.add_poly(1, {2.0, 0.0});  // nabla(t^2) = 2t dt
  std::vector<RationalOneForm> phis{phi0, dt, tdt};
  // dual side: (d(-1/t), dt/(t(t-x1)), dt/(t(t-x2)))
  RationalOneForm psi1;
  psi1.add_pole(0, 2, {1.0, 0.0});
  RationalOneForm psi2;  // 1/(t(t-x1)) = (1/x1)(1/(t-x1) - 1/t)
  psi2.add_pole(1, 1, {1.0 / x1, 0.0});
  psi2.add_pole(0, 1, {-1.0 / x1, 0.0});
  RationalOneForm psi3;
  psi3.add_pole(2, 1, {1.0 / x2, 0.0});
  psi3.add_pole(0, 1, {-1.0 / x2, 0.0});
  std::vector<RationalOneForm> psis{psi1, psi2, psi3};

  Matrix C(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      C(i, j) = residue_pairing(phis[i], psis[j], s.pv, s.cls, s.cfg);
  Matrix want(3, 3);
  want << 1, 0, 0, 0, 1, 1, 0, x1, x2;
  want *= -two_pi_i;
  CHECK((C - want).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("worked example: resolvent exponents at 1 and infinity") {
  auto s = make({Rational(0), Rational(0), Rational(0), Rational(1), Rational(-1)}, {0.3, 0.6});
  double x1 = 0.3, x2 = 0.6;
  // u = t-1; cocycles (phi0, nabla(t-1), nabla((t-1)^2))
  RationalOneForm phi0;
  phi0.add_pole(3, 1, {1.0, 0.0});
  // nabla(f) = f' dt + f dt/(t-1)
  RationalOneForm c1;  // nabla(t-1) = dt + dt = 2 dt
  c1.add_poly(0, {2.0, 0.0});
  RationalOneForm c2;  // nabla((t-1)^2) = 2(t-1)dt + (t-1)dt = 3(t-1) dt
  c2.add_poly(1, {3.0, 0.0});
  c2.add_poly(0, {-3.0, 0.0});
  std::vector<RationalOneForm> phis{phi0, c1, c2};
  RationalOneForm psi1;
  psi1.add_pole(0, 1, {1.0, 0.0});
  RationalOneForm psi2;
  psi2.add_pole(1, 1, {1.0, 0.0});
  RationalOneForm psi3;
  psi3.add_pole(2, 1, {1.0, 0.0});
  std::vector<RationalOneForm> psis{psi1, psi2, psi3};

  Matrix C(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      C(i, j) = residue_pairing(phis[i], psis[j], s.pv, s.cls, s.cfg);
  Matrix want(3, 3);
  want << 1, 1, 1, -1, x1 - 1, x2 - 1, 1, (x1 - 1) * (x1 - 1), (x2 - 1) * (x2 - 1);
  want *= -two_pi_i;
  CHECK((C - want).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("local solve boundary values") {
  auto s = make({Rational(-1, 3), Rational(-1, 5), Rational(-1, 4), Rational(1, 2),
                 Rational(1, 3) + Rational(1, 5) + Rational(1, 4) - Rational(1, 2)});
  // f_i = 1 + O(t-x_i) for phi_{i,m+2}, 1 <= i <= m
  for (int i = 1; i <= 2; ++i) {
    auto f = local_series_solve(s.fr.phi[i], i, false, s.pv, s.cfg, 4);
    CHECK(std::abs(f.at(0) - Complex{1.0, 0.0}) < 1e-12);
  }
  auto fm1 = local_series_solve(s.fr.phi[3], 3, false, s.pv, s.cfg, 4);
  CHECK(std::abs(fm1.at(0) - 1.0 / s.pv[3].value) < 1e-12);
  // g_i = -1/alpha_i + O for psi_{0,i}
  for (int i = 1; i <= 2; ++i) {
    auto g = local_series_solve(s.fr.psi[i], i, true, s.pv, s.cfg, 4);
    CHECK(std::abs(g.at(0) + 1.0 / s.pv[i].value) < 1e-12);
  }
  auto gm1 = local_series_solve(s.fr.psi[3], 3, true, s.pv, s.cfg, 4);
  CHECK(std::abs(gm1.at(0) + Complex{1.0, 0.0}) < 1e-12);
}

TEST_CASE("cohomology relations of the frames") {
  auto s = make({Rational(-2, 3), Rational(-1, 5), Rational(-1, 4), Rational(1, 2),
                 Rational(2, 3) + Rational(1, 5) + Rational(1, 4) - Rational(1, 2)});
  int m = s.pv.m;
  // phi_0 + sum_i phi_i + alpha_{m+1} phi_{m+1} pairs to zero with every psi
  for (int j = 1; j <= m + 2; ++j) {
    Complex acc = residue_pairing(s.fr.phi[0], s.fr.psi[j], s.pv, s.cls, s.cfg);
    for (int i = 1; i <= m; ++i)
      acc += residue_pairing(s.fr.phi[i], s.fr.psi[j], s.pv, s.cls, s.cfg);
    acc += s.pv[m + 1].value *
           residue_pairing(s.fr.phi[m + 1], s.fr.psi[j], s.pv, s.cls, s.cfg);
    CHECK(std::abs(acc) < 1e-11);
  }
  // sum_i alpha_i psi_i + psi_{m+1} + psi_{m+2} pairs to zero with every phi
  for (int i = 0; i <= m + 1; ++i) {
    Complex acc{0.0, 0.0};
    for (int j = 1; j <= m; ++j)
      acc += s.pv[j].value * residue_pairing(s.fr.phi[i], s.fr.psi[j], s.pv, s.cls, s.cfg);
    acc += residue_pairing(s.fr.phi[i], s.fr.psi[m + 1], s.pv, s.cls, s.cfg);
    acc += residue_pairing(s.fr.phi[i], s.fr.psi[m + 2], s.pv, s.cls, s.cfg);
    CHECK(std::abs(acc) < 1e-11);
  }
}

TEST_CASE("rank-one factor invariants") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> U(-1.5, 1.5);
  for (int m : {1, 2, 3}) {
    std::vector<Complex> alpha(m + 3);
    Complex sum{0.0, 0.0};
    for (int i = 0; i + 1 < m + 3; ++i) {
      alpha[i] = {U(rng), 0.0};
      sum += alpha[i];
    }
    alpha[m + 2] = -sum;
    auto pv = ParameterVector::from_alpha(alpha);
    for (int i = 0; i <= m + 1; ++i)
      for (int j = i + 1; j <= m + 1; ++j) {
        RowVector v;
        Vector w;
        eigen_cocycles(pv, i, j, v, w);
        Complex dot = (v * w)(0);
        CHECK(std::abs(dot + alpha[i] + alpha[j]) < 1e-12);
        Matrix R = -(w * v);
        CHECK(std::abs(R.trace() - alpha[i] - alpha[j]) < 1e-12);
      }
  }
}
