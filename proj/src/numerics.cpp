#include "lauricella/numerics.hpp"

#include "lauricella/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include <Eigen/Dense>

namespace lauricella::numerics {

using chains::ChainKind;
using chains::ElementaryChain;

namespace {

constexpr double pi = 3.14159265358979323846;
const Complex iu{0.0, 1.0};

// ---------------------------------------------------------------- gamma

const double lanczos_g = 7.0;
const double lanczos_c[9] = {0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
                             771.32342877765313,      -176.61502916214059,   12.507343278686905,
                             -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

}  // namespace

Complex gamma_fn(Complex z) {
  if (z.real() < 0.5) return pi / (std::sin(pi * z) * gamma_fn(1.0 - z));
  z -= 1.0;
  Complex s = lanczos_c[0];
  for (int k = 1; k < 9; ++k) s += lanczos_c[k] / (z + double(k));
  Complex t = z + lanczos_g + 0.5;
  return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * s;
}

// ---------------------------------------------------------------- series

Complex fd_series(Complex a, const std::vector<Complex>& b, Complex c,
                  const std::vector<Complex>& x, double tol) {
  const int m = int(b.size());
  if (int(x.size()) != m) throw input_error("fd_series: b and x sizes differ");
  for (const Complex& xi : x)
    if (std::abs(xi) >= 1.0) throw domain_error("fd_series needs |x_i| < 1");
  if (std::abs(c - std::round(c.real())) < 1e-14 && c.real() < 0.5)
    throw domain_error("fd_series needs c outside the non-positive integers");

  const int cap = 600;
  // Pochhammer tables (a,k), (c,k) and per-variable (b_i,k) x_i^k / k!
  std::vector<Complex> pa(cap + 1), pc(cap + 1);
  pa[0] = pc[0] = 1.0;
  for (int k = 0; k < cap; ++k) {
    pa[k + 1] = pa[k] * (a + double(k));
    pc[k + 1] = pc[k] * (c + double(k));
  }
  std::vector<std::vector<Complex>> w(m, std::vector<Complex>(cap + 1));
  for (int i = 0; i < m; ++i) {
    w[i][0] = 1.0;
    for (int k = 0; k < cap; ++k) w[i][k + 1] = w[i][k] * (b[i] + double(k)) * x[i] / double(k + 1);
  }

  Complex sum{0.0, 0.0};
  int quiet = 0;
  std::vector<int> n(m, 0);
  for (int N = 0; N <= cap; ++N) {
    Complex layer{0.0, 0.0};
    // enumerate n with |n| = N in lexicographic order
    std::fill(n.begin(), n.end(), 0);
    n[0] = N;
    while (true) {
      Complex term = pa[N] / pc[N];
      for (int i = 0; i < m; ++i) term *= w[i][n[i]];
      layer += term;
      // next composition
      int i = m - 2;
      while (i >= 0 && n[i] == 0) --i;
      if (i < 0) break;
      --n[i];
      int rest = 1 + n[m - 1];
      for (int k = i + 1; k < m; ++k) {
        if (k < m - 1) rest += n[k];
        n[k] = 0;
      }
      n[i + 1] = rest;
      if (m == 1) break;
    }
    sum += layer;
    if (std::abs(layer) < tol * (1.0 + std::abs(sum)))
      ++quiet;
    else
      quiet = 0;
    if (quiet >= 3) return sum;
    if (m == 1 && N == 0 && std::abs(layer) < tol) return sum;
  }
  throw domain_error("fd_series did not converge within the degree cap");
}

// ---------------------------------------------------------------- quadrature

namespace {

// 15-point Gauss-Legendre nodes/weights on [-1, 1]
const double gl_x[15] = {-0.9879925180204854, -0.9372733924007060, -0.8482065834104272,
                         -0.7244177313601701, -0.5709721726085388, -0.3941513470775634,
                         -0.2011940939974345, 0.0,                 0.2011940939974345,
                         0.3941513470775634,  0.5709721726085388,  0.7244177313601701,
                         0.8482065834104272,  0.9372733924007060,  0.9879925180204854};
const double gl_w[15] = {0.03075324199611727, 0.07036604748810812, 0.1071592204671719,
                         0.1395706779261543,  0.1662692058169939,  0.1861610000155622,
                         0.1984314853271116,  0.2025782419255613,  0.1984314853271116,
                         0.1861610000155622,  0.1662692058169939,  0.1395706779261543,
                         0.1071592204671719,  0.07036604748810812, 0.03075324199611727};

template <class F>
Complex gl15(F&& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  Complex s{0.0, 0.0};
  for (int k = 0; k < 15; ++k) s += gl_w[k] * f(c + h * gl_x[k]);
  return h * s;
}

constexpr int panel_budget = 60000;

template <class F>
void adapt(F&& f, double a, double b, double tol, int depth, Complex whole, QuadratureResult& out) {
  const double c = 0.5 * (a + b);
  const Complex left = gl15(f, a, c), right = gl15(f, c, b);
  const double diff = std::abs(left + right - whole);
  out.panels += 2;
  if (diff < tol || depth >= 40 || out.panels > panel_budget) {
    out.value += left + right;
    out.error_estimate += diff;
    return;
  }
  adapt(f, a, c, 0.5 * tol, depth + 1, left, out);
  adapt(f, c, b, 0.5 * tol, depth + 1, right, out);
}

template <class F>
void integrate_adaptive(F&& f, double a, double b, double tol, QuadratureResult& out) {
  adapt(f, a, b, tol, 0, gl15(f, a, b), out);
}

// principal-branch increment of log u between two points seen along a segment
Complex log_ratio(const ParameterVector& pv, const PointConfiguration& cfg, Complex a, Complex b) {
  Complex s{0.0, 0.0};
  for (int i = 0; i <= pv.m + 1; ++i) {
    const Complex al = pv.alpha[i].value;
    if (al == 0.0) continue;
    s += al * std::log((b - Complex{cfg.x[i], 0.0}) / (a - Complex{cfg.x[i], 0.0}));
  }
  return s;
}

Complex log_u(const ParameterVector& pv, const PointConfiguration& cfg, Complex t) {
  Complex s{0.0, 0.0};
  for (int i = 0; i <= pv.m + 1; ++i) {
    const Complex al = pv.alpha[i].value;
    if (al == 0.0) continue;
    s += al * std::log(t - Complex{cfg.x[i], 0.0});
  }
  return s;
}

// exp(lam + log f + log jac) computed in log form to dodge overflow when the
// factors are huge but the product is moderate
Complex safe_prod(Complex lam, Complex f, Complex jac) {
  if (f == Complex{0.0, 0.0} || jac == Complex{0.0, 0.0}) return {0.0, 0.0};
  return std::exp(lam + std::log(f) + std::log(jac));
}

}  // namespace

QuadratureResult period(const RationalOneForm& phi, const TwistedChain& gamma,
                        const ParameterVector& pv, const PointConfiguration& cfg, double tol,
                        double loop_scale) {
  const double sgn = gamma.dual ? -1.0 : 1.0;
  QuadratureResult out;
  for (const auto& [el, coeff] : gamma.terms) {
    auto cm = chains::curve_model(el, gamma.dual, cfg, loop_scale);
    QuadratureResult part;
    Complex lam = sgn * log_u(pv, cfg, cm.pts[0]);
    const size_t last = cm.pts.size() - 1;
    // For a loop about a site with integer exponent the branch of u returns
    // unchanged, so the stem into the circle cancels its own retraced copy
    // exactly; integrating both only feeds roundoff from the pole into the
    // sum, so the stem edges contribute branch continuation alone.
    const bool skip_stem =
        el.kind == ChainKind::LoopAround && pv[el.site].is_integer();
    for (size_t e = 0; e + 1 < cm.pts.size(); ++e) {
      if (skip_stem && (e == 0 || e == last - 1)) {
        lam += sgn * log_ratio(pv, cfg, cm.pts[e], cm.pts[e + 1]);
        continue;
      }
      const Complex p0 = cm.pts[e], p1 = cm.pts[e + 1], dt = p1 - p0;
      auto f = [&](double s) {
        const Complex t = p0 + s * dt;
        const Complex l = lam + sgn * log_ratio(pv, cfg, p0, t);
        return safe_prod(l, phi.eval(t, cfg), dt);
      };
      integrate_adaptive(f, 0.0, 1.0, tol, part);
      if (e + 1 < last || !cm.to_infinity) lam += sgn * log_ratio(pv, cfg, p0, p1);
    }
    if (cm.to_infinity) {
      // continue along the outgoing ray with tau/(1-tau) stretching
      const Complex v = cm.pts[last], dir0 = cm.pts[last] - cm.pts[last - 1];
      const Complex dir = dir0 / std::abs(dir0);
      const double h = std::max(1.0, std::abs(v));
      lam += sgn * log_ratio(pv, cfg, cm.pts[last - 1], v);
      auto f = [&](double tau) {
        const double g = tau / (1.0 - tau);
        const Complex t = v + dir * (h * g);
        const Complex l = lam + sgn * log_ratio(pv, cfg, v, t);
        const Complex jac = dir * (h / ((1.0 - tau) * (1.0 - tau)));
        return safe_prod(l, phi.eval(t, cfg), jac);
      };
      integrate_adaptive(f, 0.0, 1.0, tol, part);
    }
    out.value += coeff * part.value;
    out.error_estimate += std::abs(coeff) * part.error_estimate;
    out.panels += part.panels;
  }
  return out;
}

Complex u_at_path_end(int site, bool dual, const ParameterVector& pv,
                      const PointConfiguration& cfg) {
  const double sgn = dual ? -1.0 : 1.0;
  auto cm = chains::curve_model({ChainKind::PathTo, site}, dual, cfg);
  Complex lam = sgn * log_u(pv, cfg, cm.pts[0]);
  for (size_t e = 0; e + 1 < cm.pts.size(); ++e)
    lam += sgn * log_ratio(pv, cfg, cm.pts[e], cm.pts[e + 1]);
  return std::exp(lam);
}

namespace {

// rational representative of phi_{i,m+2} for alpha_i != 0; the alpha_i = 0
// bump form pairs combinatorially (handled in frame_periods directly)
RationalOneForm frame_cocycle(const ParameterVector& pv, int i) {
  RationalOneForm f;
  f.add_pole(i, 1, i == pv.m + 1 ? Complex{1.0, 0.0} : pv[i].value);
  return f;
}

}  // namespace

Matrix frame_periods(const ParameterVector& pv, const IndexClassification& cls,
                     const PointConfiguration& cfg, double tol, bool parallel) {
  const int n = pv.m + 1;
  auto bp = chains::bases(pv, cls);
  Matrix G(n, n);
#pragma omp parallel for collapse(2) schedule(dynamic) if (parallel)
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i <= pv.m && pv[i].value == 0.0) {
        // <-u(x_i) dh_i / u, gamma_j> = -u|_path(x_i) * (weight of x_i in the boundary)
        Complex s{0.0, 0.0};
        for (const auto& [el, c] : bp.gamma[j].terms)
          if (el.kind == ChainKind::PathTo && el.site == i) s += c;
        G(i - 1, j) = s == Complex{0.0, 0.0}
                          ? Complex{0.0, 0.0}
                          : -u_at_path_end(i, false, pv, cfg) * s;
      } else {
        G(i - 1, j) = period(frame_cocycle(pv, i), bp.gamma[j], pv, cfg, tol).value;
      }
    }
  return G;
}

PeriodMatrices period_matrices(const ParameterVector& pv, const IndexClassification& cls,
                               const PointConfiguration& cfg, double tol, bool parallel) {
  const int n = pv.m + 1;
  auto bp = chains::bases(pv, cls);
  auto af = cocycles::adapted_frame(pv, cls, cfg);
  PeriodMatrices pm;
  pm.Phi.resize(n, n);
  pm.Psi.resize(n, n);
  double err = 0.0;
#pragma omp parallel for collapse(2) schedule(dynamic) reduction(max : err) if (parallel)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto a = period(af.phi[i], bp.gamma[j], pv, cfg, tol);
      auto b = period(af.psi[j], bp.delta[i], pv, cfg, tol);
      pm.Phi(i, j) = a.value;
      pm.Psi(i, j) = b.value;
      err = std::max(err, std::max(a.error_estimate, b.error_estimate));
    }
  pm.error_estimate = err;
  return pm;
}

double verify_tpr(const ParameterVector& pv, const IndexClassification& cls,
                  const PointConfiguration& cfg, double tol, bool parallel) {
  auto pm = period_matrices(pv, cls, cfg, tol, parallel);
  auto af = cocycles::adapted_frame(pv, cls, cfg);
  Matrix H = chains::intersection_matrix_h(pv, cls);
  return (H - pm.Psi * af.C.partialPivLu().solve(pm.Phi)).cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------- euler

double euler_check(double a, const std::vector<double>& b, double c, const std::vector<double>& x,
                   double tol) {
  const int m = int(b.size());
  if (!(0.0 < a && a < c)) throw domain_error("euler_check needs 0 < Re a < Re c");
  for (double xi : x)
    if (std::abs(xi) >= 1.0) throw domain_error("euler_check needs |x_i| < 1");
  // t = 1/s maps the integral to int_0^1 s^{a-1} (1-s)^{c-a-1} prod (1-x_i s)^{-b_i} ds;
  // tanh-sinh handles the algebraic endpoints
  // integrand evaluated from log s and log(1-s) to keep the algebraic
  // endpoint factors accurate deep into the tails
  auto f = [&](double ls, double l1s) {
    const double s = std::exp(ls);
    double v = (a - 1.0) * ls + (c - a - 1.0) * l1s;
    for (int i = 0; i < m; ++i) v += -b[i] * std::log1p(-x[i] * s);
    return std::exp(v);
  };
  double integral = 0.0, prev = 0.0;
  const double tmax = 6.5;
  for (int level = 3; level <= 12; ++level) {
    const double h = tmax / std::ldexp(1.0, level - 1);
    double s = 0.0;
    const int K = int(tmax / h);
    for (int k = -K; k <= K; ++k) {
      const double t = k * h;
      const double w2 = pi * std::sinh(t);  // s(t) = 1/(1 + e^{-w2}), 1-s = 1/(1 + e^{w2})
      const double w = 0.5 * pi * std::cosh(t) / std::pow(std::cosh(0.5 * w2), 2);
      const double ls = w2 < 0.0 ? w2 - std::log1p(std::exp(w2)) : -std::log1p(std::exp(-w2));
      const double l1s = w2 > 0.0 ? -w2 - std::log1p(std::exp(-w2)) : -std::log1p(std::exp(w2));
      const double term = w * f(ls, l1s);
      if (std::isfinite(term)) s += term;
    }
    integral = 0.5 * h * s;
    if (level > 4 && std::abs(integral - prev) < tol * (1.0 + std::abs(integral))) break;
    prev = integral;
  }
  const Complex ratio =
      gamma_fn(Complex{c, 0.0}) / (gamma_fn(Complex{a, 0.0}) * gamma_fn(Complex{c - a, 0.0}));
  std::vector<Complex> bc(b.begin(), b.end()), xc(x.begin(), x.end());
  const Complex series = fd_series(Complex{a, 0.0}, bc, Complex{c, 0.0}, xc);
  return std::abs(ratio * integral - series);
}

// ---------------------------------------------------------------- continuation

namespace {

Matrix pf_rhs(const connection::ResidueMatrixSet& rs, int moving, const std::vector<Complex>& x,
              Complex z) {
  const int n = rs.m + 1;
  Matrix R = Matrix::Zero(n, n);
  for (int j = 0; j <= rs.m + 1; ++j) {
    if (j == moving) continue;
    R += rs.at(moving, j) / (z - x[j]);
  }
  return R;
}

// Dormand-Prince 5(4) over s in [0,1] for dY/ds = R(z(s)) z'(s) Y
template <class Z, class DZ>
void rk45_leg(const connection::ResidueMatrixSet& rs, int moving, const std::vector<Complex>& x,
              Z&& z, DZ&& dz, Matrix& Y, double rtol, double atol) {
  static const double A21 = 1.0 / 5;
  static const double A31 = 3.0 / 40, A32 = 9.0 / 40;
  static const double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
  static const double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561,
                      A54 = -212.0 / 729;
  static const double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247,
                      A64 = 49.0 / 176, A65 = -5103.0 / 18656;
  static const double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192, B5 = -2187.0 / 6784,
                      B6 = 11.0 / 84;
  static const double E1 = 71.0 / 57600, E3 = -71.0 / 16695, E4 = 71.0 / 1920,
                      E5 = -17253.0 / 339200, E6 = 22.0 / 525, E7 = -1.0 / 40;
  static const double C2 = 1.0 / 5, C3 = 3.0 / 10, C4 = 4.0 / 5, C5 = 8.0 / 9;

  auto F = [&](double s, const Matrix& M) -> Matrix {
    return (pf_rhs(rs, moving, x, z(s)) * dz(s)) * M;
  };
  double s = 0.0, h = 0.05;
  int steps = 0;
  while (s < 1.0) {
    if (s + h > 1.0) h = 1.0 - s;
    Matrix k1 = F(s, Y);
    Matrix k2 = F(s + C2 * h, Y + h * (A21 * k1));
    Matrix k3 = F(s + C3 * h, Y + h * (A31 * k1 + A32 * k2));
    Matrix k4 = F(s + C4 * h, Y + h * (A41 * k1 + A42 * k2 + A43 * k3));
    Matrix k5 = F(s + C5 * h, Y + h * (A51 * k1 + A52 * k2 + A53 * k3 + A54 * k4));
    Matrix k6 = F(s + h, Y + h * (A61 * k1 + A62 * k2 + A63 * k3 + A64 * k4 + A65 * k5));
    Matrix Y5 = Y + h * (B1 * k1 + B3 * k3 + B4 * k4 + B5 * k5 + B6 * k6);
    Matrix k7 = F(s + h, Y5);
    Matrix err = h * (E1 * k1 + E3 * k3 + E4 * k4 + E5 * k5 + E6 * k6 + E7 * k7);
    const double sc = atol + rtol * std::max(Y.cwiseAbs().maxCoeff(), Y5.cwiseAbs().maxCoeff());
    const double e = err.cwiseAbs().maxCoeff() / sc;
    if (e <= 1.0) {
      s += h;
      Y = Y5;
    }
    h *= std::clamp(0.9 * std::pow(e > 0.0 ? e : 1e-16, -0.2), 0.2, 5.0);
    h = std::min(h, 0.5);
    if (h < 1e-12) throw domain_error("pfaffian continuation step underflow near singular locus");
    if (++steps > 2000000) throw domain_error("pfaffian continuation did not converge");
  }
}

}  // namespace

Matrix continue_pfaffian(const connection::ResidueMatrixSet& rs, const ParameterVector& pv,
                         int moving, const std::vector<Complex>& x_base,
                         const std::vector<Complex>& waypoints, Complex center, double radius,
                         const Matrix& Y0, double rtol, double atol) {
  if (moving < 1 || moving > pv.m) throw input_error("moving coordinate must be 1..m");
  Matrix Y = Y0;
  auto run_segment = [&](Complex a, Complex b) {
    rk45_leg(
        rs, moving, x_base, [=](double s) { return a + s * (b - a); },
        [=](double) { return b - a; }, Y, rtol, atol);
  };
  for (size_t k = 0; k + 1 < waypoints.size(); ++k) run_segment(waypoints[k], waypoints[k + 1]);
  if (radius > 0.0) {
    const Complex start = waypoints.empty() ? center + radius : waypoints.back();
    const double th0 = std::arg(start - center);
    rk45_leg(
        rs, moving, x_base,
        [=](double s) { return center + radius * std::exp(iu * (th0 + 2.0 * pi * s)); },
        [=](double s) { return radius * 2.0 * pi * iu * std::exp(iu * (th0 + 2.0 * pi * s)); }, Y,
        rtol, atol);
  }
  for (size_t k = waypoints.size(); k >= 2; --k) run_segment(waypoints[k - 1], waypoints[k - 2]);
  return Y;
}

LoopSpec monodromy_loop(int p, int q, const PointConfiguration& cfg) {
  LoopSpec ls;
  double target;
  if (p >= 1) {
    ls.moving = p;
    target = cfg.x[q];
  } else {
    ls.moving = q;  // rho_{0,q} is realized as rho_{q,0}
    target = cfg.x[0];
  }
  if (ls.moving < 1 || ls.moving > cfg.m) throw input_error("generator has no movable coordinate");
  double lo = cfg.x[0], hi = cfg.x[0], gap = 1e300;
  std::vector<double> xs(cfg.x.begin(), cfg.x.begin() + cfg.m + 2);
  std::sort(xs.begin(), xs.end());
  lo = xs.front();
  hi = xs.back();
  for (size_t i = 1; i < xs.size(); ++i) gap = std::min(gap, xs[i] - xs[i - 1]);
  const double h = 0.6 * (hi - lo);
  ls.center = target;
  ls.radius = 0.25 * gap;
  const Complex z0{cfg.x[ls.moving], 0.0};
  ls.approach = {z0, z0 + iu * h, Complex{target, 0.0} + iu * h,
                 Complex{target, 0.0} + iu * ls.radius};
  return ls;
}

double verify_monodromy(const ParameterVector& pv, const IndexClassification& cls,
                        const PointConfiguration& cfg, double tol) {
  auto rs = connection::residue_matrices(pv);
  auto H = chains::intersection_matrix_h(pv, cls);
  std::vector<Complex> xc(cfg.x.begin(), cfg.x.begin() + pv.m + 2);
  Matrix G0 = frame_periods(pv, cls, cfg, tol);
  double worst = 0.0;
  for (int p = 0; p <= pv.m; ++p)
    for (int q = p + 1; q <= pv.m + 1; ++q) {
      if (p == 0 && q == pv.m + 1) continue;
      auto cm = monodromy::circuit_matrix(p, q, pv, cls, cfg, H);
      auto ls = monodromy_loop(p, q, cfg);
      Matrix Yend =
          continue_pfaffian(rs, pv, ls.moving, xc, ls.approach, ls.center, ls.radius, G0);
      Matrix pred = G0 * cm.M;
      worst = std::max(worst,
                       (Yend - pred).cwiseAbs().maxCoeff() / (1.0 + pred.cwiseAbs().maxCoeff()));
    }
  return worst;
}

// ---------------------------------------------------------------- wronskian / system

double wronskian_abs(const ParameterVector& pv, const IndexClassification& cls,
                     const PointConfiguration& cfg, double tol) {
  const int n = pv.m + 1;
  Matrix G = frame_periods(pv, cls, cfg, tol);
  Matrix W(n, n);
  W.row(0) = G.row(n - 1);  // phi_{m+1,m+2} = phi_0
  for (int i = 1; i <= pv.m; ++i)
    W.row(i) = (pv[i].value * G.row(n - 1) - G.row(i - 1)) / Complex{cfg.x[i] - 1.0, 0.0};
  return std::abs(W.determinant());
}

double lhgs_residual(const ParameterVector& pv, const IndexClassification& cls,
                     const PointConfiguration& cfg, int j, double h, double tol) {
  const int m = pv.m;
  RationalOneForm phi0;
  phi0.add_pole(m + 1, 1, {1.0, 0.0});
  auto f = [&](const std::vector<double>& xf) {
    auto c2 = parameters::configuration_from_points(cls, xf);
    auto bp = chains::bases(pv, cls);
    return period(phi0, bp.gamma[j], pv, c2, tol).value;
  };
  std::vector<double> x0(cfg.x.begin() + 1, cfg.x.begin() + m + 1);
  // parameters of the system from the exponents
  const Complex aP = pv[m + 2].value;
  const Complex cP = pv[m + 1].value + pv[m + 2].value;
  std::vector<Complex> bP(m);
  for (int i = 0; i < m; ++i) bP[i] = -pv[i + 1].value;

  auto at = [&](int i, double di, int k, double dk) {
    auto x = x0;
    x[i] += di;
    if (k >= 0) x[k] += dk;
    return f(x);
  };
  const Complex f0 = f(x0);
  std::vector<Complex> d1(m), d2(m);
  for (int i = 0; i < m; ++i) {
    const Complex fp = at(i, h, -1, 0), fm = at(i, -h, -1, 0);
    d1[i] = (fp - fm) / (2.0 * h);
    d2[i] = (fp - 2.0 * f0 + fm) / (h * h);
  }
  std::vector<std::vector<Complex>> dm(m, std::vector<Complex>(m));
  for (int i = 0; i < m; ++i)
    for (int k = i + 1; k < m; ++k)
      dm[i][k] = dm[k][i] = (at(i, h, k, h) - at(i, h, k, -h) - at(i, -h, k, h) +
                             at(i, -h, k, -h)) /
                            (4.0 * h * h);

  double scale = std::abs(f0);
  for (int i = 0; i < m; ++i) scale = std::max(scale, std::abs(d1[i]));
  double worst = 0.0;
  for (int i = 0; i < m; ++i) {
    Complex L = x0[i] * (1.0 - x0[i]) * d2[i];
    for (int k = 0; k < m; ++k)
      if (k != i) L += (1.0 - x0[i]) * x0[k] * dm[i][k];
    L += (cP - (aP + bP[i] + 1.0) * x0[i]) * d1[i];
    for (int k = 0; k < m; ++k)
      if (k != i) L -= bP[i] * x0[k] * d1[k];
    L -= aP * bP[i] * f0;
    worst = std::max(worst, std::abs(L) / (1.0 + scale));
  }
  for (int i = 0; i < m; ++i)
    for (int k = i + 1; k < m; ++k) {
      Complex L = (x0[i] - x0[k]) * dm[i][k] - bP[k] * d1[i] + bP[i] * d1[k];
      worst = std::max(worst, std::abs(L) / (1.0 + scale));
    }
  return worst;
}

}  // namespace lauricella::numerics
