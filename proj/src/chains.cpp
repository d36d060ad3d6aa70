#include "lauricella/chains.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace lauricella::chains {

namespace {
constexpr double kZero = 1e-13;
}

void TwistedChain::add(ChainKind kind, int site, Complex c) {
  if (std::abs(c) < kZero) return;
  auto key = ElementaryChain{kind, site};
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
  } else {
    it->second += c;
    if (std::abs(it->second) < kZero) terms.erase(it);
  }
}

TwistedChain TwistedChain::operator*(Complex s) const {
  TwistedChain out;
  out.dual = dual;
  for (const auto& [e, c] : terms) out.add(e.kind, e.site, c * s);
  return out;
}

TwistedChain TwistedChain::operator+(const TwistedChain& o) const {
  TwistedChain out = *this;
  for (const auto& [e, c] : o.terms) out.add(e.kind, e.site, c);
  return out;
}

TwistedChain TwistedChain::operator-(const TwistedChain& o) const {
  return *this + o * Complex{-1.0, 0.0};
}

ChainBasisPair bases(const ParameterVector& pv, const IndexClassification& cls) {
  ChainBasisPair out;
  out.cls = cls;
  const int m = pv.m;
  const int r = cls.r, s = cls.s;
  auto lam = pv.lambdas();
  const Complex one{1.0, 0.0};
  if (!cls.all_integral) {
    const int i0 = cls.slot[0];
    const int iM = cls.slot[m + 2];
    for (int j = 1; j <= m + 1; ++j) {
      const int ij = cls.slot[j];
      TwistedChain g;
      if (j <= r) {
        g.add(ChainKind::PathTo, ij, one);
        g.add(ChainKind::LoopAround, i0, -one / (one - lam[i0]));
      } else if (j <= r + s) {
        g.add(ChainKind::LoopAround, ij, one);
      } else {
        g.add(ChainKind::LoopAround, ij, one);
        g.add(ChainKind::LoopAround, i0, -(one - lam[ij]) / (one - lam[i0]));
      }
      out.gamma.push_back(g);

      TwistedChain d;
      d.dual = true;
      if (j <= r) {
        d.add(ChainKind::LoopAround, ij, -one);
      } else if (j <= r + s) {
        d.add(ChainKind::PathTo, ij, one);
        d.add(ChainKind::LoopAround, iM, -one / (one - one / lam[iM]));
      } else {
        d.add(ChainKind::LoopAround, ij, one);
        d.add(ChainKind::LoopAround, iM, -(one - one / lam[ij]) / (one - one / lam[iM]));
      }
      out.delta.push_back(d);
    }
  } else {
    const int i0 = cls.slot[0];
    const int i1 = cls.slot[1];
    for (int j = 1; j <= m + 1; ++j) {
      const int ij1 = cls.slot[j + 1];
      TwistedChain g;
      if (j <= r - 1) {
        g.add(ChainKind::PathTo, ij1, one);
        g.add(ChainKind::PathTo, i1, -one);
      } else {
        g.add(ChainKind::LoopAround, ij1, one);
      }
      out.gamma.push_back(g);

      TwistedChain d;
      d.dual = true;
      if (j <= r - 1) {
        d.add(ChainKind::LoopAround, ij1, -one);
      } else {
        d.add(ChainKind::PathTo, ij1, one);
        d.add(ChainKind::PathTo, i0, -one);
      }
      out.delta.push_back(d);
    }
  }
  return out;
}

Matrix intersection_matrix_h(const ParameterVector& pv, const IndexClassification& cls) {
  const int n = pv.m + 2;  // m+1 basis elements, 1-based loops below
  const int r = cls.r, s = cls.s;
  Matrix H = Matrix::Zero(n - 1, n - 1);
  if (cls.all_integral) return Matrix::Identity(n - 1, n - 1);
  auto lam = pv.lambdas();
  const Complex one{1.0, 0.0};
  for (int j = 1; j <= r + s; ++j) H(j - 1, j - 1) = one;
  for (int i = r + 1; i <= r + s; ++i)
    for (int k = r + s + 1; k <= pv.m + 1; ++k) H(i - 1, k - 1) = lam[cls.slot[k]] - one;
  for (int j = r + s + 1; j <= pv.m + 1; ++j) {
    H(j - 1, j - 1) = lam[cls.slot[j]] - one;
    for (int k = j + 1; k <= pv.m + 1; ++k)
      H(j - 1, k - 1) = (lam[cls.slot[k]] - one) * (one - one / lam[cls.slot[j]]);
  }
  return H;
}

// --- explicit curve models -------------------------------------------------
//
// Each elementary chain is realized as a polyline in C (circles are finely
// polygonalized).  Since the pairing only depends on homotopy classes, the
// polygonal model gives the exact value: the branch mismatch at a crossing is
// a product of integer powers of the lambda_i.

namespace {

struct SideGeom {
  Complex apex;
  double eps;     // radius of the small circles
  double R;       // radius of the big circle about all finite sites
  double y_stem;  // height of the entry into the big circle
  double y_run;   // depth of the below-axis run of the path to infinity
  double x_desc;  // abscissa where the path to infinity dips below the axis
  double X_far;   // truncation abscissa (beyond every other curve)
  double gmin;    // smallest gap between consecutive finite sites
  double dmax;    // largest distance of a site or apex from the center
};

struct Env {
  double C = 0.0;   // center of the finite sites
  double ds = 1.0;  // +1: infinity to the right, -1: to the left
  SideGeom del, gam;
};

Env make_env(const PointConfiguration& cfg, int m) {
  std::vector<double> xs(cfg.x.begin(), cfg.x.begin() + m + 2);
  std::sort(xs.begin(), xs.end());
  const double lo = xs.front(), hi = xs.back();
  const double span = hi - lo;
  double g = span;
  for (size_t i = 1; i < xs.size(); ++i) g = std::min(g, xs[i] - xs[i - 1]);
  Env env;
  env.C = 0.5 * (lo + hi);
  env.ds = cfg.inf_at_left ? -1.0 : 1.0;
  const Complex apexG{env.C + 0.0137 * span, 0.37 * span};
  const Complex apexD{env.C - 0.0191 * span, 0.41 * span};
  double dmax = 0.0;
  for (double x : xs) dmax = std::max(dmax, std::abs(x - env.C));
  dmax = std::max({dmax, std::abs(apexG - env.C), std::abs(apexD - env.C)});
  const double edge = cfg.inf_at_left ? lo : hi;
  env.gam = {apexG, 0.055 * g, 1.45 * dmax, 0.11 * g, 0.13 * g,
             edge + env.ds * 0.31 * g, env.C + env.ds * 1.90 * dmax, g, dmax};
  env.del = {apexD, 0.085 * g, 1.62 * dmax, 0.17 * g, 0.19 * g,
             edge + env.ds * 0.43 * g, env.C + env.ds * 2.00 * dmax, g, dmax};
  return env;
}

struct Curve {
  std::vector<Complex> pts;
  std::vector<Complex> lam;  // continued log u at each vertex (NaN at a site)
};

Complex log_step(const ParameterVector& pv, const PointConfiguration& cfg, Complex a, Complex b) {
  Complex s{0.0, 0.0};
  for (int i = 0; i <= pv.m + 1; ++i) {
    const Complex xi{cfg.x[i], 0.0};
    s += pv.alpha[i].value * std::log((b - xi) / (a - xi));
  }
  return s;
}

std::vector<Complex> make_pts(ChainKind kind, int site, const SideGeom& sg, const Env& env,
                              int m, const PointConfiguration& cfg) {
  std::vector<Complex> pts;
  if (site <= m + 1) {
    const Complex xs{cfg.x[site], 0.0};
    if (kind == ChainKind::PathTo) {
      pts = {sg.apex, xs};
    } else {
      Complex dir = sg.apex - xs;
      dir /= std::abs(dir);
      const Complex entry = xs + sg.eps * dir;
      const double th0 = std::arg(dir);
      const int N = 96;
      pts.push_back(sg.apex);
      pts.push_back(entry);
      for (int k = 1; k < N; ++k)
        pts.push_back(xs + sg.eps * std::exp(iu * (th0 + 2.0 * pi * k / N)));
      pts.push_back(entry);
      pts.push_back(sg.apex);
    }
  } else {
    if (kind == ChainKind::PathTo) {
      // dip below the axis beyond the last finite site, then run out
      pts = {sg.apex,
             {sg.x_desc, 0.35 * sg.gmin},
             {sg.x_desc, -sg.y_run},
             {sg.X_far, -sg.y_run}};
    } else {
      // big circle traversed once clockwise (winding +1 about infinity)
      const double xr = std::sqrt(sg.R * sg.R - sg.y_stem * sg.y_stem);
      const Complex P1{env.C + env.ds * xr, sg.y_stem};
      const double th0 = std::arg(P1 - Complex{env.C, 0.0});
      const int N = 192;
      pts.push_back(sg.apex);
      pts.push_back(P1);
      for (int k = 1; k < N; ++k)
        pts.push_back(Complex{env.C, 0.0} + sg.R * std::exp(iu * (th0 - 2.0 * pi * k / N)));
      pts.push_back(P1);
      pts.push_back(sg.apex);
    }
  }
  return pts;
}

Curve make_curve(ChainKind kind, int site, const SideGeom& sg, const Env& env,
                 const ParameterVector& pv, const PointConfiguration& cfg) {
  const int m = pv.m;
  Curve cv;
  cv.pts = make_pts(kind, site, sg, env, m, cfg);
  auto& pts = cv.pts;
  // continue the branch along the polyline
  cv.lam.resize(pts.size());
  Complex l0{0.0, 0.0};
  for (int i = 0; i <= m + 1; ++i) l0 += pv.alpha[i].value * std::log(pts[0] - Complex{cfg.x[i], 0.0});
  cv.lam[0] = l0;
  for (size_t k = 1; k < pts.size(); ++k) {
    bool at_site = false;
    for (int i = 0; i <= m + 1; ++i)
      if (std::abs(pts[k] - Complex{cfg.x[i], 0.0}) < 1e-14) at_site = true;
    if (at_site) {
      cv.lam[k] = Complex{std::nan(""), std::nan("")};
    } else {
      cv.lam[k] = cv.lam[k - 1] + log_step(pv, cfg, pts[k - 1], pts[k]);
    }
  }
  return cv;
}

double cross2(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

// sum over transversal crossings of -[nu.mu] * exp(lam_gamma - lam_delta)
Complex pair_elementary(const Curve& D, const Curve& G, const ParameterVector& pv,
                        const PointConfiguration& cfg) {
  Complex total{0.0, 0.0};
  for (size_t i = 0; i + 1 < D.pts.size(); ++i) {
    const Complex p0 = D.pts[i], dp = D.pts[i + 1] - p0;
    if (std::abs(dp) < 1e-15) continue;
    const double pxlo = std::min(p0.real(), p0.real() + dp.real());
    const double pxhi = std::max(p0.real(), p0.real() + dp.real());
    const double pylo = std::min(p0.imag(), p0.imag() + dp.imag());
    const double pyhi = std::max(p0.imag(), p0.imag() + dp.imag());
    for (size_t j = 0; j + 1 < G.pts.size(); ++j) {
      const Complex q0 = G.pts[j], dq = G.pts[j + 1] - q0;
      if (std::abs(dq) < 1e-15) continue;
      if (std::max(q0.real(), q0.real() + dq.real()) < pxlo ||
          std::min(q0.real(), q0.real() + dq.real()) > pxhi ||
          std::max(q0.imag(), q0.imag() + dq.imag()) < pylo ||
          std::min(q0.imag(), q0.imag() + dq.imag()) > pyhi)
        continue;
      const double det = cross2(dp, dq);
      const double scale = std::abs(dp) * std::abs(dq);
      if (std::abs(det) < 1e-13 * scale) continue;
      const Complex w = q0 - p0;
      const double s = cross2(w, dq) / det;
      const double t = cross2(w, dp) / det;
      const double tol = 1e-11;
      if (s <= -tol || s >= 1.0 + tol || t <= -tol || t >= 1.0 + tol) continue;
      if (s < tol || s > 1.0 - tol || t < tol || t > 1.0 - tol)
        throw std::logic_error("degenerate chain crossing; adjust curve constants");
      const Complex pc = p0 + s * dp;
      const Complex lamD = D.lam[i] + log_step(pv, cfg, p0, pc);
      const Complex lamG = G.lam[j] + log_step(pv, cfg, q0, pc);
      const double sg = det > 0.0 ? 1.0 : -1.0;
      total += -sg * std::exp(lamG - lamD);
    }
  }
  return total;
}

}  // namespace

CurveModel curve_model(const ElementaryChain& el, bool dual, const PointConfiguration& cfg,
                       double loop_scale) {
  const Env env = make_env(cfg, cfg.m);
  SideGeom sg = dual ? env.del : env.gam;
  if (el.kind == ChainKind::LoopAround) {
    if (el.site <= cfg.m + 1)
      sg.eps *= loop_scale;
    else
      sg.R = sg.dmax + (sg.R - sg.dmax) * loop_scale;
  }
  CurveModel cm;
  cm.pts = make_pts(el.kind, el.site, sg, env, cfg.m, cfg);
  cm.to_infinity = el.kind == ChainKind::PathTo && el.site == cfg.m + 2;
  return cm;
}

Complex intersection_h(const TwistedChain& d, const TwistedChain& g, const ParameterVector& pv,
                       const PointConfiguration& cfg) {
  if (!d.dual || g.dual) throw input_error("intersection_h expects (dual, primal) chains");
  if (d.empty() || g.empty()) return {0.0, 0.0};
  const Env env = make_env(cfg, pv.m);
  std::map<ElementaryChain, Curve> dcur, gcur;
  Complex total{0.0, 0.0};
  for (const auto& [ed, cd] : d.terms) {
    auto itd = dcur.find(ed);
    if (itd == dcur.end())
      itd = dcur.emplace(ed, make_curve(ed.kind, ed.site, env.del, env, pv, cfg)).first;
    for (const auto& [eg, cg] : g.terms) {
      auto itg = gcur.find(eg);
      if (itg == gcur.end())
        itg = gcur.emplace(eg, make_curve(eg.kind, eg.site, env.gam, env, pv, cfg)).first;
      total += cd * cg * pair_elementary(itd->second, itg->second, pv, cfg);
    }
  }
  return total;
}

Matrix intersection_matrix_h_geometric(const ParameterVector& pv, const IndexClassification& cls,
                                       const PointConfiguration& cfg) {
  auto bp = bases(pv, cls);
  const int n = pv.m + 1;
  Matrix H(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) H(i, j) = intersection_h(bp.delta[i], bp.gamma[j], pv, cfg);
  return H;
}

VanishingPair vanishing_pair_coords(int p, int q, const ParameterVector& pv,
                                    const IndexClassification& cls,
                                    const PointConfiguration& cfg, const Matrix& H) {
  const int m = pv.m;
  if (p == q || p < 0 || q < 0 || p > m + 1 || q > m + 1)
    throw input_error("vanishing_pair_coords: need distinct finite indices 0..m+1");
  auto lam = pv.lambdas();
  const Complex one{1.0, 0.0};
  VanishingPair out;
  out.delta.dual = true;
  auto cl = [&](int i) { return cls.in_N0(i) ? 0 : (cls.in_Neg(i) ? 1 : 2); };
  TwistedChain& g = out.gamma;
  TwistedChain& d = out.delta;
  switch (cl(p) * 3 + cl(q)) {
    case 0:  // p,q regular integral
      g.add(ChainKind::PathTo, q, one);
      g.add(ChainKind::PathTo, p, -one);
      break;
    case 1:
      g.add(ChainKind::LoopAround, q, one);
      d.add(ChainKind::LoopAround, p, one);
      break;
    case 2:
      g.add(ChainKind::LoopAround, q, one / (one - lam[q]));
      g.add(ChainKind::PathTo, p, -one);
      d.add(ChainKind::LoopAround, p, one - lam[q]);
      break;
    case 3:
      g.add(ChainKind::LoopAround, p, -one);
      d.add(ChainKind::LoopAround, q, -one);
      break;
    case 4:  // p,q polar integral
      d.add(ChainKind::PathTo, q, one);
      d.add(ChainKind::PathTo, p, -one);
      break;
    case 5:
      g.add(ChainKind::LoopAround, p, -one);
      d.add(ChainKind::LoopAround, q, -lam[q]);
      d.add(ChainKind::PathTo, p, -(one - lam[q]));
      break;
    case 6:
      g.add(ChainKind::PathTo, q, one);
      g.add(ChainKind::LoopAround, p, -one / (one - lam[p]));
      d.add(ChainKind::LoopAround, q, -(one - lam[p]));
      break;
    case 7:
      g.add(ChainKind::LoopAround, q, one);
      d.add(ChainKind::PathTo, q, one - lam[p]);
      d.add(ChainKind::LoopAround, p, lam[p]);
      break;
    case 8:
      g.add(ChainKind::LoopAround, q, one / (one - lam[q]));
      g.add(ChainKind::LoopAround, p, -one / (one - lam[p]));
      d.add(ChainKind::LoopAround, q, -lam[q] * (one - lam[p]));
      d.add(ChainKind::LoopAround, p, lam[p] * (one - lam[q]));
      break;
  }
  out.gamma_zero = g.empty();
  out.delta_zero = d.empty();

  auto bp = bases(pv, cls);
  const int n = m + 1;
  Vector b(n);
  for (int i = 0; i < n; ++i) b(i) = intersection_h(bp.delta[i], g, pv, cfg);
  out.y = H.partialPivLu().solve(b);
  Vector c(n);
  for (int j = 0; j < n; ++j) c(j) = intersection_h(d, bp.gamma[j], pv, cfg);
  out.z = H.transpose().partialPivLu().solve(c).transpose();
  return out;
}

}  // namespace lauricella::chains
