#include "lauricella/cocycles.hpp"

#include <algorithm>
#include <cmath>

namespace lauricella::cocycles {

// ---------------------------------------------------------------- Poly

int Poly::degree() const {
  for (int k = int(c.size()) - 1; k >= 0; --k)
    if (c[k] != Complex{0.0, 0.0}) return k;
  return -1;
}

Complex Poly::eval(Complex t) const {
  Complex v{0.0, 0.0};
  for (int k = int(c.size()) - 1; k >= 0; --k) v = v * t + c[k];
  return v;
}

Poly Poly::operator*(const Poly& o) const {
  if (c.empty() || o.c.empty()) return {};
  Poly out;
  out.c.assign(c.size() + o.c.size() - 1, {0.0, 0.0});
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < o.c.size(); ++j) out.c[i + j] += c[i] * o.c[j];
  return out;
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  if (o.c.size() > out.c.size()) out.c.resize(o.c.size(), {0.0, 0.0});
  for (size_t i = 0; i < o.c.size(); ++i) out.c[i] += o.c[i];
  return out;
}

void Poly::scale(Complex a) {
  for (auto& v : c) v *= a;
}

Poly Poly::monic_linear(Complex root) {
  Poly p;
  p.c = {-root, {1.0, 0.0}};
  return p;
}

// ------------------------------------------------------- RationalOneForm

void RationalOneForm::add_pole(int site, int order, Complex coeff) {
  if (coeff == Complex{0.0, 0.0}) return;
  principal[{site, order}] += coeff;
}

void RationalOneForm::add_poly(int n, Complex coeff) {
  if (int(poly.size()) <= n) poly.resize(n + 1, {0.0, 0.0});
  poly[n] += coeff;
}

RationalOneForm RationalOneForm::operator+(const RationalOneForm& o) const {
  RationalOneForm out = *this;
  for (const auto& [key, v] : o.principal) out.principal[key] += v;
  for (size_t n = 0; n < o.poly.size(); ++n) out.add_poly(int(n), o.poly[n]);
  return out;
}

RationalOneForm RationalOneForm::operator*(Complex a) const {
  RationalOneForm out = *this;
  for (auto& [key, v] : out.principal) v *= a;
  for (auto& v : out.poly) v *= a;
  return out;
}

Complex RationalOneForm::eval(Complex t, const PointConfiguration& cfg) const {
  Complex v{0.0, 0.0};
  for (const auto& [key, coeff] : principal) {
    Complex d = t - cfg.x[key.first];
    v += coeff * std::pow(d, -key.second);
  }
  Complex p{0.0, 0.0};
  for (int k = int(poly.size()) - 1; k >= 0; --k) p = p * t + poly[k];
  return v + p;
}

int RationalOneForm::pole_order(int site, int n_sites) const {
  int inf = n_sites - 1;
  if (site == inf) {
    int p = 0;
    for (const auto& [key, coeff] : principal)
      if (coeff != Complex{0.0, 0.0}) p = std::max(p, 2 - key.second);
    for (int n = 0; n < int(poly.size()); ++n)
      if (poly[n] != Complex{0.0, 0.0}) p = std::max(p, n + 2);
    return p;
  }
  int p = 0;
  for (const auto& [key, coeff] : principal)
    if (key.first == site && coeff != Complex{0.0, 0.0}) p = std::max(p, key.second);
  return p;
}

void RationalOneForm::prune(double tol) {
  for (auto it = principal.begin(); it != principal.end();)
    it = (std::abs(it->second) <= tol) ? principal.erase(it) : std::next(it);
  while (!poly.empty() && std::abs(poly.back()) <= tol) poly.pop_back();
}

// ----------------------------------------------------------- expansions

LocalSeries laurent(const RationalOneForm& f, int site, const PointConfiguration& cfg, int kmax) {
  const int n_sites = int(cfg.x.size());
  const int inf = n_sites - 1;
  LocalSeries out;
  out.site = site;
  out.k0 = -f.pole_order(site, n_sites);
  if (out.k0 > kmax) out.k0 = kmax;
  out.c.assign(kmax - out.k0 + 1, {0.0, 0.0});
  auto add = [&](int k, Complex v) {
    if (k >= out.k0 && k <= kmax) out.c[k - out.k0] += v;
  };

  if (site != inf) {
    double xa = cfg.x[site];
    for (const auto& [key, coeff] : f.principal) {
      auto [b, k] = key;
      if (b == site) {
        add(-k, coeff);
        continue;
      }
      Complex delta = Complex(xa - cfg.x[b], 0.0);
      // coeff/(s+delta)^k = coeff delta^-k sum binom(-k,n) (s/delta)^n
      Complex term = coeff * std::pow(delta, -double(k));
      Complex binom{1.0, 0.0};
      for (int n = 0; n <= kmax; ++n) {
        add(n, term * binom);
        binom *= Complex(double(-k - n), 0.0) / double(n + 1);
        term /= delta;
      }
    }
    // polynomial part: sum p_n (s + xa)^n
    for (int n = 0; n < int(f.poly.size()); ++n) {
      Complex p = f.poly[n];
      if (p == Complex{0.0, 0.0}) continue;
      double binom = 1.0;
      double pw = 1.0;
      // (s+xa)^n = sum_j C(n,j) xa^{n-j} s^j
      std::vector<double> powxa(n + 1, 1.0);
      for (int j = 1; j <= n; ++j) powxa[j] = powxa[j - 1] * xa;
      for (int j = 0; j <= std::min(n, kmax); ++j) {
        add(j, p * binom * powxa[n - j]);
        binom = binom * double(n - j) / double(j + 1);
      }
      (void)pw;
    }
  } else {
    // s = 1/t, dt = -ds/s^2
    for (const auto& [key, coeff] : f.principal) {
      auto [b, k] = key;
      double xb = cfg.x[b];
      // -coeff s^{k-2} (1-xb s)^{-k}
      Complex binom{1.0, 0.0};
      double pw = 1.0;
      for (int n = 0; k - 2 + n <= kmax; ++n) {
        add(k - 2 + n, -coeff * binom * pw);
        binom *= Complex(double(k + n), 0.0) / double(n + 1);
        pw *= xb;
      }
    }
    for (int n = 0; n < int(f.poly.size()); ++n) add(-n - 2, -f.poly[n]);
  }
  return out;
}

RationalOneForm omega_form(const ParameterVector& pv) {
  RationalOneForm w;
  for (int i = 0; i <= pv.m + 1; ++i) w.add_pole(i, 1, pv[i].value);
  return w;
}

LocalSeries series_inverse(const LocalSeries& s, int nterms) {
  if (s.c.empty() || s.c[0] == Complex{0.0, 0.0})
    throw domain_error("series inversion of a vanishing leading coefficient");
  LocalSeries out;
  out.site = s.site;
  out.k0 = -s.k0;
  out.c.assign(nterms, {0.0, 0.0});
  out.c[0] = 1.0 / s.c[0];
  for (int n = 1; n < nterms; ++n) {
    Complex acc{0.0, 0.0};
    for (int j = 1; j <= n; ++j) {
      Complex sj = (j < int(s.c.size())) ? s.c[j] : Complex{0.0, 0.0};
      acc += sj * out.c[n - j];
    }
    out.c[n] = -acc / s.c[0];
  }
  return out;
}

LocalSeries series_product(const LocalSeries& a, const LocalSeries& b, int kmax) {
  LocalSeries out;
  out.site = a.site;
  out.k0 = a.k0 + b.k0;
  if (out.k0 > kmax) out.k0 = kmax;
  out.c.assign(kmax - out.k0 + 1, {0.0, 0.0});
  for (int i = 0; i < int(a.c.size()); ++i)
    for (int j = 0; j < int(b.c.size()); ++j) {
      int k = a.k0 + i + b.k0 + j;
      if (k <= kmax) out.c[k - out.k0] += a.c[i] * b.c[j];
    }
  return out;
}

LocalSeries u_unit_series(const ParameterVector& pv, const PointConfiguration& cfg, int site,
                          int nterms) {
  const int inf = pv.m + 2;
  LocalSeries unit;
  unit.site = site;
  unit.k0 = 0;
  unit.c.assign(nterms, {0.0, 0.0});
  unit.c[0] = {1.0, 0.0};
  auto mul_binomial = [&](Complex lead, Complex ratio, Complex expo) {
    // multiply by lead * (1 + ratio s)^expo
    LocalSeries f;
    f.site = site;
    f.k0 = 0;
    f.c.assign(nterms, {0.0, 0.0});
    Complex binom{1.0, 0.0};
    Complex pw{1.0, 0.0};
    for (int n = 0; n < nterms; ++n) {
      f.c[n] = lead * binom * pw;
      binom *= (expo - double(n)) / double(n + 1);
      pw *= ratio;
    }
    unit = series_product(unit, f, nterms - 1);
    unit.c.resize(nterms, {0.0, 0.0});
  };
  if (site != inf) {
    double xa = cfg.x[site];
    for (int i = 0; i <= pv.m + 1; ++i) {
      if (i == site) continue;
      Complex delta(xa - cfg.x[i], 0.0);
      Complex a = pv[i].value;
      mul_binomial(std::pow(delta, a), 1.0 / delta, a);
    }
  } else {
    for (int i = 0; i <= pv.m + 1; ++i)
      mul_binomial({1.0, 0.0}, Complex(-cfg.x[i], 0.0), pv[i].value);
  }
  return unit;
}

LocalSeries local_series_solve(const RationalOneForm& phi, int site, bool dual,
                               const ParameterVector& pv, const PointConfiguration& cfg,
                               int kmax) {
  const double sigma = dual ? -1.0 : 1.0;
  LocalSeries w = laurent(omega_form(pv), site, cfg, kmax);
  LocalSeries p = laurent(phi, site, cfg, kmax);
  Complex a_loc = w.at(-1);

  // trim leading zeros of p
  int pmin = p.k0;
  while (pmin <= p.kmax() && p.at(pmin) == Complex{0.0, 0.0}) ++pmin;

  LocalSeries f;
  f.site = site;
  f.k0 = pmin + 1;
  if (pmin > p.kmax()) {  // phi vanishes identically at this site
    f.k0 = 0;
    f.c.assign(kmax - f.k0 + 1, {0.0, 0.0});
    return f;
  }
  f.c.assign(kmax - f.k0 + 1, {0.0, 0.0});

  double scale = 0.0;
  for (auto& v : p.c) scale = std::max(scale, std::abs(v));

  for (int k = f.k0; k <= kmax; ++k) {
    Complex acc{0.0, 0.0};
    for (int j = f.k0; j < k; ++j) acc += f.at(j) * w.at(k - 1 - j);
    Complex rhs = p.at(k - 1) - sigma * acc;
    Complex denom = Complex(double(k), 0.0) + sigma * a_loc;
    if (std::abs(denom) < 1e-9) {
      if (std::abs(rhs) > 1e-9 * std::max(scale, 1.0))
        throw domain_error("unresolvable resonance in local series solve");
      // resonant coefficient fixed to zero by the vanishing condition
    } else {
      f.c[k - f.k0] = rhs / denom;
    }
  }
  return f;
}

Complex residue_pairing(const RationalOneForm& phi, const RationalOneForm& psi,
                        const ParameterVector& pv, const IndexClassification& cls,
                        const PointConfiguration& cfg) {
  const int n_sites = pv.n_sites();
  Complex total{0.0, 0.0};
  for (int i = 0; i < n_sites; ++i) {
    int p_phi = phi.pole_order(i, n_sites);
    int p_psi = psi.pole_order(i, n_sites);
    int kmax = std::max(p_phi, p_psi) + 4;
    auto res_f_psi = [&]() {
      LocalSeries f = local_series_solve(phi, i, false, pv, cfg, kmax);
      LocalSeries q = laurent(psi, i, cfg, kmax);
      Complex r{0.0, 0.0};
      for (int k = f.k0; k <= p_psi - 1; ++k) r += f.at(k) * q.at(-1 - k);
      return r;
    };
    auto res_g_phi = [&]() {
      LocalSeries g = local_series_solve(psi, i, true, pv, cfg, kmax);
      LocalSeries q = laurent(phi, i, cfg, kmax);
      Complex r{0.0, 0.0};
      for (int k = g.k0; k <= p_phi - 1; ++k) r += g.at(k) * q.at(-1 - k);
      return r;
    };
    if (cls.in_N0(i))
      total += res_f_psi();
    else if (cls.in_Neg(i))
      total -= res_g_phi();
    else
      total += 0.5 * (res_f_psi() - res_g_phi());
  }
  return two_pi_i * total;
}

// -------------------------------------------------- product expansions

// Expands lead * prod_j (t - x_j)^{n_j} (n_j integral, possibly negative)
// into a partial-fraction one-form.
static RationalOneForm partial_fractions(Complex lead,
                                         const std::map<int, int>& exponents,
                                         const PointConfiguration& cfg) {
  Poly num;
  num.c = {lead};
  std::map<int, int> den;  // site -> multiplicity
  for (const auto& [site, n] : exponents) {
    if (n > 0)
      for (int k = 0; k < n; ++k) num = num * Poly::monic_linear(Complex(cfg.x[site], 0.0));
    else if (n < 0)
      den[site] = -n;
  }
  RationalOneForm out;
  if (den.empty()) {
    for (int k = 0; k < int(num.c.size()); ++k) out.add_poly(k, num.c[k]);
    out.prune();
    return out;
  }

  // polynomial quotient of num by the expanded denominator
  Poly D;
  D.c = {{1.0, 0.0}};
  int dtot = 0;
  for (const auto& [site, d] : den) {
    dtot += d;
    for (int k = 0; k < d; ++k) D = D * Poly::monic_linear(Complex(cfg.x[site], 0.0));
  }
  Poly R = num;
  int rdeg = R.degree();
  while (rdeg >= dtot) {
    Complex q = R.c[rdeg] / D.c[dtot];
    out.add_poly(rdeg - dtot, q);
    for (int k = 0; k <= dtot; ++k) R.c[rdeg - dtot + k] -= q * D.c[k];
    R.c[rdeg] = {0.0, 0.0};
    rdeg = R.degree();
  }

  // principal parts: Taylor-expand R / prod_{b != a} (t-x_b)^{d_b} at x_a
  for (const auto& [a, da] : den) {
    double xa = cfg.x[a];
    // Taylor coefficients of R at xa
    std::vector<Complex> rs(da, {0.0, 0.0});
    for (int k = 0; k < int(R.c.size()); ++k) {
      // (s+xa)^k contributions
      double binom = 1.0;
      double pw = std::pow(xa, k);
      std::vector<double> powxa(k + 1, 1.0);
      for (int j = 1; j <= k; ++j) powxa[j] = powxa[j - 1] * xa;
      for (int j = 0; j <= std::min(k, da - 1); ++j) {
        rs[j] += R.c[k] * binom * powxa[k - j];
        binom = binom * double(k - j) / double(j + 1);
      }
      (void)pw;
    }
    LocalSeries H;
    H.site = a;
    H.k0 = 0;
    H.c = rs;
    for (const auto& [b, db] : den) {
      if (b == a) continue;
      Complex delta(xa - cfg.x[b], 0.0);
      LocalSeries inv;
      inv.site = a;
      inv.k0 = 0;
      inv.c.assign(da, {0.0, 0.0});
      Complex binom{1.0, 0.0};
      Complex term = std::pow(delta, -double(db));
      for (int n = 0; n < da; ++n) {
        inv.c[n] = term * binom;
        binom *= Complex(double(-db - n), 0.0) / double(n + 1);
        term /= delta;
      }
      H = series_product(H, inv, da - 1);
    }
    for (int j = 0; j < da && j < int(H.c.size()); ++j) out.add_pole(a, da - j, H.c[j]);
  }
  out.prune();
  return out;
}

RationalOneForm nabla_of_product(Complex lead, const std::vector<std::pair<int, int>>& factors,
                                 bool dual, const ParameterVector& pv,
                                 const PointConfiguration& cfg) {
  const double sigma = dual ? -1.0 : 1.0;
  std::map<int, int> expo;
  for (auto [site, e] : factors) expo[site] += e;
  // beta = sum_j e_j/(t-x_j) + sigma sum_i alpha_i/(t-x_i)
  std::map<int, Complex> beta;
  for (const auto& [site, e] : expo) beta[site] += Complex(double(e), 0.0);
  for (int i = 0; i <= pv.m + 1; ++i) beta[i] += sigma * pv[i].value;
  RationalOneForm out;
  for (const auto& [site, b] : beta) {
    if (b == Complex{0.0, 0.0}) continue;
    std::map<int, int> e2 = expo;
    e2[site] -= 1;
    out = out + partial_fractions(lead * b, e2, cfg);
  }
  out.prune();
  return out;
}

// --------------------------------------------------------------- frames

static bool alpha_is_zero(const ParameterVector& pv, int i) {
  if (pv[i].exact) return pv[i].exact->num == 0;
  return pv[i].value == Complex{0.0, 0.0};
}

FramePair frame(const ParameterVector& pv, const IndexClassification& cls,
                const PointConfiguration& cfg) {
  const int m = pv.m;
  FramePair fr;
  fr.phi.resize(m + 2);
  fr.psi.resize(m + 3);

  auto bump_phi = [&](int i) {
    // nabla of prod_{j in N0, j != i, j finite} ((t-x_j)/(x_i-x_j))^{1-alpha_j}
    Complex lead{1.0, 0.0};
    std::vector<std::pair<int, int>> factors;
    for (int j : cls.iN0) {
      if (j == i || j == m + 2) continue;
      int e = 1 - int(pv[j].exact->num);
      factors.push_back({j, e});
      lead *= std::pow(Complex(cfg.x[i] - cfg.x[j], 0.0), -double(e));
    }
    // The minus sign makes the boundary pairing of this algebraic form agree
    // with the smooth representative (value -u(x_i) on paths into x_i), which
    // is what the duality fixtures below require.
    return nabla_of_product(lead, factors, false, pv, cfg) * Complex{-1.0, 0.0};
  };

  for (int i = 0; i <= m; ++i) {
    if (!alpha_is_zero(pv, i)) {
      RationalOneForm f;
      f.add_pole(i, 1, pv[i].value);
      fr.phi[i] = f;
    } else {
      fr.phi[i] = bump_phi(i);
    }
  }
  {
    RationalOneForm f;
    f.add_pole(m + 1, 1, {1.0, 0.0});
    fr.phi[m + 1] = f;
  }

  for (int i = 1; i <= m; ++i) {
    RationalOneForm f;
    f.add_pole(i, 1, {1.0, 0.0});
    f.add_pole(0, 1, {-1.0, 0.0});
    fr.psi[i] = f;
  }
  bool z1 = alpha_is_zero(pv, m + 1), z2 = alpha_is_zero(pv, m + 2);
  // representative site for the doubly degenerate case
  int jrep = -1;
  for (int j = 0; j <= m; ++j)
    if (cls.in_Zc(j) || cls.in_N0(j)) { jrep = j; break; }
  if (!z1) {
    RationalOneForm f;
    f.add_pole(m + 1, 1, pv[m + 1].value);
    f.add_pole(0, 1, -pv[m + 1].value);
    fr.psi[m + 1] = f;
  } else if (!z2) {
    fr.psi[m + 1] = -omega_form(pv);
  } else {
    if (jrep < 0) throw domain_error("no regular site for the degenerate dual frame");
    // nabla-dual((1-x_j)/(t-x_j))
    Complex lead(1.0 - cfg.x[jrep], 0.0);
    fr.psi[m + 1] = nabla_of_product(lead, {{jrep, -1}}, true, pv, cfg);
  }
  if (!z2) {
    RationalOneForm f;
    f.add_pole(0, 1, -pv[m + 2].value);
    fr.psi[m + 2] = f;
  } else if (!z1) {
    fr.psi[m + 2] = -omega_form(pv);
  } else {
    if (jrep < 0) throw domain_error("no regular site for the degenerate dual frame");
    // nabla-dual((t-1)/(t-x_j)); (t-1)/(t-x_j) = 1 + (x_j-1)/(t-x_j)
    RationalOneForm a = nabla_of_product({1.0, 0.0}, {}, true, pv, cfg);
    RationalOneForm b =
        nabla_of_product(Complex(cfg.x[jrep] - 1.0, 0.0), {{jrep, -1}}, true, pv, cfg);
    fr.psi[m + 2] = a + b;
    fr.psi[m + 2].prune();
  }
  return fr;
}

namespace {

// pole depth of the loaded reference form at an integral site, primal or dual
int polar_depth(const ParameterVector& pv, int site, bool dual) {
  const int m = pv.m;
  if (!pv[site].is_integer()) return 0;
  const long a = pv[site].exact->num / pv[site].exact->den;
  long ord;
  if (!dual)
    ord = site == m + 2 ? a - 1 : (site == m + 1 ? a - 1 : a);
  else
    ord = site == m + 2 ? -a - 1 : (site == 0 ? -a - 1 : -a);
  return ord < 0 ? int(-ord) : 0;
}

}  // namespace

AdaptedFrame adapted_frame(const ParameterVector& pv, const IndexClassification& cls,
                           const PointConfiguration& cfg) {
  const int m = pv.m, n = m + 1;
  FramePair fr = frame(pv, cls, cfg);
  std::vector<RationalOneForm> cphi(fr.phi.begin() + 1, fr.phi.begin() + n + 1);
  std::vector<RationalOneForm> cpsi(fr.psi.begin() + 1, fr.psi.begin() + n + 1);
  AdaptedFrame out;
  out.C.resize(n, n);
  bool ok = true;
  for (int i = 0; i < n && ok; ++i)
    for (int j = 0; j < n && ok; ++j) {
      try {
        out.C(i, j) = residue_pairing(cphi[i], cpsi[j], pv, cls, cfg);
      } catch (const domain_error&) {
        ok = false;
      }
    }
  if (ok) {
    Eigen::JacobiSVD<Matrix> sv(out.C);
    if (sv.singularValues()(n - 1) > 1e-8 * sv.singularValues()(0)) {
      out.phi = std::move(cphi);
      out.psi = std::move(cpsi);
      return out;
    }
  }

  // local spacing scale, used to keep the higher-pole candidates O(1)
  auto gap = [&](int site) {
    double g = 1.0;
    for (int j = 0; j <= m + 1; ++j)
      if (j != site) g = std::min(g, std::abs(cfg.x[site] - cfg.x[j]));
    return g;
  };
  cphi.push_back(fr.phi[0]);
  cpsi.push_back(fr.psi[m + 2]);
  for (int i = 0; i <= m + 2; ++i) {
    for (int dual = 0; dual < 2; ++dual) {
      const int depth = polar_depth(pv, i, dual);
      if (depth == 0) continue;
      auto& pool = dual ? cpsi : cphi;
      if (i <= m + 1) {
        const double d = gap(i);
        for (int k = 2; k <= std::min(depth + 2, 6); ++k) {
          RationalOneForm f;
          f.add_pole(i, k, Complex(std::pow(d, k - 1), 0.0));
          pool.push_back(f);
        }
      } else {
        for (int k = 0; k <= std::min(depth + 1, 5); ++k) {
          RationalOneForm f;
          f.add_poly(k, {1.0, 0.0});
          pool.push_back(f);
        }
      }
    }
  }

  // all candidate pairings; candidates whose local solves hit an unresolvable
  // resonance are not classes of the complex and get dropped
  const int np = int(cphi.size()), nq = int(cpsi.size());
  Matrix P = Matrix::Zero(np, nq);
  std::vector<bool> rok(np, true), cok(nq, true);
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nq; ++j) {
      if (!rok[i] || !cok[j]) continue;
      try {
        P(i, j) = residue_pairing(cphi[i], cpsi[j], pv, cls, cfg);
      } catch (const domain_error&) {
        if (i < n)
          cok[j] = false;
        else
          rok[i] = false;
      }
    }

  // greedy full-pivot elimination picks n jointly nondegenerate pairs
  Matrix W = P;
  const double scale = P.cwiseAbs().maxCoeff();
  std::vector<int> rows, cols;
  std::vector<bool> rsel(np, false), csel(nq, false);
  for (int step = 0; step < n; ++step) {
    int bi = -1, bj = -1;
    double best = 0.0;
    for (int i = 0; i < np; ++i)
      for (int j = 0; j < nq; ++j)
        if (rok[i] && cok[j] && !rsel[i] && !csel[j] && std::abs(W(i, j)) > best) {
          best = std::abs(W(i, j));
          bi = i;
          bj = j;
        }
    if (bi < 0 || best <= 1e-10 * scale)
      throw domain_error("cohomology frame repair found no nondegenerate basis");
    rsel[bi] = csel[bj] = true;
    rows.push_back(bi);
    cols.push_back(bj);
    for (int i = 0; i < np; ++i) {
      if (rsel[i] || !rok[i]) continue;
      const Complex f = W(i, bj) / W(bi, bj);
      W.row(i) -= f * W.row(bi);
    }
  }
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  for (int i = 0; i < n; ++i) {
    out.phi.push_back(cphi[rows[i]]);
    out.psi.push_back(cpsi[cols[i]]);
    for (int j = 0; j < n; ++j) out.C(i, j) = P(rows[i], cols[j]);
  }
  return out;
}

void eigen_cocycles(const ParameterVector& pv, int i, int j, RowVector& v, Vector& w) {
  const int m = pv.m;
  if (!(0 <= i && i < j && j <= m + 1)) throw input_error("eigen_cocycles needs 0 <= i < j <= m+1");
  auto alpha = [&](int k) { return pv[k].value; };
  RowVector e0(m + 1);
  for (int k = 0; k < m; ++k) e0(k) = Complex(-1.0, 0.0);
  e0(m) = -alpha(m + 1);
  auto unit_row = [&](int k) {  // coordinates of phi_{k,m+2}, k = 0..m+1
    if (k == 0) return e0;
    RowVector e = RowVector::Zero(m + 1);
    e(k - 1) = {1.0, 0.0};
    return e;
  };
  auto unit_col = [&](int k) {  // coordinates of psi_{0,k}; k = 0 gives 0
    Vector e = Vector::Zero(m + 1);
    if (k >= 1) e(k - 1) = {1.0, 0.0};
    return e;
  };
  if (j <= m)
    v = alpha(j) * unit_row(i) - alpha(i) * unit_row(j);
  else
    v = unit_row(i) - alpha(i) * unit_row(m + 1);
  if (j <= m)
    w = unit_col(j) - unit_col(i);
  else
    w = unit_col(m + 1) - alpha(m + 1) * unit_col(i);
}

}  // namespace lauricella::cocycles
