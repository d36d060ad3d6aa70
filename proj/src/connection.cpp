#include "lauricella/connection.hpp"

#include <cmath>
#include <random>

#include "lauricella/cocycles.hpp"

namespace lauricella::connection {

using cocycles::eigen_cocycles;
using cocycles::frame;
using cocycles::laurent;
using cocycles::LocalSeries;
using cocycles::series_inverse;
using cocycles::series_product;
using cocycles::u_unit_series;

const Matrix& ResidueMatrixSet::at(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = R.find({i, j});
  if (it == R.end()) throw input_error("residue matrix index out of range");
  return it->second;
}

ResidueMatrixSet residue_matrices(const ParameterVector& pv) {
  ResidueMatrixSet rs;
  rs.m = pv.m;
  for (int i = 0; i <= pv.m; ++i)
    for (int j = i + 1; j <= pv.m + 1; ++j) {
      RowVector v;
      Vector w;
      eigen_cocycles(pv, i, j, v, w);
      rs.R[{i, j}] = -(w * v);
    }
  return rs;
}

Matrix pfaffian_P(const ParameterVector& pv) {
  const int m = pv.m;
  Matrix P = Matrix::Zero(m + 1, m + 1);
  P(0, m) = 1.0;
  for (int i = 1; i <= m; ++i) {
    P(i, i - 1) = -1.0;
    P(i, m) = pv.alpha[i].value;
  }
  return P;
}

std::vector<Matrix> connection_at(PfaffianKind kind, const ResidueMatrixSet& rs,
                                  const ParameterVector& pv, const std::vector<Complex>& x) {
  const int m = pv.m;
  if (int(x.size()) != m + 2) throw input_error("connection_at: expected m+2 site coordinates");
  for (int i = 0; i <= m + 1; ++i)
    for (int j = i + 1; j <= m + 1; ++j)
      if (std::abs(x[i] - x[j]) < 1e-13) throw domain_error("point lies on the singular locus");

  std::vector<Matrix> comps;
  for (int k = 1; k <= m; ++k) {
    Matrix Rk = Matrix::Zero(m + 1, m + 1);
    for (int j = 0; j <= m + 1; ++j) {
      if (j == k) continue;
      Rk += rs.at(k, j) / (x[k] - x[j]);
    }
    comps.push_back(Rk);
  }
  if (kind == PfaffianKind::R) return comps;

  const Matrix P = pfaffian_P(pv);
  const Matrix Pinv = P.inverse();
  for (auto& M : comps) M = P * M * Pinv;
  if (kind == PfaffianKind::Xi) return comps;

  // Theta = Q Xi Q^{-1} + (dQ) Q^{-1}, Q = diag(1, 1/(x_1-1), ...).
  Vector Q(m + 1);
  Q(0) = 1.0;
  for (int i = 1; i <= m; ++i) Q(i) = 1.0 / (x[i] - 1.0);
  for (int k = 1; k <= m; ++k) {
    Matrix& M = comps[k - 1];
    for (int a = 0; a <= m; ++a)
      for (int b = 0; b <= m; ++b) M(a, b) *= Q(a) / Q(b);
    M(k, k) += -1.0 / (x[k] - 1.0);
  }
  return comps;
}

double check_integrability(const ResidueMatrixSet& rs, const ParameterVector& pv, int trials,
                           unsigned seed) {
  const int m = pv.m;
  double worst = 0.0;
  auto norm = [](const Matrix& M) { return M.cwiseAbs().maxCoeff(); };

  // residue-level commutator identities
  for (int i = 0; i <= m + 1; ++i)
    for (int j = i + 1; j <= m + 1; ++j) {
      const Matrix& A = rs.at(i, j);
      for (int k = 0; k <= m + 1; ++k) {
        if (k == i || k == j) continue;
        Matrix B = rs.at(i, k) + rs.at(j, k);
        worst = std::max(worst, norm(A * B - B * A));
      }
      for (int k = i + 1; k <= m + 1; ++k)
        for (int l = k + 1; l <= m + 1; ++l) {
          if (k == j || l == j) continue;
          const Matrix& B = rs.at(k, l);
          worst = std::max(worst, norm(A * B - B * A));
        }
    }

  // curvature of Xi at random points, with exact pole-term derivatives
  const Matrix P = pfaffian_P(pv);
  const Matrix Pinv = P.inverse();
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> box(-1.5, 2.5);
  for (int t = 0; t < trials; ++t) {
    std::vector<Complex> x(m + 2);
    x[0] = 0.0;
    x[m + 1] = 1.0;
    bool good = true;
    for (int i = 1; i <= m; ++i) x[i] = Complex{box(rng), box(rng)};
    for (int i = 0; i <= m + 1 && good; ++i)
      for (int j = i + 1; j <= m + 1; ++j)
        if (std::abs(x[i] - x[j]) < 0.05) good = false;
    if (!good) {
      --t;
      continue;
    }
    auto Xi = connection_at(PfaffianKind::Xi, rs, pv, x);
    for (int k = 1; k <= m; ++k)
      for (int l = k + 1; l <= m; ++l) {
        Matrix dk_Xil = P * (rs.at(l, k) / ((x[l] - x[k]) * (x[l] - x[k]))) * Pinv;
        Matrix dl_Xik = P * (rs.at(k, l) / ((x[k] - x[l]) * (x[k] - x[l]))) * Pinv;
        Matrix resid = dk_Xil - dl_Xik - (Xi[k - 1] * Xi[l - 1] - Xi[l - 1] * Xi[k - 1]);
        worst = std::max(worst, norm(resid));
      }
  }
  return worst;
}

namespace {

int alpha_int(const ParameterVector& pv, int site) {
  return int(pv.alpha[site].exact->num);  // callers guarantee integrality
}

}  // namespace

// frame coordinates of the regular-site generator at x_i (i in I_N0):
// v_k = -res_{x_i}(psi_{0,k} / u)
RowVector regular_site_coords(const ParameterVector& pv, const IndexClassification& cls,
                              const PointConfiguration& cfg, int site) {
  const int m = pv.m;
  const int ai = alpha_int(pv, site);
  const int K = std::max(8, std::abs(ai) + 6);
  auto fr = frame(pv, cls, cfg);
  LocalSeries inv_unit = series_inverse(u_unit_series(pv, cfg, site, K), K);
  RowVector v(m + 1);
  for (int k = 1; k <= m + 1; ++k) {
    LocalSeries S = series_product(laurent(fr.psi[k], site, cfg, K), inv_unit, K);
    v(k - 1) = -S.at(ai - 1);
  }
  return v;
}

// residue functional of u phi at a polar site k (k in I_-N):
// c_l = res_{x_k}(u phi_l)
Vector polar_site_functional(const ParameterVector& pv, const IndexClassification& cls,
                             const PointConfiguration& cfg, int site) {
  const int m = pv.m;
  const int ak = alpha_int(pv, site);
  const int K = std::max(8, std::abs(ak) + 6);
  auto fr = frame(pv, cls, cfg);
  LocalSeries unit = u_unit_series(pv, cfg, site, K);
  Vector c(m + 1);
  for (int l = 1; l <= m + 1; ++l) {
    LocalSeries S = series_product(laurent(fr.phi[l], site, cfg, K), unit, K);
    c(l - 1) = S.at(-1 - ak);
  }
  return c;
}

namespace {

double orth_residual(const Vector& v, const Vector& dir) {
  double nd = dir.norm();
  if (nd < 1e-13) return v.norm();
  Vector proj = v - (dir.adjoint() * v)(0) / (nd * nd) * dir;
  return proj.norm() / (1.0 + v.norm());
}

}  // namespace

std::vector<SubspaceReport> invariant_subspaces(const ParameterVector& pv,
                                                const IndexClassification& cls,
                                                const PointConfiguration& cfg) {
  const int m = pv.m;
  std::vector<SubspaceReport> out;
  auto rs = residue_matrices(pv);
  std::vector<Complex> xc(cfg.x.begin(), cfg.x.begin() + m + 2);
  auto Rx = connection_at(PfaffianKind::R, rs, pv, xc);

  const double h = 1e-6;
  auto perturbed = [&](int j, double dh) {
    std::vector<double> xf(cfg.x.begin() + 1, cfg.x.begin() + m + 1);
    xf[j - 1] += dh;
    return parameters::configuration_from_points(cls, xf);
  };

  // span of the regular-site generators, one line per site of I_N0
  Matrix V(cls.r, m + 1);
  int row = 0;
  double span_resid = 0.0;
  for (int site : cls.iN0) {
    RowVector v = regular_site_coords(pv, cls, cfg, site);
    V.row(row++) = v;
    for (int j = 1; j <= m; ++j) {
      RowVector vp = regular_site_coords(pv, cls, perturbed(j, h), site);
      RowVector vm = regular_site_coords(pv, cls, perturbed(j, -h), site);
      RowVector dv = (vp - vm) / (2.0 * h);
      RowVector flat = v * Rx[j - 1] + dv;
      span_resid = std::max(span_resid, orth_residual(flat.transpose(), v.transpose()));
    }
  }
  SubspaceReport rep;
  rep.name = "regular-site span";
  rep.dimension =
      cls.r == 0 ? 0 : int(V.jacobiSvd().setThreshold(1e-8).rank());
  rep.residual = span_resid;
  const int expected = cls.all_integral ? cls.r - 1 : cls.r;
  rep.ok = (rep.dimension == expected) && span_resid < 1e-5;
  out.push_back(rep);

  // one hyperplane per polar integral site
  for (int site : cls.iNeg) {
    Vector c = polar_site_functional(pv, cls, cfg, site);
    SubspaceReport hr;
    hr.name = "polar-site hyperplane x_" + std::to_string(site);
    if (c.norm() < 1e-10) {
      hr.dimension = m + 1;  // the functional degenerates
      hr.residual = 0.0;
      hr.ok = cls.all_integral && cls.s == 1;
      out.push_back(hr);
      continue;
    }
    hr.dimension = m;
    double resid = 0.0;
    for (int j = 1; j <= m; ++j) {
      Vector cp = polar_site_functional(pv, cls, perturbed(j, h), site);
      Vector cm = polar_site_functional(pv, cls, perturbed(j, -h), site);
      Vector dc = (cp - cm) / (2.0 * h);
      Vector flat = dc - Rx[j - 1] * c;
      resid = std::max(resid, orth_residual(flat, c));
    }
    hr.residual = resid;
    hr.ok = resid < 1e-5;
    out.push_back(hr);
  }
  return out;
}

}  // namespace lauricella::connection
