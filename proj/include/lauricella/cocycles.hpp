#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lauricella/parameters.hpp"
#include "lauricella/types.hpp"

namespace lauricella::cocycles {

using parameters::IndexClassification;
using parameters::ParameterVector;
using parameters::PointConfiguration;

// Dense polynomial in t with complex coefficients.
struct Poly {
  std::vector<Complex> c;  // c[k] * t^k

  int degree() const;
  Complex eval(Complex t) const;
  Poly operator*(const Poly& o) const;
  Poly operator+(const Poly& o) const;
  void scale(Complex a);
  static Poly monic_linear(Complex root);  // t - root
};

// Rational one-form in partial-fraction shape:
//   sum_{(i,k)} principal[(i,k)] dt/(t - x_i)^k  +  sum_n poly[n] t^n dt.
struct RationalOneForm {
  std::map<std::pair<int, int>, Complex> principal;
  std::vector<Complex> poly;

  void add_pole(int site, int order, Complex coeff);
  void add_poly(int n, Complex coeff);
  RationalOneForm operator+(const RationalOneForm& o) const;
  RationalOneForm operator*(Complex a) const;
  RationalOneForm operator-() const { return *this * Complex(-1.0, 0.0); }

  // Value of the coefficient function (the form divided by dt).
  Complex eval(Complex t, const PointConfiguration& cfg) const;

  int pole_order(int site, int n_sites) const;  // site may be m+2 (infinity)
  void prune(double tol = 1e-14);
};

// Truncated Laurent expansion sum_{k >= k0} c[k - k0] s^k in the local
// coordinate s at a site (s = t - x_i at finite sites, s = 1/t at infinity).
struct LocalSeries {
  int site = 0;
  int k0 = 0;
  std::vector<Complex> c;

  Complex at(int k) const {
    if (k < k0 || k >= k0 + int(c.size())) return {0.0, 0.0};
    return c[k - k0];
  }
  int kmax() const { return k0 + int(c.size()) - 1; }
};

// Laurent coefficients of the form (coefficients of s^k ds) at `site`,
// computed through order kmax inclusive.
LocalSeries laurent(const RationalOneForm& f, int site, const PointConfiguration& cfg, int kmax);

// sum_{i=0}^{m+1} alpha_i dt/(t - x_i).
RationalOneForm omega_form(const ParameterVector& pv);

// nabla(g) or nabla-dual(g) for g = lead * prod_j (t - x_{site_j})^{e_j};
// the result is expanded into partial fractions.
RationalOneForm nabla_of_product(Complex lead, const std::vector<std::pair<int, int>>& factors,
                                 bool dual, const ParameterVector& pv,
                                 const PointConfiguration& cfg);

// Local coordinates of u: u = s^{alpha_site} * unit(s); returns the unit
// factor as a power series (c[0] != 0), with the principal-branch constant.
LocalSeries u_unit_series(const ParameterVector& pv, const PointConfiguration& cfg, int site,
                          int nterms);
LocalSeries series_inverse(const LocalSeries& s, int nterms);
LocalSeries series_product(const LocalSeries& a, const LocalSeries& b, int kmax);

// Solves nabla f = phi (dual=false) or nabla-dual g = psi (dual=true)
// locally at `site`, through order kmax.  At a resonant order the
// coefficient is forced to zero after checking solvability.
LocalSeries local_series_solve(const RationalOneForm& phi, int site, bool dual,
                               const ParameterVector& pv, const PointConfiguration& cfg, int kmax);

// Intersection number of a cocycle against a dual cocycle via local residues.
Complex residue_pairing(const RationalOneForm& phi, const RationalOneForm& psi,
                        const ParameterVector& pv, const IndexClassification& cls,
                        const PointConfiguration& cfg);

// Frames of the twisted cohomology and its dual.
struct FramePair {
  std::vector<RationalOneForm> phi;  // index i = 0..m+1
  std::vector<RationalOneForm> psi;  // index i = 1..m+2 (psi[0] unused)
};
FramePair frame(const ParameterVector& pv, const IndexClassification& cls,
                const PointConfiguration& cfg);

// Cohomology bases certified nondegenerate by the residue pairing.  Equal to
// the standard frame whenever its pairing matrix is invertible; on strata
// where that frame degenerates (several sites carrying poles of the loaded
// form) the bases are repaired with higher-order pole representatives at
// those sites, selected by full-pivot elimination on the candidate pairings.
struct AdaptedFrame {
  std::vector<RationalOneForm> phi, psi;  // index 0..m, genuine bases
  Matrix C;                               // C(i,j) = <phi[i], psi[j]>
};
AdaptedFrame adapted_frame(const ParameterVector& pv, const IndexClassification& cls,
                           const PointConfiguration& cfg);

// Rank-one factors of the residue maps in frame coordinates, 0 <= i < j <= m+1.
void eigen_cocycles(const ParameterVector& pv, int i, int j, RowVector& v, Vector& w);

}  // namespace lauricella::cocycles
