#pragma once
#include <map>
#include <tuple>
#include <vector>

#include "lauricella/parameters.hpp"
#include "lauricella/types.hpp"

namespace lauricella::chains {

using parameters::IndexClassification;
using parameters::ParameterVector;
using parameters::PointConfiguration;

// Elementary loaded chains based at the upper-half-plane base point:
// PathTo(i) runs from the base point to the site x_i; LoopAround(i) travels
// to a small circle about x_i, winds once positively, and returns.
enum class ChainKind { PathTo, LoopAround };

struct ElementaryChain {
  ChainKind kind;
  int site;
  friend bool operator<(const ElementaryChain& a, const ElementaryChain& b) {
    return std::tie(a.kind, a.site) < std::tie(b.kind, b.site);
  }
  friend bool operator==(const ElementaryChain& a, const ElementaryChain& b) {
    return a.kind == b.kind && a.site == b.site;
  }
};

// Finite complex combination of elementary chains; `dual` selects the branch
// u^{-1} instead of u.
struct TwistedChain {
  std::map<ElementaryChain, Complex> terms;
  bool dual = false;

  void add(ChainKind kind, int site, Complex c);
  bool empty() const { return terms.empty(); }
  TwistedChain operator*(Complex s) const;
  TwistedChain operator+(const TwistedChain& o) const;
  TwistedChain operator-(const TwistedChain& o) const;
};

struct ChainBasisPair {
  std::vector<TwistedChain> gamma;  // gamma_1..gamma_{m+1}
  std::vector<TwistedChain> delta;  // delta_1..delta_{m+1}
  IndexClassification cls;
};

// Homology bases adapted to the index classification (split by whether all
// exponents are integral).
ChainBasisPair bases(const ParameterVector& pv, const IndexClassification& cls);

// Polyline realization of an elementary chain, identical to the model used by
// the intersection engine (so quadrature and intersection numbers refer to the
// same homotopy classes).  Paths to finite sites end at the site; loop models
// start and end at the apex; paths to infinity are truncated and flagged, the
// last edge giving the outgoing direction.  `loop_scale` shrinks the loop
// radius (keeping the big circle around all finite sites) for invariance
// tests.
struct CurveModel {
  std::vector<Complex> pts;
  bool to_infinity = false;
};

CurveModel curve_model(const ElementaryChain& el, bool dual, const PointConfiguration& cfg,
                       double loop_scale = 1.0);

// Homological intersection number of a dual chain with a chain, computed from
// explicit transverse curve models with branch bookkeeping.  The result is a
// finite sum of products of the lambda_i, exact up to rounding.
Complex intersection_h(const TwistedChain& d, const TwistedChain& g,
                       const ParameterVector& pv, const PointConfiguration& cfg);

// Closed-form intersection matrix H = (I_h(delta_i, gamma_j)).
Matrix intersection_matrix_h(const ParameterVector& pv, const IndexClassification& cls);

// Same matrix evaluated entry-by-entry through intersection_h; used to
// cross-validate the closed form.
Matrix intersection_matrix_h_geometric(const ParameterVector& pv, const IndexClassification& cls,
                                       const PointConfiguration& cfg);

// Vanishing cycle pair attached to a circuit about x_p = x_q, with basis
// coordinates: gamma_pq = sum_j y_j gamma_j, delta_pq = sum_i z_i delta_i.
struct VanishingPair {
  TwistedChain gamma, delta;
  Vector y;
  RowVector z;
  bool gamma_zero = false;
  bool delta_zero = false;
};

VanishingPair vanishing_pair_coords(int p, int q, const ParameterVector& pv,
                                    const IndexClassification& cls,
                                    const PointConfiguration& cfg, const Matrix& H);

}  // namespace lauricella::chains
