#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lauricella/parameters.hpp"
#include "lauricella/types.hpp"

namespace lauricella::connection {

using parameters::IndexClassification;
using parameters::ParameterVector;
using parameters::PointConfiguration;

// Rank-one residue matrices R_{i,j} = -w_{i,j} v_{i,j} of the Gauss-Manin
// connection in the frame (phi_{1,m+2}, ..., phi_{m+1,m+2}).
struct ResidueMatrixSet {
  int m = 0;
  std::map<std::pair<int, int>, Matrix> R;  // keys i < j, 0 <= i < j <= m+1

  const Matrix& at(int i, int j) const;  // symmetric access
};

ResidueMatrixSet residue_matrices(const ParameterVector& pv);

enum class PfaffianKind { R, Xi, Theta };

// Constant change of frame from (phi_{k,m+2}) to (f_0, (x_i-1) d_i f_0).
Matrix pfaffian_P(const ParameterVector& pv);

// dx_k-components (k = 1..m) of the selected connection matrix at the point
// with site coordinates x = (x_0, x_1, ..., x_m, x_{m+1}); complex points off
// the singular locus are allowed.
std::vector<Matrix> connection_at(PfaffianKind kind, const ResidueMatrixSet& rs,
                                  const ParameterVector& pv, const std::vector<Complex>& x);

// Max residual of the flatness conditions: commutator identities
// [R_{i,j}, R_{i,k} + R_{j,k}] = 0 (and vanishing for disjoint pairs) plus
// d_k Xi_l - d_l Xi_k - [Xi_k, Xi_l] at `trials` random points, with the
// derivatives expanded exactly from the pole terms.
double check_integrability(const ResidueMatrixSet& rs, const ParameterVector& pv, int trials,
                           unsigned seed);

struct SubspaceReport {
  std::string name;
  int dimension = 0;
  double residual = 0.0;
  bool ok = false;
};

// Predicted invariant subspaces in frame coordinates: the span of the
// regular-integral-site generators (one per element of I_N0) and, for each
// polar integral site k, the hyperplane annihilated by the residue
// functional of u phi at x_k.  Invariance is certified by the parallelism of
// the defining vectors: their x-derivative matches the connection action up
// to a multiple of the vector itself.
// Frame coordinates of the predicted invariant generators: the covector of
// the regular-integral-site line (site in I_N0) and the residue functional
// cutting out the polar-site hyperplane (site in I_-N).
RowVector regular_site_coords(const ParameterVector& pv, const IndexClassification& cls,
                              const PointConfiguration& cfg, int site);
Vector polar_site_functional(const ParameterVector& pv, const IndexClassification& cls,
                             const PointConfiguration& cfg, int site);

std::vector<SubspaceReport> invariant_subspaces(const ParameterVector& pv,
                                                const IndexClassification& cls,
                                                const PointConfiguration& cfg);

}  // namespace lauricella::connection
