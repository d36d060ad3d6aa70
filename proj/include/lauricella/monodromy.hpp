#pragma once
#include <string>
#include <utility>
#include <vector>

#include "lauricella/parameters.hpp"
#include "lauricella/types.hpp"

namespace lauricella::monodromy {

using parameters::IndexClassification;
using parameters::ParameterVector;
using parameters::PointConfiguration;

// Representation matrix M_{p,q} = E - y_{p,q} z_{p,q} H of the circuit
// transformation along rho_{p,q}, acting on coordinates in the homology basis.
// A degenerate vanishing pair (gamma_pq = 0 or delta_pq = 0) gives M = E.
struct CircuitMatrix {
  int p = 0, q = 0;
  Matrix M;
  Vector y;
  RowVector z;
  bool degenerate = false;
};

CircuitMatrix circuit_matrix(int p, int q, const ParameterVector& pv,
                             const IndexClassification& cls, const PointConfiguration& cfg,
                             const Matrix& H);

// All generators rho_{p,q}, 0 <= p < q <= m+1, (p,q) != (0,m+1).
struct GeneratorSet {
  std::vector<CircuitMatrix> gens;
  Matrix H;
};

GeneratorSet generators(const ParameterVector& pv, const IndexClassification& cls,
                        const PointConfiguration& cfg);

struct WitnessSubspace {
  std::string name;
  int dimension = 0;
  double residual = 0.0;  // worst off-subspace component of any generator image
  bool ok = false;
};

struct RepresentationReport {
  bool reducible = false;
  bool trivial = false;
  double identity_residual = 0.0;  // max |M_{p,q} - E| when trivial
  std::vector<WitnessSubspace> witnesses;
};

// Reducibility/triviality of the monodromy representation, with numerically
// certified invariant subspaces: the line spanned by the loop around each
// polar integral site and the cycle subspace when regular integral sites are
// present.
RepresentationReport classify_representation(const ParameterVector& pv,
                                             const IndexClassification& cls,
                                             const PointConfiguration& cfg);

}  // namespace lauricella::monodromy
