#include "lauricella/monodromy.hpp"

#include <Eigen/Dense>
#include <algorithm>

#include "lauricella/chains.hpp"

namespace lauricella::monodromy {

using chains::ChainKind;
using chains::TwistedChain;

CircuitMatrix circuit_matrix(int p, int q, const ParameterVector& pv,
                             const IndexClassification& cls, const PointConfiguration& cfg,
                             const Matrix& H) {
  const int n = pv.m + 1;
  auto vp = chains::vanishing_pair_coords(p, q, pv, cls, cfg, H);
  CircuitMatrix cm;
  cm.p = p;
  cm.q = q;
  cm.y = vp.y;
  cm.z = vp.z;
  cm.degenerate = vp.gamma_zero || vp.delta_zero;
  cm.M = Matrix::Identity(n, n) - vp.y * (vp.z * H);
  return cm;
}

GeneratorSet generators(const ParameterVector& pv, const IndexClassification& cls,
                        const PointConfiguration& cfg) {
  GeneratorSet gs;
  gs.H = chains::intersection_matrix_h(pv, cls);
  for (int p = 0; p <= pv.m; ++p)
    for (int q = p + 1; q <= pv.m + 1; ++q) {
      if (p == 0 && q == pv.m + 1) continue;
      gs.gens.push_back(circuit_matrix(p, q, pv, cls, cfg, gs.H));
    }
  return gs;
}

namespace {

// worst off-subspace component of the generator images of the columns of S
double subspace_residual(const Matrix& S, const std::vector<CircuitMatrix>& gens) {
  auto lsq = S.completeOrthogonalDecomposition();
  double worst = 0.0;
  for (const CircuitMatrix& g : gens) {
    Matrix img = g.M * S;
    Matrix resid = img - S * lsq.solve(img);
    for (int c = 0; c < resid.cols(); ++c)
      worst = std::max(worst, resid.col(c).norm() / (1.0 + img.col(c).norm()));
  }
  return worst;
}

}  // namespace

RepresentationReport classify_representation(const ParameterVector& pv,
                                             const IndexClassification& cls,
                                             const PointConfiguration& cfg) {
  const int n = pv.m + 1;
  RepresentationReport rep;
  rep.reducible = !(cls.iN0.empty() && cls.iNeg.empty());
  rep.trivial = cls.all_integral && (cls.r == 1 || cls.r == pv.m + 2);

  auto gs = generators(pv, cls, cfg);
  if (rep.trivial) {
    for (const CircuitMatrix& g : gs.gens)
      rep.identity_residual =
          std::max(rep.identity_residual, (g.M - Matrix::Identity(n, n)).cwiseAbs().maxCoeff());
  }

  auto bp = chains::bases(pv, cls);
  for (int site : cls.iNeg) {
    TwistedChain loop;
    loop.add(ChainKind::LoopAround, site, {1.0, 0.0});
    Vector b(n);
    for (int i = 0; i < n; ++i) b(i) = chains::intersection_h(bp.delta[i], loop, pv, cfg);
    Vector y = gs.H.partialPivLu().solve(b);
    WitnessSubspace w;
    w.name = "loop line at x_" + std::to_string(site);
    w.dimension = 1;
    w.residual = subspace_residual(y, gs.gens);
    w.ok = w.residual < 1e-12;
    rep.witnesses.push_back(w);
  }
  if (!cls.iN0.empty()) {
    // basis elements without path components span the image of the
    // absolute-homology group; a proper subspace whenever both path and loop
    // elements occur
    std::vector<int> loops;
    for (int j = 0; j < n; ++j) {
      bool pure = true;
      for (const auto& [el, c] : bp.gamma[j].terms)
        if (el.kind == ChainKind::PathTo) pure = false;
      if (pure && !bp.gamma[j].empty()) loops.push_back(j);
    }
    if (!loops.empty() && int(loops.size()) < n) {
      Matrix S = Matrix::Zero(n, int(loops.size()));
      for (int c = 0; c < int(loops.size()); ++c) S(loops[c], c) = 1.0;
      WitnessSubspace w;
      w.name = "cycle subspace";
      w.dimension = int(loops.size());
      w.residual = subspace_residual(S, gs.gens);
      w.ok = w.residual < 1e-12;
      rep.witnesses.push_back(w);
    }
  }
  return rep;
}

}  // namespace lauricella::monodromy
