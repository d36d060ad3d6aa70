#pragma once
#include <vector>

#include "lauricella/chains.hpp"
#include "lauricella/cocycles.hpp"
#include "lauricella/connection.hpp"
#include "lauricella/parameters.hpp"
#include "lauricella/types.hpp"

namespace lauricella::numerics {

using chains::TwistedChain;
using cocycles::RationalOneForm;
using parameters::IndexClassification;
using parameters::ParameterVector;
using parameters::PointConfiguration;

// Gamma function by the Lanczos approximation (reflection for Re z < 1/2).
Complex gamma_fn(Complex z);

// Lauricella series summed by total degree; throws domain_error when some
// |x_i| >= 1 or c is a non-positive integer.
Complex fd_series(Complex a, const std::vector<Complex>& b, Complex c,
                  const std::vector<Complex>& x, double tol = 1e-15);

struct QuadratureResult {
  Complex value{0.0, 0.0};
  double error_estimate = 0.0;
  int panels = 0;
};

// Pairing of a rational cocycle representative with a loaded chain,
//   <phi, gamma> = int_gamma u(t) phi     (primal chain)
//   <psi, delta> = int_delta u(t)^{-1} psi (dual chain),
// by adaptive Gauss-Legendre quadrature along the chain's curve model with
// the branch of log u continued from the principal value at the start.
// `loop_scale` shrinks loop radii (invariance testing only).
QuadratureResult period(const RationalOneForm& phi, const TwistedChain& gamma,
                        const ParameterVector& pv, const PointConfiguration& cfg,
                        double tol = 1e-10, double loop_scale = 1.0);

// Value of u (continued along the chain's path model) at the finite endpoint
// site of a PathTo chain; used for the bump cocycles at exponent-zero sites.
Complex u_at_path_end(int site, bool dual, const ParameterVector& pv,
                      const PointConfiguration& cfg);

// <phi_{i,m+2}, gamma_j> for i = 1..m+1 against the canonical homology basis;
// rows follow the residue-matrix frame of the connection module.
Matrix frame_periods(const ParameterVector& pv, const IndexClassification& cls,
                     const PointConfiguration& cfg, double tol = 1e-10, bool parallel = true);

struct PeriodMatrices {
  Matrix Phi, Psi;
  double error_estimate = 0.0;
};

// Phi_{ij} = <phi_i, gamma_j> and Psi_{ij} = <delta_i, psi_j> in the frame
// cocycle bases and canonical homology bases.
PeriodMatrices period_matrices(const ParameterVector& pv, const IndexClassification& cls,
                               const PointConfiguration& cfg, double tol = 1e-10,
                               bool parallel = true);

// max-norm residual of H = Psi C^{-1} Phi with combinatorial H and
// residue-pairing C.
double verify_tpr(const ParameterVector& pv, const IndexClassification& cls,
                  const PointConfiguration& cfg, double tol = 1e-10, bool parallel = true);

// |Gamma(c)/(Gamma(a)Gamma(c-a)) * int_1^inf u phi_0 - F_D(a,b,c;x)| with the
// integral mapped to (0,1) and integrated on geometrically graded panels.
double euler_check(double a, const std::vector<double>& b, double c, const std::vector<double>& x,
                   double tol = 1e-12);

// Continuation of dY = R_p(x) dx_p Y along a piecewise-linear-plus-circle
// loop of the coordinate x_{moving}; returns Y at the end of the path.
Matrix continue_pfaffian(const connection::ResidueMatrixSet& rs, const ParameterVector& pv,
                         int moving, const std::vector<Complex>& x_base,
                         const std::vector<Complex>& waypoints, Complex center, double radius,
                         const Matrix& Y0, double rtol = 1e-10, double atol = 1e-12);

// Loop rho_{p,q} realized in the moving coordinate: upper-half-plane detour,
// descent to the target, positive circle of radius rho_gap, and return.
struct LoopSpec {
  int moving = 0;                   // index of the moving coordinate, 1..m
  std::vector<Complex> approach;    // waypoints from the base value to the circle
  Complex center{0.0, 0.0};
  double radius = 0.0;
};

LoopSpec monodromy_loop(int p, int q, const PointConfiguration& cfg);

// max over generators of |Y_end - Y_0 M_{p,q}| / scale for the frame period
// solution continued along rho_{p,q}.
double verify_monodromy(const ParameterVector& pv, const IndexClassification& cls,
                        const PointConfiguration& cfg, double tol = 1e-10);

// |Wronskian| of the solutions <phi_0, gamma_j> at the aligned point, via the
// frame period matrix and the derivative identity of the solution space.
double wronskian_abs(const ParameterVector& pv, const IndexClassification& cls,
                     const PointConfiguration& cfg, double tol = 1e-10);

// worst finite-difference residual of the annihilating operators of F_D
// applied to x -> <phi_0, gamma_j>, relative to the solution scale.
double lhgs_residual(const ParameterVector& pv, const IndexClassification& cls,
                     const PointConfiguration& cfg, int j, double h = 1e-3, double tol = 1e-11);

}  // namespace lauricella::numerics
