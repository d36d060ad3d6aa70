#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace lauricella {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RowVector = Eigen::RowVectorXcd;

inline constexpr double pi = std::numbers::pi;
inline const Complex iu{0.0, 1.0};
inline const Complex two_pi_i{0.0, 2.0 * pi};

// Thrown on structurally invalid input (bad sizes, malformed values).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when input is well-formed but outside the supported domain
// (colliding points, unresolvable resonance, singular matrices, ...).
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lauricella
