#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lauricella/rational.hpp"
#include "lauricella/types.hpp"

namespace lauricella::parameters {

// One exponent entry.  `exact` is set only when the value was given as an
// exact rational; integrality decisions are made on exact entries only.
struct ParameterEntry {
  Complex value{0.0, 0.0};
  std::optional<Rational> exact;

  bool is_integer() const { return exact && exact->is_integer(); }
};

// Exponent vector (alpha_0, ..., alpha_{m+2}) attached to the m+3 marked
// points (0, x_1, ..., x_m, 1, infinity); the entries sum to zero.
struct ParameterVector {
  int m = 0;
  std::vector<ParameterEntry> alpha;  // size m+3

  const ParameterEntry& operator[](int i) const { return alpha.at(i); }
  int n_sites() const { return m + 3; }

  // Local monodromy factors exp(2 pi i alpha_i).
  std::vector<Complex> lambdas() const;

  static ParameterVector from_alpha(const std::vector<ParameterEntry>& entries);
  static ParameterVector from_alpha(const std::vector<Complex>& values);
  static ParameterVector from_alpha_exact(const std::vector<Rational>& values);

  // alpha = (sum(b) - c, -b_1, ..., -b_m, c - a, a).
  static ParameterVector from_abc(Complex a, const std::vector<Complex>& b, Complex c);
  static ParameterVector from_abc_exact(const Rational& a, const std::vector<Rational>& b,
                                        const Rational& c);
};

// Partition of the site indices by integrality and by the local order of the
// loaded reference form, together with the slot sequence (i_0, ..., i_{m+2})
// and the left-to-right alignment used to place the points on the real line.
struct IndexClassification {
  int m = 0;
  std::vector<int> iN0;   // integral sites where the loaded form is regular
  std::vector<int> iNeg;  // integral sites with a genuine pole
  std::vector<int> iZc;   // non-integral sites
  int r = 0;              // #iN0
  int s = 0;              // #iNeg
  bool all_integral = false;

  // slot[j] = site index occupying slot i_j, j = 0..m+2.
  std::vector<int> slot;

  // Finite sites left to right along the real axis; site m+2 (infinity) is
  // appended at the correct end and flagged below.
  std::vector<int> order;   // all m+3 sites, aligned order
  bool inf_at_left = false; // site m+2 sits at -infinity

  std::vector<std::string> warnings;

  bool in_N0(int site) const;
  bool in_Neg(int site) const;
  bool in_Zc(int site) const;
};

// Real positions of the finite marked points; x[0] = 0, x[m+1] = 1,
// x[m+2] is unused (the point at infinity).
struct PointConfiguration {
  int m = 0;
  std::vector<double> x;  // size m+3
  bool inf_at_left = false;
};

// Order of u * dt/(t-1) at site i (alpha_i at finite marked points other
// than 1; shifted by the simple pole of the reference form at 1 and at
// infinity).  Only meaningful as an integer when alpha_i is integral.
Rational site_order(const ParameterVector& pv, int site);

IndexClassification classify(const ParameterVector& pv);

// Places the free points so that consecutive free points are `spacing`
// apart, compatible with the alignment in `cls`.  spacing <= 0 selects the
// default 1/(m+2).  Throws domain_error when the alignment cannot be
// realized with the anchors 0 and 1.
PointConfiguration aligned_configuration(const IndexClassification& cls, double spacing = 0.0);

// Same, but with prescribed positions for x_1..x_m (checked against the
// alignment order).
PointConfiguration configuration_from_points(const IndexClassification& cls,
                                             const std::vector<double>& x_free);

}  // namespace lauricella::parameters
