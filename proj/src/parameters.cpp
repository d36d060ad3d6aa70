#include "lauricella/parameters.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace lauricella {

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw input_error("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::int64_t p = std::stoll(s.substr(0, slash));
    std::int64_t q = std::stoll(s.substr(slash + 1));
    return Rational(p, q);
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(std::stoll(s), 1);
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  std::int64_t den = 1;
  for (size_t k = dot + 1; k < s.size(); ++k) den *= 10;
  return Rational(std::stoll(digits), den);
}

}  // namespace lauricella

namespace lauricella::parameters {

std::vector<Complex> ParameterVector::lambdas() const {
  std::vector<Complex> out;
  out.reserve(alpha.size());
  for (const auto& e : alpha) out.push_back(std::exp(two_pi_i * e.value));
  return out;
}

static void check_sum(const ParameterVector& pv) {
  bool all_exact = true;
  Rational sum_exact(0);
  Complex sum{0.0, 0.0};
  for (const auto& e : pv.alpha) {
    sum += e.value;
    if (e.exact)
      sum_exact = sum_exact + *e.exact;
    else
      all_exact = false;
  }
  if (all_exact) {
    if (!(sum_exact == Rational(0))) throw input_error("exponents must sum to zero");
  } else if (std::abs(sum) > 1e-12) {
    throw input_error("exponents must sum to zero");
  }
}

ParameterVector ParameterVector::from_alpha(const std::vector<ParameterEntry>& entries) {
  if (entries.size() < 3) throw input_error("need at least 3 exponents");
  ParameterVector pv;
  pv.m = int(entries.size()) - 3;
  pv.alpha = entries;
  check_sum(pv);
  return pv;
}

ParameterVector ParameterVector::from_alpha(const std::vector<Complex>& values) {
  std::vector<ParameterEntry> entries;
  for (auto v : values) entries.push_back({v, std::nullopt});
  return from_alpha(entries);
}

ParameterVector ParameterVector::from_alpha_exact(const std::vector<Rational>& values) {
  std::vector<ParameterEntry> entries;
  for (const auto& v : values) entries.push_back({Complex(v.value(), 0.0), v});
  return from_alpha(entries);
}

ParameterVector ParameterVector::from_abc(Complex a, const std::vector<Complex>& b, Complex c) {
  std::vector<ParameterEntry> entries(b.size() + 3);
  Complex bsum{0.0, 0.0};
  for (size_t i = 0; i < b.size(); ++i) {
    bsum += b[i];
    entries[i + 1] = {-b[i], std::nullopt};
  }
  entries[0] = {bsum - c, std::nullopt};
  entries[b.size() + 1] = {c - a, std::nullopt};
  entries[b.size() + 2] = {a, std::nullopt};
  return from_alpha(entries);
}

ParameterVector ParameterVector::from_abc_exact(const Rational& a, const std::vector<Rational>& b,
                                                const Rational& c) {
  std::vector<Rational> vals(b.size() + 3);
  Rational bsum(0);
  for (size_t i = 0; i < b.size(); ++i) {
    bsum = bsum + b[i];
    vals[i + 1] = -b[i];
  }
  vals[0] = bsum - c;
  vals[b.size() + 1] = c - a;
  vals[b.size() + 2] = a;
  return from_alpha_exact(vals);
}

Rational site_order(const ParameterVector& pv, int site) {
  if (site < 0 || site >= pv.n_sites()) throw input_error("site index out of range");
  const auto& e = pv[site];
  if (!e.exact) throw input_error("site_order needs an exact exponent");
  if (site <= pv.m) return *e.exact;
  return *e.exact - Rational(1);  // simple pole of dt/(t-1) at 1 and at infinity
}

bool IndexClassification::in_N0(int site) const {
  return std::find(iN0.begin(), iN0.end(), site) != iN0.end();
}
bool IndexClassification::in_Neg(int site) const {
  return std::find(iNeg.begin(), iNeg.end(), site) != iNeg.end();
}
bool IndexClassification::in_Zc(int site) const {
  return std::find(iZc.begin(), iZc.end(), site) != iZc.end();
}

IndexClassification classify(const ParameterVector& pv) {
  IndexClassification cls;
  cls.m = pv.m;
  const int n = pv.n_sites();
  for (int i = 0; i < n; ++i) {
    const auto& e = pv[i];
    if (e.is_integer()) {
      Rational ord = site_order(pv, i);
      if (ord.num >= 0)
        cls.iN0.push_back(i);
      else
        cls.iNeg.push_back(i);
    } else {
      if (!e.exact && std::abs(e.value.imag()) < 1e-9 &&
          std::abs(e.value.real() - std::round(e.value.real())) < 1e-9)
        cls.warnings.push_back("alpha_" + std::to_string(i) +
                               " is numerically close to an integer but not exact; "
                               "treated as non-integral");
      cls.iZc.push_back(i);
    }
  }
  cls.r = int(cls.iN0.size());
  cls.s = int(cls.iNeg.size());
  cls.all_integral = cls.iZc.empty();

  const int m = cls.m, r = cls.r, s = cls.s;
  const int inf = m + 2;
  cls.slot.assign(n, -1);

  auto erase_site = [](std::vector<int> v, int site) {
    v.erase(std::remove(v.begin(), v.end(), site), v.end());
    return v;
  };

  if (!cls.all_integral) {
    std::vector<int> n0 = cls.iN0, neg = cls.iNeg, zc = cls.iZc;
    if (cls.in_Zc(inf)) {
      // infinity occupies the last slot at +infinity; the remaining
      // non-integral sites fill i_0 and the tail block.
      std::vector<int> rest = erase_site(zc, inf);
      cls.slot[0] = rest.front();
      rest.erase(rest.begin());
      rest.push_back(inf);
      for (int j = 0; j < r; ++j) cls.slot[1 + j] = n0[j];
      for (int j = 0; j < s; ++j) cls.slot[r + 1 + j] = neg[j];
      for (size_t j = 0; j < rest.size(); ++j) cls.slot[r + s + 1 + int(j)] = rest[j];
      cls.order.assign(1, cls.slot[0]);
      for (int j = 1; j <= m + 2; ++j) cls.order.push_back(cls.slot[j]);
      cls.inf_at_left = false;
    } else if (cls.in_N0(inf)) {
      // infinity at the far left; i_0 sits at the far right.
      std::vector<int> n0rest = erase_site(n0, inf);
      cls.slot[1] = inf;
      for (size_t j = 0; j < n0rest.size(); ++j) cls.slot[2 + int(j)] = n0rest[j];
      for (int j = 0; j < s; ++j) cls.slot[r + 1 + j] = neg[j];
      cls.slot[0] = zc.back();
      std::vector<int> zcrest = erase_site(zc, zc.back());
      for (size_t j = 0; j < zcrest.size(); ++j) cls.slot[r + s + 1 + int(j)] = zcrest[j];
      cls.order.assign(1, inf);
      for (int j = 2; j <= m + 2; ++j) cls.order.push_back(cls.slot[j]);
      cls.order.push_back(cls.slot[0]);
      cls.inf_at_left = true;
    } else {
      // infinity is an integral pole site: last slot of the middle block.
      std::vector<int> negrest = erase_site(neg, inf);
      for (int j = 0; j < r; ++j) cls.slot[1 + j] = n0[j];
      for (size_t j = 0; j < negrest.size(); ++j) cls.slot[r + 1 + int(j)] = negrest[j];
      cls.slot[r + s] = inf;
      cls.slot[0] = zc.back();
      std::vector<int> zcrest = erase_site(zc, zc.back());
      for (size_t j = 0; j < zcrest.size(); ++j) cls.slot[r + s + 1 + int(j)] = zcrest[j];
      cls.order.clear();
      for (size_t j = 0; j < zcrest.size(); ++j) cls.order.push_back(zcrest[j]);
      cls.order.push_back(cls.slot[0]);
      for (int j = 1; j <= r + s; ++j) cls.order.push_back(cls.slot[j]);
      cls.inf_at_left = false;
    }
  } else {
    // Fully integral: one pole site doubles as the anchor slot i_0.
    if (r == 0 || s == 0) throw domain_error("integral exponents need both regular and pole sites");
    std::vector<int> n0 = cls.iN0, neg = cls.iNeg;
    if (cls.in_Neg(inf)) {
      cls.slot[0] = inf;
      std::vector<int> negrest = erase_site(neg, inf);
      for (int j = 0; j < r; ++j) cls.slot[1 + j] = n0[j];
      for (size_t j = 0; j < negrest.size(); ++j) cls.slot[r + 1 + int(j)] = negrest[j];
      cls.order.clear();
      for (int j = 0; j < r; ++j) cls.order.push_back(n0[j]);
      for (size_t j = 0; j < negrest.size(); ++j) cls.order.push_back(negrest[j]);
      cls.order.push_back(inf);
      cls.inf_at_left = false;
    } else if (cls.in_N0(inf)) {
      cls.slot[1] = inf;
      std::vector<int> n0rest = erase_site(n0, inf);
      for (size_t j = 0; j < n0rest.size(); ++j) cls.slot[2 + int(j)] = n0rest[j];
      cls.slot[0] = neg.back();
      std::vector<int> negrest = erase_site(neg, neg.back());
      for (size_t j = 0; j < negrest.size(); ++j) cls.slot[r + 1 + int(j)] = negrest[j];
      cls.order.assign(1, inf);
      for (size_t j = 0; j < n0rest.size(); ++j) cls.order.push_back(n0rest[j]);
      for (size_t j = 0; j < negrest.size(); ++j) cls.order.push_back(negrest[j]);
      cls.order.push_back(cls.slot[0]);
      cls.inf_at_left = true;
    } else {
      // infinity finite-slot case cannot happen: site m+2 is always integral
      // here, so it lies in one of the two integral classes.
      throw domain_error("unreachable classification state");
    }
  }
  return cls;
}

static PointConfiguration place_points(const IndexClassification& cls, double spacing,
                                       const std::vector<double>* fixed) {
  const int m = cls.m;
  if (spacing <= 0.0) spacing = 1.0 / double(m + 2);
  PointConfiguration cfg;
  cfg.m = m;
  cfg.inf_at_left = cls.inf_at_left;
  cfg.x.assign(m + 3, 0.0);
  cfg.x[m + 1] = 1.0;

  // Finite sites in aligned order.
  std::vector<int> finite;
  for (int site : cls.order)
    if (site != m + 2) finite.push_back(site);

  int k0 = -1, k1 = -1;
  for (size_t k = 0; k < finite.size(); ++k) {
    if (finite[k] == 0) k0 = int(k);
    if (finite[k] == m + 1) k1 = int(k);
  }
  if (k0 < 0 || k1 < 0) throw domain_error("alignment lost an anchor site");
  if (k0 > k1)
    throw domain_error("alignment would require the point 1 to lie left of 0");

  if (fixed) {
    if (int(fixed->size()) != m) throw input_error("expected m free coordinates");
    for (int i = 1; i <= m; ++i) cfg.x[i] = (*fixed)[i - 1];
  } else {
    int nb = k1 - k0 - 1;
    if (nb * spacing >= 1.0)
      throw domain_error("spacing too large to fit the free points between 0 and 1");
    for (int j = 1; j <= nb; ++j) cfg.x[finite[k0 + j]] = j * spacing;
    for (int j = 1; k0 - j >= 0; ++j) cfg.x[finite[k0 - j]] = -j * spacing;
    for (int j = 1; k1 + j < int(finite.size()); ++j) cfg.x[finite[k1 + j]] = 1.0 + j * spacing;
  }

  // Validate strict monotonicity along the aligned order.
  for (size_t k = 0; k + 1 < finite.size(); ++k) {
    double a = cfg.x[finite[k]], b = cfg.x[finite[k + 1]];
    if (!(a < b)) throw domain_error("point configuration violates the aligned order");
  }
  return cfg;
}

PointConfiguration aligned_configuration(const IndexClassification& cls, double spacing) {
  return place_points(cls, spacing, nullptr);
}

PointConfiguration configuration_from_points(const IndexClassification& cls,
                                             const std::vector<double>& x_free) {
  return place_points(cls, 0.0, &x_free);
}

}  // namespace lauricella::parameters
