#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "lauricella/types.hpp"

namespace lauricella {

// Exact rational p/q used to make integrality decisions reliable.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw input_error("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  bool is_integer() const { return den == 1; }
  double value() const { return double(num) / double(den); }

  Rational operator+(const Rational& o) const { return {num * o.den + o.num * den, den * o.den}; }
  Rational operator-(const Rational& o) const { return {num * o.den - o.num * den, den * o.den}; }
  Rational operator-() const { return {-num, den}; }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  // Parses "p", "p/q", or a plain decimal like "-0.25" with an exact
  // power-of-ten denominator.
  static Rational parse(const std::string& s);
};

}  // namespace lauricella
