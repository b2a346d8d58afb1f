#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "tlink/numeric.hpp"

namespace tlink {

/// Integer Laurent polynomial in A. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, std::int64_t>;

  LaurentPoly() = default;
  explicit LaurentPoly(Terms terms);

  static LaurentPoly constant(std::int64_t c) { return monomial(c, 0); }
  static LaurentPoly monomial(std::int64_t c, int exponent);
  /// The loop value d = -A^2 - A^-2.
  static LaurentPoly loop_value();

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_exponent() const;
  int max_exponent() const;
  std::int64_t coefficient(int exponent) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend LaurentPoly operator-(LaurentPoly a);

  LaurentPoly pow(unsigned k) const;
  /// The image under A -> A^-1.
  LaurentPoly substitute_inverse() const;
  LaurentPoly shifted(int exponent) const;

  std::complex<double> evaluate(std::complex<double> a) const;
  std::string str() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_term(int exponent, std::int64_t c);
  Terms terms_;
};

/// Integer polynomial in x and y, keyed by (x exponent, y exponent).
class TuttePoly {
 public:
  using Terms = std::map<std::pair<int, int>, std::int64_t>;

  TuttePoly() = default;
  explicit TuttePoly(Terms terms);

  static TuttePoly one() { return monomial(1, 0, 0); }
  static TuttePoly x() { return monomial(1, 1, 0); }
  static TuttePoly y() { return monomial(1, 0, 1); }
  static TuttePoly monomial(std::int64_t c, int i, int j);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TuttePoly& operator+=(const TuttePoly& o);
  TuttePoly& operator*=(const TuttePoly& o);
  friend TuttePoly operator+(TuttePoly a, const TuttePoly& b) { return a += b; }
  friend TuttePoly operator*(TuttePoly a, const TuttePoly& b) { return a *= b; }

  TuttePoly pow(unsigned k) const;

  double evaluate(double x, double y) const;
  Rational evaluate(const Rational& x, const Rational& y) const;
  BigInt evaluate(const BigInt& x, const BigInt& y) const;
  std::string str() const;

  friend bool operator==(const TuttePoly&, const TuttePoly&) = default;

 private:
  Terms terms_;
};

}  // namespace tlink
