#include "tlink/polynomial.hpp"

#include <cmath>
#include <sstream>

#include "tlink/error.hpp"

namespace tlink {

namespace {

template <class T>
T power_of(const T& base, int exponent) {
  T result(1);
  for (int k = 0; k < exponent; ++k) result *= base;
  return result;
}

}  // namespace

LaurentPoly::LaurentPoly(Terms terms) {
  for (auto [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(std::int64_t c, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::loop_value() { return LaurentPoly({{-2, -1}, {2, -1}}); }

void LaurentPoly::add_term(int exponent, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted && (it->second += c) == 0) terms_.erase(it);
}

int LaurentPoly::min_exponent() const {
  if (is_zero()) throw DomainError("zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (is_zero()) throw DomainError("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

std::int64_t LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (auto [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly product;
  for (auto [e1, c1] : terms_)
    for (auto [e2, c2] : o.terms_) product.add_term(e1 + e2, c1 * c2);
  terms_ = std::move(product.terms_);
  return *this;
}

LaurentPoly operator-(LaurentPoly a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result = constant(1);
  for (unsigned i = 0; i < k; ++i) result *= *this;
  return result;
}

LaurentPoly LaurentPoly::substitute_inverse() const {
  LaurentPoly p;
  for (auto [e, c] : terms_) p.add_term(-e, c);
  return p;
}

LaurentPoly LaurentPoly::shifted(int exponent) const {
  LaurentPoly p;
  for (auto [e, c] : terms_) p.add_term(e + exponent, c);
  return p;
}

std::complex<double> LaurentPoly::evaluate(std::complex<double> a) const {
  std::complex<double> sum = 0.0;
  for (auto [e, c] : terms_) sum += static_cast<double>(c) * std::pow(a, e);
  return sum;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    std::int64_t mag = c < 0 ? -c : c;
    if (e == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      out << "A^" << e;
    }
    first = false;
  }
  return out.str();
}

TuttePoly::TuttePoly(Terms terms) {
  for (auto [k, c] : terms)
    if (c != 0) terms_[k] += c;
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

TuttePoly TuttePoly::monomial(std::int64_t c, int i, int j) { return TuttePoly({{{i, j}, c}}); }

TuttePoly& TuttePoly::operator+=(const TuttePoly& o) {
  for (auto [k, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted && (it->second += c) == 0) terms_.erase(it);
  }
  return *this;
}

TuttePoly& TuttePoly::operator*=(const TuttePoly& o) {
  Terms product;
  for (auto [k1, c1] : terms_)
    for (auto [k2, c2] : o.terms_) product[{k1.first + k2.first, k1.second + k2.second}] += c1 * c2;
  *this = TuttePoly(std::move(product));
  return *this;
}

TuttePoly TuttePoly::pow(unsigned k) const {
  TuttePoly result = one();
  for (unsigned i = 0; i < k; ++i) result *= *this;
  return result;
}

double TuttePoly::evaluate(double x, double y) const {
  double sum = 0.0;
  for (auto [k, c] : terms_)
    sum += static_cast<double>(c) * std::pow(x, k.first) * std::pow(y, k.second);
  return sum;
}

Rational TuttePoly::evaluate(const Rational& x, const Rational& y) const {
  Rational sum = 0;
  for (auto [k, c] : terms_) sum += Rational(c) * power_of(x, k.first) * power_of(y, k.second);
  return sum;
}

BigInt TuttePoly::evaluate(const BigInt& x, const BigInt& y) const {
  BigInt sum = 0;
  for (auto [k, c] : terms_) sum += BigInt(c) * power_of(x, k.first) * power_of(y, k.second);
  return sum;
}

std::string TuttePoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [k, c] = *it;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    std::int64_t mag = c < 0 ? -c : c;
    bool bare = k.first == 0 && k.second == 0;
    if (mag != 1 || bare) out << mag;
    if (k.first > 0) out << (mag != 1 ? "*" : "") << "x" << (k.first > 1 ? "^" + std::to_string(k.first) : "");
    if (k.second > 0)
      out << ((mag != 1 || k.first > 0) ? "*" : "") << "y"
          << (k.second > 1 ? "^" + std::to_string(k.second) : "");
    first = false;
  }
  return out.str();
}

}  // namespace tlink
