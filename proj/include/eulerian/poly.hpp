#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "eulerian/bigint.hpp"

namespace eulerian {

/// Dense univariate polynomial in t.
///
/// Coefficient i multiplies t^i. The highest stored coefficient is always
/// nonzero, so the zero polynomial is the empty sequence and degree() is -1
/// for it. Values are immutable from the outside; every operation returns a
/// fresh polynomial.
template <typename Coeff>
class BasicPoly {
 public:
  BasicPoly() = default;
  BasicPoly(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }
  explicit BasicPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static BasicPoly constant(const Coeff& c) { return BasicPoly(std::vector<Coeff>{c}); }

  /// c * t^power
  static BasicPoly monomial(const Coeff& c, std::size_t power) {
    std::vector<Coeff> v(power + 1, Coeff(0));
    v[power] = c;
    return BasicPoly(std::move(v));
  }

  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }

  /// Coefficient of t^i; zero beyond the stored range.
  Coeff coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0); }

  template <typename Point>
  Point evaluate(const Point& x) const {
    Point acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Point(*it);
    return acc;
  }

  /// Sum of coefficients, i.e. the value at t = 1.
  Coeff at_one() const {
    Coeff acc = 0;
    for (const auto& c : coeffs_) acc += c;
    return acc;
  }

  BasicPoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Coeff> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = Coeff(static_cast<long>(i)) * coeffs_[i];
    return BasicPoly(std::move(out));
  }

  /// Multiplies by t^power.
  BasicPoly shifted(std::size_t power) const {
    if (is_zero()) return {};
    std::vector<Coeff> out(power, Coeff(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return BasicPoly(std::move(out));
  }

  friend BasicPoly operator+(const BasicPoly& a, const BasicPoly& b) {
    std::vector<Coeff> out(std::max(a.size(), b.size()), Coeff(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b.coeffs_[i];
    return BasicPoly(std::move(out));
  }

  friend BasicPoly operator-(const BasicPoly& a) {
    std::vector<Coeff> out = a.coeffs_;
    for (auto& c : out) c = -c;
    return BasicPoly(std::move(out));
  }

  friend BasicPoly operator-(const BasicPoly& a, const BasicPoly& b) { return a + (-b); }

  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.size() + b.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return BasicPoly(std::move(out));
  }

  friend BasicPoly operator*(const Coeff& s, const BasicPoly& p) {
    std::vector<Coeff> out = p.coeffs_;
    for (auto& c : out) c *= s;
    return BasicPoly(std::move(out));
  }

  friend bool operator==(const BasicPoly& a, const BasicPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, e.g. "1 + 8*t + 6*t^2".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      std::string c = coeffs_[i].get_str(10);
      bool neg = c.front() == '-';
      if (neg) c.erase(c.begin());
      if (!out.empty()) out += neg ? " - " : " + ";
      else if (neg) out += "-";
      if (i == 0) {
        out += c;
        continue;
      }
      if (c != "1") out += c + "*";
      out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using Poly = BasicPoly<BigInt>;
using RatPoly = BasicPoly<Rational>;

/// (1 - t)^power
Poly one_minus_t_pow(unsigned long power);

/// Quotient of p by (1 - t); requires p(1) == 0.
Poly divide_by_one_minus_t(const Poly& p);

/// Coefficient-wise conversion to rational coefficients.
RatPoly to_rat_poly(const Poly& p);

}  // namespace eulerian
