#include <stdexcept>

#include "eulerian/binom_rat.hpp"
#include "eulerian/poly.hpp"

namespace eulerian {

Poly one_minus_t_pow(unsigned long power) {
  std::vector<BigInt> c(power + 1);
  for (unsigned long j = 0; j <= power; ++j) {
    c[j] = binom(static_cast<long>(power), static_cast<long>(j));
    if (j % 2 == 1) c[j] = -c[j];
  }
  return Poly(std::move(c));
}

Poly divide_by_one_minus_t(const Poly& p) {
  if (p.at_one() != 0) throw std::domain_error("polynomial is not divisible by (1 - t)");
  if (p.is_zero()) return {};
  // p = (1 - t) q  gives  q_i = p_i + q_{i-1}
  const auto& a = p.coeffs();
  std::vector<BigInt> q(a.size() - 1);
  BigInt run = 0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    run += a[i];
    q[i] = run;
  }
  return Poly(std::move(q));
}

RatPoly to_rat_poly(const Poly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

BinomRat::BinomRat(Poly num, unsigned long pow) : num_(std::move(num)), pow_(pow) {
  if (num_.is_zero()) {
    pow_ = 0;
    return;
  }
  while (pow_ > 0 && num_.at_one() == 0) {
    num_ = divide_by_one_minus_t(num_);
    --pow_;
  }
}

BinomRat BinomRat::derivative() const {
  // d/dt [N (1-t)^-p] = (N' (1-t) + p N) (1-t)^-(p+1)
  Poly one_minus_t{BigInt(1), BigInt(-1)};
  Poly top = num_.derivative() * one_minus_t + BigInt(static_cast<unsigned long>(pow_)) * num_;
  return BinomRat(std::move(top), pow_ + 1);
}

std::vector<BigInt> BinomRat::series(std::size_t terms) const {
  std::vector<BigInt> out(terms, BigInt(0));
  if (terms == 0 || num_.is_zero()) return out;
  // 1/(1-t)^p = sum_j C(p-1+j, j) t^j
  std::vector<BigInt> kernel(terms);
  for (std::size_t j = 0; j < terms; ++j) {
    kernel[j] = pow_ == 0 ? BigInt(j == 0 ? 1 : 0)
                          : binom(static_cast<long>(pow_ - 1 + j), static_cast<long>(j));
  }
  const auto& a = num_.coeffs();
  for (std::size_t i = 0; i < a.size() && i < terms; ++i) {
    for (std::size_t j = 0; i + j < terms; ++j) out[i + j] += a[i] * kernel[j];
  }
  return out;
}

BinomRat BinomRat::times_one_minus_t(long exponent) const {
  if (exponent <= 0) return BinomRat(num_, pow_ + static_cast<unsigned long>(-exponent));
  auto e = static_cast<unsigned long>(exponent);
  if (e <= pow_) return BinomRat(num_, pow_ - e);
  return BinomRat(num_ * one_minus_t_pow(e - pow_), 0);
}

BinomRat operator+(const BinomRat& a, const BinomRat& b) {
  unsigned long p = std::max(a.pow_, b.pow_);
  Poly top = a.num_ * one_minus_t_pow(p - a.pow_) + b.num_ * one_minus_t_pow(p - b.pow_);
  return BinomRat(std::move(top), p);
}

BinomRat operator*(const BinomRat& a, const BinomRat& b) {
  return BinomRat(a.num_ * b.num_, a.pow_ + b.pow_);
}

BinomRat operator*(const Poly& p, const BinomRat& r) { return BinomRat(p * r.num_, r.pow_); }

bool operator==(const BinomRat& a, const BinomRat& b) {
  unsigned long p = std::max(a.pow_, b.pow_);
  return a.num_ * one_minus_t_pow(p - a.pow_) == b.num_ * one_minus_t_pow(p - b.pow_);
}

std::string BinomRat::to_string() const {
  if (pow_ == 0) return num_.to_string();
  std::string den = pow_ == 1 ? "(1 - t)" : "(1 - t)^" + std::to_string(pow_);
  return "(" + num_.to_string() + ") / " + den;
}

}  // namespace eulerian
