#include "eulerian/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace eulerian {

GaussRule gauss_legendre(unsigned order) {
  if (order == 0) throw std::invalid_argument("Gauss rule needs at least one node");
  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (unsigned i = 0; i < order; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (unsigned j = 2; j <= order; ++j) {
        double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

namespace {

struct Adaptive {
  const BatchIntegrand& f;
  const GaussRule& rule;
  unsigned max_depth;
  std::vector<double> t;
  std::vector<double> y;
  QuadratureResult result;

  double apply(double lo, double hi) {
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) t[i] = mid + half * rule.nodes[i];
    f(t, y);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * y[i];
    return half * sum;
  }

  void refine(double lo, double hi, double whole, double tol, unsigned depth) {
    const double mid = 0.5 * (lo + hi);
    const double left = apply(lo, mid);
    const double right = apply(mid, hi);
    const double diff = std::abs(left + right - whole);
    if (!std::isfinite(left + right)) throw QuadratureError("integrand is not finite on the interval");
    if (diff < tol) {
      result.value += left + right;
      result.error_estimate += diff;
      result.intervals += 2;
      return;
    }
    if (depth >= max_depth) throw QuadratureError("adaptive quadrature did not converge");
    refine(lo, mid, left, 0.5 * tol, depth + 1);
    refine(mid, hi, right, 0.5 * tol, depth + 1);
  }
};

}  // namespace

QuadratureResult integrate_adaptive(const BatchIntegrand& f, double lo, double hi, double abs_tol, unsigned order,
                                    unsigned max_depth) {
  if (!(abs_tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be positive");
  const GaussRule rule = gauss_legendre(order);
  Adaptive state{f, rule, max_depth, std::vector<double>(order), std::vector<double>(order), {}};
  state.refine(lo, hi, state.apply(lo, hi), abs_tol, 0);
  return state.result;
}

}  // namespace eulerian
