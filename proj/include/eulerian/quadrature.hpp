#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace eulerian {

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes by Newton iteration on P_order; weights 2 / ((1 - x^2) P'(x)^2).
GaussRule gauss_legendre(unsigned order);

/// Fills out[i] with f(t[i]) for a whole batch of abscissae.
using BatchIntegrand = std::function<void(std::span<const double> t, std::span<double> out)>;

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  unsigned intervals = 0;
};

/// Adaptive bisection with a fixed-order Gauss rule. An interval is accepted
/// once the two-half estimate differs from the whole-interval estimate by less
/// than its share of `abs_tol`. Subintervals are summed left to right, so the
/// result is deterministic. Throws QuadratureError past `max_depth` halvings.
QuadratureResult integrate_adaptive(const BatchIntegrand& f, double lo, double hi, double abs_tol,
                                    unsigned order = 10, unsigned max_depth = 40);

}  // namespace eulerian
