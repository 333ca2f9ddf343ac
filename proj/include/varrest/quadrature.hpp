#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace varrest {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;  // sum to 2
};

// Cached Gauss-Legendre rule with n points (Newton iteration on P_n).
const GaussLegendreRule& gauss_legendre(int n);

// Rule mapped onto [a, b]; weights sum to b - a.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre_on(int n, double a, double b);

// Adaptive Simpson quadrature. `max_evals` bounds the number of integrand
// evaluations; the routine refines until the local error estimate is below
// tol or the budget runs out.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, std::size_t max_evals = 100000);

}  // namespace varrest
