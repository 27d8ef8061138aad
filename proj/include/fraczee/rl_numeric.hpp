#pragma once

#include <functional>
#include <vector>

#include "fraczee/monomial.hpp"

namespace fraczee {

// Nodes and weights for integral_{-1}^{1} (1-t)^a (1+t)^b g(t) dt.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Golub-Welsch on the Jacobi recurrence. Requires a, b > -1.
QuadratureRule gauss_jacobi(int n, double a, double b);

inline constexpr int kDefaultQuadNodes = 64;

// Left Riemann-Liouville derivative with lower terminal 0, computed without
// the power rule:
//   d/dx [ 1/Gamma(1-alpha) integral_0^x (x-s)^(-alpha) f(s) ds ]
// The inner integral uses Gauss-Jacobi with the (x-s)^(-alpha) weight folded
// in; the outer derivative is a central difference with step x * 1e-5.
double rl_derivative_quad(const std::function<double(double)>& f, double alpha, double x,
                          int nodes = kDefaultQuadNodes);

// Partial sum k = 0..terms of the fractional Leibniz series
//   sum_k binom(alpha, k) (d^k phi) (d^(alpha-k) psi).
// phi must carry non-negative integer exponents on `axis`; the series then
// terminates at its degree.
PolyExpr leibniz_series(const PolyExpr& phi, const PolyExpr& psi, Axis axis, double alpha,
                        unsigned terms);

}  // namespace fraczee
