#include "fraczee/rl_numeric.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

#include "fraczee/error.hpp"
#include "fraczee/specfun.hpp"

namespace fraczee {

QuadratureRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) {
    throw DomainError("gauss_jacobi: need at least one node");
  }
  if (!(a > -1.0) || !(b > -1.0)) {
    throw DomainError("gauss_jacobi: exponents must exceed -1");
  }
  const double ab = a + b;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 1));
  diag(0) = (b - a) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag(k) = (b * b - a * a) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    double beta = 0.0;
    if (k == 1) {
      // (1+a+b) cancels analytically; keeps a+b = -1 well defined.
      beta = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    sub(k - 1) = std::sqrt(beta);
  }

  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double mu0 = std::exp2(ab + 1.0) * gamma(a + 1.0) * gamma(b + 1.0) * rgamma(ab + 2.0);
  if (n == 1) {
    rule.nodes[0] = diag(0);
    rule.weights[0] = mu0;
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
  const auto& vecs = solver.eigenvectors();
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = solver.eigenvalues()(i);
    rule.weights[i] = mu0 * vecs(0, i) * vecs(0, i);
  }
  return rule;
}

double rl_derivative_quad(const std::function<double(double)>& f, double alpha, double x,
                          int nodes) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError(fmt::format("rl_derivative_quad: alpha {} outside (0, 1)", alpha));
  }
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(fmt::format("rl_derivative_quad: x {} must be positive", x));
  }
  // s = X (1+t)/2 maps [-1, 1] onto [0, X] and X - s = X (1-t)/2.
  const QuadratureRule rule = gauss_jacobi(nodes, -alpha, 0.0);
  const double scale = rgamma(1.0 - alpha);
  auto integral = [&](double upper) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double v = f(0.5 * upper * (1.0 + rule.nodes[i]));
      if (!std::isfinite(v)) {
        throw DomainError("rl_derivative_quad: non-finite sample of f");
      }
      sum += rule.weights[i] * v;
    }
    return std::pow(0.5 * upper, 1.0 - alpha) * sum * scale;
  };
  const double h = x * 1e-5;
  return (integral(x + h) - integral(x - h)) / (2.0 * h);
}

PolyExpr leibniz_series(const PolyExpr& phi, const PolyExpr& psi, Axis axis, double alpha,
                        unsigned terms) {
  for (const auto& t : phi.terms()) {
    const double e = t.exponent(axis);
    if (e < 0.0 || e != std::floor(e)) {
      throw DomainError(fmt::format(
          "leibniz_series: phi needs non-negative integer exponents on {}, got {}",
          axis_name(axis), e));
    }
  }
  PolyExpr sum;
  PolyExpr phi_k = phi;
  for (unsigned k = 0; k <= terms; ++k) {
    if (k > 0) {
      phi_k = rl_derive(phi_k, axis, 1.0);
    }
    if (phi_k.empty()) {
      break;
    }
    const double c = frac_binomial(alpha, k);
    if (c == 0.0) {
      continue;
    }
    sum += c * (phi_k * rl_derive(psi, axis, alpha - static_cast<double>(k)));
  }
  return sum;
}

}  // namespace fraczee
