#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace bezplan {

// Hard cap on Bezier degree. Binomial ratios stay exactly representable and
// well conditioned up to here; the planner never needs more.
inline constexpr int kMaxDegree = 32;

// C(n, k) with exact integer arithmetic (multiplicative form, 128-bit
// intermediates). Valid for 0 <= n <= 2*kMaxDegree.
std::int64_t binomial(int n, int k);

// n! / (n - k)! as an exact integer product, returned as double.
double falling_factorial(int n, int k);

// Bernstein basis vector b_n(t), entries B_{i,n}(t) = C(n,i) t^i (1-t)^(n-i).
// Nonnegative partition of unity on [0,1]; rejects t outside [0,1].
Eigen::VectorXd bernstein_basis(int n, double t);

// Forward finite-difference matrix D(n,k) in R^{(n-k+1)x(n+1)}:
//   [D(n,k)]_{i+1,j+1} = C(k, j-i) (-1)^{k-j+i} for 0 <= j-i <= k, else 0.
// D(n,0) = I and D(n,k) 1 = 0 for k >= 1. Satisfies the recursion
// D(n,k) = D(n-1,k-1) D(n,1).
Eigen::MatrixXd diff_matrix(int n, int k);

// Bernstein Gram matrix H(n,m) = integral of b_n(t) b_m(t)^T over [0,1]:
//   [H(n,m)]_{i+1,j+1} = C(n,i) C(m,j) / ((m+n+1) C(m+n, i+j)).
// Entries are formed as exact integer ratios before conversion to double.
Eigen::MatrixXd norm_hessian(int n, int m);
inline Eigen::MatrixXd norm_hessian(int n) { return norm_hessian(n, n); }

// Mean-shift projector S(n) = I - 11^T/(n+1). Symmetric, idempotent, S 1 = 0.
Eigen::MatrixXd mean_shift(int n);

// A Bezier curve held as its (n+1) x d control-point matrix, row i = p_i.
class BezierCurve {
 public:
  explicit BezierCurve(Eigen::MatrixXd control_points);

  int degree() const { return static_cast<int>(points_.rows()) - 1; }
  int dim() const { return static_cast<int>(points_.cols()); }
  const Eigen::MatrixXd& points() const { return points_; }

  // B_P(t) = P^T b_n(t). Rejects t outside [0,1].
  Eigen::VectorXd eval(double t) const;

  // k-th derivative as a scaled lower-degree curve:
  //   d^k/dt^k B_P(t) = scale * Q^T b_{n-k}(t),  scale = n!/(n-k)!, Q = D(n,k) P.
  struct Derivative {
    double scale;
    BezierCurve curve;
  };
  Derivative derivative_control(int k) const;

  // Value of the k-th derivative at t.
  Eigen::VectorXd derivative_at(int k, double t) const;

 private:
  Eigen::MatrixXd points_;
};

// Integral of B_P(t)^T B_Q(t) over [0,1] = trace(P^T H(n,m) Q).
// Degrees may differ; dimensions must match.
double bezier_inner_product(const BezierCurve& p, const BezierCurve& q);

// Curve statistics (uniform t on [0,1]):
//   mean(B_P) = mean of control points,
//   var(B_P)  = trace(P^T S(n) H(n) S(n) P) <= var(P)/(n+1),
//   var(P)    = trace(P^T S(n) P)/(n+1).
Eigen::VectorXd curve_mean(const BezierCurve& p);
double curve_variance(const BezierCurve& p);
double control_point_variance(const Eigen::MatrixXd& points);

}  // namespace bezplan
