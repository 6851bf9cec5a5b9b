#include "bezplan/bernstein.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bezplan {

namespace {

void check_degree(int n) {
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  if (n > kMaxDegree)
    throw std::invalid_argument("degree " + std::to_string(n) + " exceeds cap " +
                                std::to_string(kMaxDegree));
}

void check_t(double t) {
  if (!(t >= 0.0 && t <= 1.0))
    throw std::invalid_argument("curve parameter t must lie in [0,1]");
}

__int128 binomial128(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact at every step: r*(n-k+i) divisible by i
  }
  return r;
}

}  // namespace

std::int64_t binomial(int n, int k) {
  if (n < 0 || n > 2 * kMaxDegree)
    throw std::invalid_argument("binomial: n out of supported range");
  return static_cast<std::int64_t>(binomial128(n, k));
}

double falling_factorial(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("falling_factorial: need 0 <= k <= n");
  __int128 r = 1;
  for (int i = 0; i < k; ++i) r *= (n - i);
  return static_cast<double>(r);
}

Eigen::VectorXd bernstein_basis(int n, double t) {
  check_degree(n);
  check_t(t);
  Eigen::VectorXd b(n + 1);
  // two sweeps: b[i] = C(n,i) t^i (1-t)^(n-i) without pow()
  double p = 1.0;
  for (int i = 0; i <= n; ++i) {
    b[i] = p * static_cast<double>(binomial(n, i));
    p *= t;
  }
  p = 1.0;
  for (int i = n; i >= 0; --i) {
    b[i] *= p;
    p *= 1.0 - t;
  }
  return b;
}

Eigen::MatrixXd diff_matrix(int n, int k) {
  check_degree(n);
  if (k < 0 || k > n) throw std::invalid_argument("diff_matrix: need 0 <= k <= n");
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n - k + 1, n + 1);
  for (int i = 0; i <= n - k; ++i)
    for (int j = i; j <= i + k; ++j) {
      const double sign = ((k - j + i) % 2 == 0) ? 1.0 : -1.0;
      d(i, j) = sign * static_cast<double>(binomial(k, j - i));
    }
  return d;
}

Eigen::MatrixXd norm_hessian(int n, int m) {
  check_degree(n);
  check_degree(m);
  Eigen::MatrixXd h(n + 1, m + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= m; ++j) {
      const __int128 num = static_cast<__int128>(binomial(n, i)) * binomial(m, j);
      const __int128 den = static_cast<__int128>(m + n + 1) * binomial(m + n, i + j);
      h(i, j) = static_cast<double>(num) / static_cast<double>(den);
    }
  return h;
}

Eigen::MatrixXd mean_shift(int n) {
  check_degree(n);
  const int sz = n + 1;
  return Eigen::MatrixXd::Identity(sz, sz) -
         Eigen::MatrixXd::Constant(sz, sz, 1.0 / sz);
}

BezierCurve::BezierCurve(Eigen::MatrixXd control_points) : points_(std::move(control_points)) {
  if (points_.rows() < 1 || points_.cols() < 1)
    throw std::invalid_argument("BezierCurve: control-point matrix must be nonempty");
  check_degree(static_cast<int>(points_.rows()) - 1);
  if (!points_.allFinite())
    throw std::invalid_argument("BezierCurve: control points must be finite");
}

Eigen::VectorXd BezierCurve::eval(double t) const {
  check_t(t);
  return points_.transpose() * bernstein_basis(degree(), t);
}

BezierCurve::Derivative BezierCurve::derivative_control(int k) const {
  const int n = degree();
  if (k < 0 || k > n) throw std::invalid_argument("derivative_control: need 0 <= k <= n");
  return {falling_factorial(n, k), BezierCurve(diff_matrix(n, k) * points_)};
}

Eigen::VectorXd BezierCurve::derivative_at(int k, double t) const {
  const Derivative d = derivative_control(k);
  return d.scale * d.curve.eval(t);
}

double bezier_inner_product(const BezierCurve& p, const BezierCurve& q) {
  if (p.dim() != q.dim())
    throw std::invalid_argument("bezier_inner_product: dimension mismatch");
  return (p.points().transpose() * norm_hessian(p.degree(), q.degree()) * q.points()).trace();
}

Eigen::VectorXd curve_mean(const BezierCurve& p) {
  return p.points().colwise().mean();
}

double curve_variance(const BezierCurve& p) {
  const Eigen::MatrixXd s = mean_shift(p.degree());
  const Eigen::MatrixXd shifted = s * p.points();
  return (shifted.transpose() * norm_hessian(p.degree()) * shifted).trace();
}

double control_point_variance(const Eigen::MatrixXd& points) {
  const int n = static_cast<int>(points.rows()) - 1;
  const Eigen::MatrixXd s = mean_shift(n);
  return (points.transpose() * s * points).trace() / (n + 1);
}

}  // namespace bezplan
