#include "bezplan/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bezplan/bernstein.hpp"

namespace bezplan {

namespace {

void check_family_order(ObjectiveFamily family, int k, int n) {
  const bool is_norm = family == ObjectiveFamily::kDerivativeNorm ||
                       family == ObjectiveFamily::kDifferenceNorm;
  const int min_k = is_norm ? 1 : 0;
  if (k < min_k || k > n)
    throw std::invalid_argument(family_name(family) + " requires " + std::to_string(min_k) +
                                " <= k <= n; got k=" + std::to_string(k) +
                                ", n=" + std::to_string(n));
}

RationalMatrix rat_diff_matrix(int n, int k) {
  RationalMatrix d = rat_zeros(n - k + 1, n + 1);
  for (int i = 0; i <= n - k; ++i)
    for (int j = i; j <= i + k; ++j) {
      const std::int64_t sign = ((k - j + i) % 2 == 0) ? 1 : -1;
      d[i][j] = Rational(sign * binomial(k, j - i));
    }
  return d;
}

RationalMatrix rat_norm_hessian(int n) {
  RationalMatrix h = rat_zeros(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      h[i][j] = Rational(static_cast<__int128>(binomial(n, i)) * binomial(n, j),
                         static_cast<__int128>(2 * n + 1) * binomial(2 * n, i + j));
  return h;
}

RationalMatrix rat_mean_shift(int n) {
  RationalMatrix s = rat_zeros(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      s[i][j] = (i == j ? Rational(1) : Rational(0)) - Rational(1, n + 1);
  return s;
}

}  // namespace

std::string family_name(ObjectiveFamily family) {
  switch (family) {
    case ObjectiveFamily::kDerivativeNorm: return "derivative-norm";
    case ObjectiveFamily::kDifferenceNorm: return "difference-norm";
    case ObjectiveFamily::kDerivativeVariance: return "derivative-variance";
    case ObjectiveFamily::kDifferenceVariance: return "difference-variance";
    case ObjectiveFamily::kCustomLaplacian: return "custom-laplacian";
  }
  return "unknown";
}

Eigen::MatrixXd resolve_hessian(const ObjectiveSpec& spec, int degree) {
  const int n = degree;
  const int k = spec.order;
  switch (spec.family) {
    case ObjectiveFamily::kDerivativeNorm: {
      check_family_order(spec.family, k, n);
      const Eigen::MatrixXd d = diff_matrix(n, k);
      return d.transpose() * norm_hessian(n - k) * d;
    }
    case ObjectiveFamily::kDifferenceNorm: {
      check_family_order(spec.family, k, n);
      const Eigen::MatrixXd d = diff_matrix(n, k);
      return d.transpose() * d;
    }
    case ObjectiveFamily::kDerivativeVariance: {
      check_family_order(spec.family, k, n);
      const Eigen::MatrixXd d = diff_matrix(n, k);
      const Eigen::MatrixXd s = mean_shift(n - k);
      return d.transpose() * s * norm_hessian(n - k) * s * d;
    }
    case ObjectiveFamily::kDifferenceVariance: {
      check_family_order(spec.family, k, n);
      const Eigen::MatrixXd d = diff_matrix(n, k);
      return d.transpose() * mean_shift(n - k) * d;
    }
    case ObjectiveFamily::kCustomLaplacian: {
      if (!spec.custom) throw std::invalid_argument("custom objective requires a matrix");
      const Eigen::MatrixXd& l = *spec.custom;
      if (l.rows() != n + 1 || l.cols() != n + 1)
        throw std::invalid_argument("custom Laplacian has wrong size for degree");
      if ((l - l.transpose()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("custom Laplacian must be symmetric");
      if ((l * Eigen::VectorXd::Ones(n + 1)).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("custom Laplacian must satisfy L 1 = 0");
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(l);
      if (es.eigenvalues().minCoeff() < -1e-10)
        throw std::invalid_argument("custom Laplacian must be positive semidefinite");
      return l;
    }
  }
  throw std::invalid_argument("unknown objective family");
}

RationalMatrix resolve_hessian_exact(ObjectiveFamily family, int order, int degree) {
  const int n = degree;
  const int k = order;
  check_family_order(family, k, n);
  const RationalMatrix d = rat_diff_matrix(n, k);
  const RationalMatrix dt = rat_transpose(d);
  switch (family) {
    case ObjectiveFamily::kDerivativeNorm:
      return rat_mul(dt, rat_mul(rat_norm_hessian(n - k), d));
    case ObjectiveFamily::kDifferenceNorm:
      return rat_mul(dt, d);
    case ObjectiveFamily::kDerivativeVariance: {
      const RationalMatrix s = rat_mean_shift(n - k);
      return rat_mul(dt, rat_mul(s, rat_mul(rat_norm_hessian(n - k), rat_mul(s, d))));
    }
    case ObjectiveFamily::kDifferenceVariance:
      return rat_mul(dt, rat_mul(rat_mean_shift(n - k), d));
    default:
      throw std::invalid_argument("exact resolution needs a standard family");
  }
}

InteractionGraph interaction_weights(const Eigen::MatrixXd& laplacian) {
  if (laplacian.rows() != laplacian.cols())
    throw std::invalid_argument("interaction_weights: matrix must be square");
  if ((laplacian - laplacian.transpose()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("interaction_weights: matrix must be symmetric");
  const int sz = static_cast<int>(laplacian.rows());
  if ((laplacian * Eigen::VectorXd::Ones(sz)).cwiseAbs().maxCoeff() > 1e-8)
    throw std::invalid_argument("interaction_weights: matrix must satisfy L 1 = 0");
  InteractionGraph g;
  g.degree = sz - 1;
  g.weights = -laplacian;
  g.weights.diagonal().setZero();
  return g;
}

InteractionGraph normalized_weights(const InteractionGraph& g) {
  InteractionGraph out = g;
  double min_nonzero = std::numeric_limits<double>::infinity();
  for (int i = 0; i < out.weights.rows(); ++i)
    for (int j = 0; j < out.weights.cols(); ++j) {
      double& w = out.weights(i, j);
      if (std::abs(w) < 1e-12) {
        w = 0.0;  // structural zero, not a tiny edge
      } else {
        min_nonzero = std::min(min_nonzero, std::abs(w));
      }
    }
  if (!std::isfinite(min_nonzero))
    throw std::invalid_argument("normalized_weights: all-zero interaction graph");
  out.weights /= min_nonzero;
  return out;
}

RationalMatrix interaction_weights_exact(const RationalMatrix& laplacian) {
  const int sz = static_cast<int>(laplacian.size());
  RationalMatrix w = rat_zeros(sz, sz);
  for (int i = 0; i < sz; ++i) {
    Rational row_sum;
    for (int j = 0; j < sz; ++j) {
      if (laplacian[i][j] != laplacian[j][i])
        throw std::invalid_argument("interaction_weights_exact: matrix must be symmetric");
      row_sum += laplacian[i][j];
      if (i != j) w[i][j] = -laplacian[i][j];
    }
    if (!row_sum.is_zero())
      throw std::invalid_argument("interaction_weights_exact: matrix must satisfy L 1 = 0");
  }
  return w;
}

RationalMatrix normalized_weights_exact(const RationalMatrix& weights) {
  const int sz = static_cast<int>(weights.size());
  std::optional<Rational> min_nonzero;
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j < sz; ++j) {
      if (weights[i][j].is_zero()) continue;
      const Rational a = weights[i][j].abs();
      if (!min_nonzero || a < *min_nonzero) min_nonzero = a;
    }
  if (!min_nonzero)
    throw std::invalid_argument("normalized_weights_exact: all-zero interaction graph");
  RationalMatrix out = rat_zeros(sz, sz);
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j < sz; ++j) out[i][j] = weights[i][j] / *min_nonzero;
  return out;
}

double hessian_distance(const Eigen::MatrixXd& ha, const Eigen::MatrixXd& hb) {
  if (ha.rows() != hb.rows() || ha.cols() != hb.cols())
    throw std::invalid_argument("hessian_distance: shape mismatch");
  const double na = ha.norm();
  const double nb = hb.norm();
  if (na == 0.0 || nb == 0.0)
    throw std::invalid_argument("hessian_distance: zero matrix");
  return 0.5 * (ha / na - hb / nb).norm();
}

Dendrogram complete_linkage(const std::vector<std::string>& labels,
                            const Eigen::MatrixXd& distances) {
  const int n = static_cast<int>(labels.size());
  if (n < 2) throw std::invalid_argument("complete_linkage: need at least 2 items");
  if (distances.rows() != n || distances.cols() != n)
    throw std::invalid_argument("complete_linkage: distance matrix size mismatch");
  if ((distances - distances.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("complete_linkage: distance matrix must be symmetric");
  if (distances.diagonal().cwiseAbs().maxCoeff() > 0.0)
    throw std::invalid_argument("complete_linkage: diagonal must be zero");
  if (distances.minCoeff() < 0.0)
    throw std::invalid_argument("complete_linkage: distances must be nonnegative");

  Dendrogram out;
  out.labels = labels;
  out.distances = distances;

  struct Cluster {
    int id;
    std::vector<int> items;
  };
  std::vector<Cluster> active;
  for (int i = 0; i < n; ++i) active.push_back({i, {i}});

  auto linkage = [&](const Cluster& a, const Cluster& b) {
    double d = 0.0;
    for (int i : a.items)
      for (int j : b.items) d = std::max(d, distances(i, j));
    return d;
  };

  int next_id = n;
  while (active.size() > 1) {
    double best_d = std::numeric_limits<double>::infinity();
    size_t bi = 0, bj = 1;
    for (size_t i = 0; i < active.size(); ++i)
      for (size_t j = i + 1; j < active.size(); ++j) {
        const double d = linkage(active[i], active[j]);
        const int a = std::min(active[i].id, active[j].id);
        const int b = std::max(active[i].id, active[j].id);
        const int ba = std::min(active[bi].id, active[bj].id);
        const int bb = std::max(active[bi].id, active[bj].id);
        if (d < best_d || (d == best_d && std::make_pair(a, b) < std::make_pair(ba, bb))) {
          best_d = d;
          bi = i;
          bj = j;
        }
      }
    Cluster merged;
    merged.id = next_id++;
    merged.items = active[bi].items;
    merged.items.insert(merged.items.end(), active[bj].items.begin(), active[bj].items.end());
    out.merges.push_back({std::min(active[bi].id, active[bj].id),
                          std::max(active[bi].id, active[bj].id), best_d});
    active.erase(active.begin() + bj);
    active.erase(active.begin() + bi);
    active.push_back(merged);
  }
  return out;
}

const std::vector<NamedObjective>& analysis_objectives() {
  static const std::vector<NamedObjective> objs = {
      {"V", ObjectiveSpec::derivative_norm(1)},
      {"A", ObjectiveSpec::derivative_norm(2)},
      {"L", ObjectiveSpec::difference_norm(1)},
      {"H", ObjectiveSpec::difference_norm(2)},
      {"S", ObjectiveSpec::difference_variance(0)},
      {"J", ObjectiveSpec::difference_variance(1)},
  };
  return objs;
}

Dendrogram analyze_objectives(int degree) {
  if (degree < 2) throw std::invalid_argument("analyze_objectives: need degree >= 2");
  const auto& objs = analysis_objectives();
  const int n = static_cast<int>(objs.size());
  std::vector<Eigen::MatrixXd> hessians;
  std::vector<std::string> labels;
  for (const auto& o : objs) {
    hessians.push_back(resolve_hessian(o.spec, degree));
    labels.push_back(o.label);
  }
  Eigen::MatrixXd dist = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      dist(i, j) = dist(j, i) = hessian_distance(hessians[i], hessians[j]);
  return complete_linkage(labels, dist);
}

}  // namespace bezplan
