#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "bezplan/rational.hpp"

namespace bezplan {

// Consensus-objective families over Bezier control points. Each family of
// order k resolves, at degree n, to a PSD matrix that acts as the Hessian of
// the quadratic objective trace(P^T L P) and (except the plain norm Gram
// matrices) as the Laplacian of an interaction graph of the control points.
enum class ObjectiveFamily {
  kDerivativeNorm,      // D(n,k)^T H(n-k) D(n,k)
  kDifferenceNorm,      // D(n,k)^T D(n,k)
  kDerivativeVariance,  // D(n,k)^T S(n-k) H(n-k) S(n-k) D(n,k)
  kDifferenceVariance,  // D(n,k)^T S(n-k) D(n,k)
  kCustomLaplacian,
};

struct ObjectiveSpec {
  ObjectiveFamily family = ObjectiveFamily::kDerivativeNorm;
  int order = 1;
  std::optional<Eigen::MatrixXd> custom;  // only for kCustomLaplacian

  static ObjectiveSpec derivative_norm(int k) { return {ObjectiveFamily::kDerivativeNorm, k, {}}; }
  static ObjectiveSpec difference_norm(int k) { return {ObjectiveFamily::kDifferenceNorm, k, {}}; }
  static ObjectiveSpec derivative_variance(int k) {
    return {ObjectiveFamily::kDerivativeVariance, k, {}};
  }
  static ObjectiveSpec difference_variance(int k) {
    return {ObjectiveFamily::kDifferenceVariance, k, {}};
  }
};

std::string family_name(ObjectiveFamily family);

// Resolves the objective at degree n to its (n+1)x(n+1) Hessian.
// Norms require 1 <= k <= n (a zeroth-order norm has no Laplacian kernel),
// variances 0 <= k <= n. Custom Laplacians must be symmetric PSD with L1 = 0.
Eigen::MatrixXd resolve_hessian(const ObjectiveSpec& spec, int degree);

// Same resolution in exact rational arithmetic (no custom matrices).
RationalMatrix resolve_hessian_exact(ObjectiveFamily family, int order, int degree);

// Interaction weights of a graph Laplacian: W(i,j) = -L(i,j) off-diagonal,
// zero diagonal. Rejects non-symmetric L or ||L 1||_inf > 1e-8.
struct InteractionGraph {
  int degree = 0;                    // nodes are control points 0..degree
  Eigen::MatrixXd weights;           // symmetric, zero diagonal
};
InteractionGraph interaction_weights(const Eigen::MatrixXd& laplacian);

// Divides all weights by the minimum nonzero |weight|; magnitudes below
// 1e-12 are treated as structural zeros first. Rejects an all-zero graph.
InteractionGraph normalized_weights(const InteractionGraph& g);

// Exact-arithmetic counterparts used for the integer-weight tables.
RationalMatrix interaction_weights_exact(const RationalMatrix& laplacian);
RationalMatrix normalized_weights_exact(const RationalMatrix& weights);

// Pairwise normalized Hessian distance 0.5 || Ha/||Ha||_F - Hb/||Hb||_F ||_F.
// Scale-invariant, in [0,1]; rejects zero matrices.
double hessian_distance(const Eigen::MatrixXd& ha, const Eigen::MatrixXd& hb);

// Agglomerative complete-linkage clustering of a symmetric nonnegative
// distance matrix. Cluster ids follow the scipy convention: items are
// 0..N-1 and the i-th merge creates cluster N+i. Ties are broken by the
// lexicographically smallest (a, b) id pair. Merge heights are nondecreasing.
struct Dendrogram {
  struct Merge {
    int a = 0;
    int b = 0;
    double height = 0.0;
  };
  std::vector<std::string> labels;
  Eigen::MatrixXd distances;
  std::vector<Merge> merges;
};
Dendrogram complete_linkage(const std::vector<std::string>& labels,
                            const Eigen::MatrixXd& distances);

// The six objectives compared in the similarity analysis:
//   V,A = first/second derivative norm; L,H = first/second difference norm;
//   S,J = zeroth/first difference variance.
struct NamedObjective {
  std::string label;
  ObjectiveSpec spec;
};
const std::vector<NamedObjective>& analysis_objectives();

// Pairwise normalized-Hessian distances of the six objectives at degree n,
// plus their complete-linkage dendrogram.
Dendrogram analyze_objectives(int degree);

}  // namespace bezplan
