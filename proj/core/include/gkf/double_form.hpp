#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gkf {

// Strictly increasing multi-index over {0, ..., dim-1}.
using MultiIndex = std::vector<int>;

// All size-p subsets of {0..dim-1} in lexicographic order.
const std::vector<MultiIndex>& subsets(int dim, int p);
int subset_rank(int dim, const MultiIndex& idx);

// Graded element of Lambda^{*,*}(V), V = R^dim. Grade (p, q) stores a
// C(dim,p) x C(dim,q) coefficient matrix over increasing multi-indices;
// absent grades are zero.
class DoubleForm {
 public:
  explicit DoubleForm(int dim);

  int dim() const { return dim_; }

  // Zero-initialized coefficient block for grade (p, q).
  Eigen::MatrixXd& grade(int p, int q);
  const Eigen::MatrixXd* grade_if_present(int p, int q) const;
  const std::map<std::pair<int, int>, Eigen::MatrixXd>& grades() const {
    return grades_;
  }

  // Drops numerically zero blocks (used to keep grade maps small).
  void prune(double tol = 0.0);

  bool is_single_grade(int p, int q) const;

  double& coeff(const MultiIndex& row, const MultiIndex& col);
  double coeff(const MultiIndex& row, const MultiIndex& col) const;

  DoubleForm& operator+=(const DoubleForm& other);
  DoubleForm& operator-=(const DoubleForm& other);
  DoubleForm& operator*=(double s);
  friend DoubleForm operator+(DoubleForm a, const DoubleForm& b) { return a += b; }
  friend DoubleForm operator-(DoubleForm a, const DoubleForm& b) { return a -= b; }
  friend DoubleForm operator*(DoubleForm a, double s) { return a *= s; }
  friend DoubleForm operator*(double s, DoubleForm a) { return a *= s; }

  // e^I (x) e^J with the given coefficient.
  static DoubleForm basis(int dim, const MultiIndex& row, const MultiIndex& col,
                          double c = 1.0);
  // The identity double form I = sum_i e^i (x) e^i (the metric in Lambda^{1,1}).
  static DoubleForm identity(int dim);
  // Grade (1,1) form from a dim x dim coefficient matrix.
  static DoubleForm from_matrix(const Eigen::MatrixXd& m);

  double max_abs_diff(const DoubleForm& other) const;

 private:
  int dim_;
  std::map<std::pair<int, int>, Eigen::MatrixXd> grades_;
};

// Double-wedge product: (a (x) b) . (c (x) d) = (a ^ c) (x) (b ^ d).
DoubleForm double_wedge(const DoubleForm& a, const DoubleForm& b);
DoubleForm wedge_power(const DoubleForm& a, int k);

// Tr(alpha (x) beta) = <alpha, beta>; non-square grades contribute zero.
double trace_full(const DoubleForm& a);

// Annihilation operators on the first / second slot.
DoubleForm eta(const Eigen::VectorXd& v, const DoubleForm& a);
DoubleForm eta_prime(const Eigen::VectorXd& v, const DoubleForm& a);

// Contractions C_L = sum_i eta_{b_i} eta'_{b_i} over an orthonormal basis of L.
DoubleForm contract(const std::vector<Eigen::VectorXd>& onb, const DoubleForm& a);
DoubleForm contract_full(const DoubleForm& a);

// alpha evaluated on vector tuples: sum over grades (|U|, |V|).
double evaluate(const DoubleForm& a, const std::vector<Eigen::VectorXd>& u,
                const std::vector<Eigen::VectorXd>& v);

// Restriction of alpha to the subspace spanned by the orthonormal basis;
// the result lives in Lambda^{*,*}(R^l), l = onb.size().
DoubleForm restrict_to(const DoubleForm& a, const std::vector<Eigen::VectorXd>& onb);

// Gram-Schmidt with pivot tolerance 1e-10; returns an orthonormal basis of
// the span of the inputs.
std::vector<Eigen::VectorXd> gram_schmidt(const std::vector<Eigen::VectorXd>& vs,
                                          double tol = 1e-10);
// Orthonormal basis of the orthogonal complement of the unit vector v0.
std::vector<Eigen::VectorXd> complement_basis(const Eigen::VectorXd& v0);

// Gaussian law on grade-(1,1) coefficients: W has mean `mean` and the
// flattened dim^2 x dim^2 covariance `sigma` of its coefficient matrix
// (row-major flattening, index i*dim + j). The grade-(2,2) moment form
// C = E[(W - mu)^2] is derived from sigma.
class GaussianDoubleFormModel {
 public:
  GaussianDoubleFormModel(const Eigen::MatrixXd& mean_matrix,
                          const Eigen::MatrixXd& sigma);

  int dim() const { return dim_; }
  const DoubleForm& mean() const { return mean_; }
  const DoubleForm& cov() const { return cov_; }
  const Eigen::MatrixXd& sigma() const { return sigma_; }
  // Factor A with A A^T = sigma (eigenvalue clipping at -1e-10).
  const Eigen::MatrixXd& sampling_factor() const { return factor_; }
  const Eigen::MatrixXd& mean_matrix() const { return mean_matrix_; }

 private:
  int dim_;
  Eigen::MatrixXd mean_matrix_;
  Eigen::MatrixXd sigma_;
  Eigen::MatrixXd factor_;
  DoubleForm mean_;
  DoubleForm cov_;
};

// Closed-form k-th moment E[W^k] = sum_j k!/((k-2j)! j! 2^j) mu^{k-2j} C^j.
DoubleForm gaussian_moment_rhs(const GaussianDoubleFormModel& model, int k);

struct MomentEstimate {
  DoubleForm mean;        // Monte Carlo average of W^k, grade (k, k)
  DoubleForm std_error;   // per-coefficient standard errors
};

MomentEstimate gaussian_moment_mc(const GaussianDoubleFormModel& model, int k,
                          std::uint64_t n_samples, std::uint64_t seed);

struct ConditionalCheck {
  double mc_value;
  double rhs_value;
  double std_error;
};

// Conditional-expectation identity: alpha evaluated on (X_1..X_k, X_1..X_k)
// with X_i = c_i v0 + Y_i, Y_i standard Gaussian on v0-perp, against
// k! Tr^{v0perp}(alpha|_{v0perp}) + sum_l eta_{c_l v0} eta'_{c_l v0} C_{v0perp}^{k-1}(alpha).
ConditionalCheck conditional_moment_check(const DoubleForm& alpha, const Eigen::VectorXd& v0,
                             const Eigen::VectorXd& c, std::uint64_t n_samples,
                             std::uint64_t seed);

}  // namespace gkf
