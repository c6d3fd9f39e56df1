#include "gkf/double_form.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>

#include "gkf/parallel.hpp"
#include "gkf/rng.hpp"
#include "gkf/special_fn.hpp"

namespace gkf {

namespace {

// Merge two disjoint increasing multi-indices; returns the permutation sign
// of sorting the concatenation, or 0 if they overlap.
int merge_sign(const MultiIndex& a, const MultiIndex& b, MultiIndex& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  int swaps = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return 0;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      swaps += static_cast<int>(a.size() - i);
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return (swaps % 2 == 0) ? 1 : -1;
}

long comb(int n, int r) {
  if (r < 0 || r > n) return 0;
  long c = 1;
  for (int i = 0; i < r; ++i) c = c * (n - i) / (i + 1);
  return c;
}

}  // namespace

const std::vector<MultiIndex>& subsets(int dim, int p) {
  static std::map<std::pair<int, int>, std::vector<MultiIndex>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(dim, p);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<MultiIndex> out;
  MultiIndex cur(p);
  // lexicographic enumeration
  std::function<void(int, int)> rec = [&](int start, int pos) {
    if (pos == p) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < dim; ++v) {
      cur[pos] = v;
      rec(v + 1, pos + 1);
    }
  };
  if (p >= 0 && p <= dim) rec(0, 0);
  return cache.emplace(key, std::move(out)).first->second;
}

int subset_rank(int dim, const MultiIndex& idx) {
  // lexicographic rank among size-p subsets of {0..dim-1}
  int p = static_cast<int>(idx.size());
  long rank = 0;
  int prev = -1;
  for (int a = 0; a < p; ++a) {
    for (int v = prev + 1; v < idx[a]; ++v) rank += comb(dim - v - 1, p - a - 1);
    prev = idx[a];
  }
  return static_cast<int>(rank);
}

DoubleForm::DoubleForm(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("DoubleForm: dim must be >= 1");
}

Eigen::MatrixXd& DoubleForm::grade(int p, int q) {
  if (p < 0 || q < 0 || p > dim_ || q > dim_)
    throw std::invalid_argument("DoubleForm::grade: grade out of range");
  auto key = std::make_pair(p, q);
  auto it = grades_.find(key);
  if (it == grades_.end()) {
    it = grades_
             .emplace(key, Eigen::MatrixXd::Zero(comb(dim_, p), comb(dim_, q)))
             .first;
  }
  return it->second;
}

const Eigen::MatrixXd* DoubleForm::grade_if_present(int p, int q) const {
  auto it = grades_.find(std::make_pair(p, q));
  return it == grades_.end() ? nullptr : &it->second;
}

void DoubleForm::prune(double tol) {
  for (auto it = grades_.begin(); it != grades_.end();) {
    if (it->second.cwiseAbs().maxCoeff() <= tol)
      it = grades_.erase(it);
    else
      ++it;
  }
}

bool DoubleForm::is_single_grade(int p, int q) const {
  DoubleForm copy = *this;
  copy.prune();
  if (copy.grades_.empty()) return true;  // zero form has any grade
  return copy.grades_.size() == 1 &&
         copy.grades_.begin()->first == std::make_pair(p, q);
}

double& DoubleForm::coeff(const MultiIndex& row, const MultiIndex& col) {
  return grade(static_cast<int>(row.size()), static_cast<int>(col.size()))(
      subset_rank(dim_, row), subset_rank(dim_, col));
}

double DoubleForm::coeff(const MultiIndex& row, const MultiIndex& col) const {
  const Eigen::MatrixXd* g = grade_if_present(static_cast<int>(row.size()),
                                              static_cast<int>(col.size()));
  if (!g) return 0.0;
  return (*g)(subset_rank(dim_, row), subset_rank(dim_, col));
}

DoubleForm& DoubleForm::operator+=(const DoubleForm& other) {
  if (dim_ != other.dim_)
    throw std::invalid_argument("DoubleForm: dimension mismatch");
  for (const auto& [key, block] : other.grades_) grade(key.first, key.second) += block;
  return *this;
}

DoubleForm& DoubleForm::operator-=(const DoubleForm& other) {
  if (dim_ != other.dim_)
    throw std::invalid_argument("DoubleForm: dimension mismatch");
  for (const auto& [key, block] : other.grades_) grade(key.first, key.second) -= block;
  return *this;
}

DoubleForm& DoubleForm::operator*=(double s) {
  for (auto& [key, block] : grades_) block *= s;
  return *this;
}

DoubleForm DoubleForm::basis(int dim, const MultiIndex& row,
                             const MultiIndex& col, double c) {
  DoubleForm f(dim);
  f.coeff(row, col) = c;
  return f;
}

DoubleForm DoubleForm::identity(int dim) {
  DoubleForm f(dim);
  Eigen::MatrixXd& g = f.grade(1, 1);
  g = Eigen::MatrixXd::Identity(dim, dim);
  return f;
}

DoubleForm DoubleForm::from_matrix(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("from_matrix: square matrix required");
  DoubleForm f(static_cast<int>(m.rows()));
  f.grade(1, 1) = m;
  return f;
}

double DoubleForm::max_abs_diff(const DoubleForm& other) const {
  DoubleForm d = *this;
  d -= other;
  double m = 0.0;
  for (const auto& [key, block] : d.grades_)
    m = std::max(m, block.cwiseAbs().maxCoeff());
  return m;
}

DoubleForm double_wedge(const DoubleForm& a, const DoubleForm& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("double_wedge: dimension mismatch");
  const int dim = a.dim();
  DoubleForm out(dim);
  MultiIndex mrow, mcol;
  for (const auto& [ka, blka] : a.grades()) {
    for (const auto& [kb, blkb] : b.grades()) {
      int p = ka.first + kb.first, q = ka.second + kb.second;
      if (p > dim || q > dim) continue;  // wedge past top grade vanishes
      const auto& rows_a = subsets(dim, ka.first);
      const auto& cols_a = subsets(dim, ka.second);
      const auto& rows_b = subsets(dim, kb.first);
      const auto& cols_b = subsets(dim, kb.second);
      Eigen::MatrixXd& g = out.grade(p, q);
      for (std::size_t ra = 0; ra < rows_a.size(); ++ra) {
        for (std::size_t rb = 0; rb < rows_b.size(); ++rb) {
          int srow = merge_sign(rows_a[ra], rows_b[rb], mrow);
          if (srow == 0) continue;
          int row_rank = subset_rank(dim, mrow);
          for (std::size_t ca = 0; ca < cols_a.size(); ++ca) {
            double va = blka(ra, ca);
            if (va == 0.0) continue;
            for (std::size_t cb = 0; cb < cols_b.size(); ++cb) {
              double vb = blkb(rb, cb);
              if (vb == 0.0) continue;
              int scol = merge_sign(cols_a[ca], cols_b[cb], mcol);
              if (scol == 0) continue;
              g(row_rank, subset_rank(dim, mcol)) += srow * scol * va * vb;
            }
          }
        }
      }
    }
  }
  out.prune();
  return out;
}

DoubleForm wedge_power(const DoubleForm& a, int k) {
  if (k < 0) throw std::invalid_argument("wedge_power: k must be >= 0");
  DoubleForm out(a.dim());
  out.grade(0, 0)(0, 0) = 1.0;
  for (int i = 0; i < k; ++i) out = double_wedge(out, a);
  return out;
}

double trace_full(const DoubleForm& a) {
  double tr = 0.0;
  for (const auto& [key, block] : a.grades()) {
    if (key.first != key.second) continue;
    tr += block.trace();
  }
  return tr;
}

namespace {

enum class Slot { kFirst, kSecond };

DoubleForm annihilate(const Eigen::VectorXd& v, const DoubleForm& a, Slot slot) {
  const int dim = a.dim();
  if (v.size() != dim)
    throw std::invalid_argument("annihilation: vector dimension mismatch");
  DoubleForm out(dim);
  for (const auto& [key, block] : a.grades()) {
    int deg = (slot == Slot::kFirst) ? key.first : key.second;
    if (deg == 0) continue;  // i_v on Lambda^0 is zero
    int p_out = (slot == Slot::kFirst) ? key.first - 1 : key.first;
    int q_out = (slot == Slot::kFirst) ? key.second : key.second - 1;
    Eigen::MatrixXd& g = out.grade(p_out, q_out);
    const auto& acting = subsets(dim, deg);
    for (std::size_t r = 0; r < acting.size(); ++r) {
      const MultiIndex& idx = acting[r];
      for (std::size_t pos = 0; pos < idx.size(); ++pos) {
        double coeff = v(idx[pos]);
        if (coeff == 0.0) continue;
        double sign = (pos % 2 == 0) ? 1.0 : -1.0;
        MultiIndex reduced;
        reduced.reserve(idx.size() - 1);
        for (std::size_t t = 0; t < idx.size(); ++t)
          if (t != pos) reduced.push_back(idx[t]);
        int rr = subset_rank(dim, reduced);
        if (slot == Slot::kFirst) {
          g.row(rr) += sign * coeff * block.row(r);
        } else {
          g.col(rr) += sign * coeff * block.col(r);
        }
      }
    }
  }
  out.prune();
  return out;
}

}  // namespace

DoubleForm eta(const Eigen::VectorXd& v, const DoubleForm& a) {
  return annihilate(v, a, Slot::kFirst);
}

DoubleForm eta_prime(const Eigen::VectorXd& v, const DoubleForm& a) {
  return annihilate(v, a, Slot::kSecond);
}

DoubleForm contract(const std::vector<Eigen::VectorXd>& onb, const DoubleForm& a) {
  DoubleForm out(a.dim());
  for (const Eigen::VectorXd& b : onb) out += eta_prime(b, eta(b, a));
  out.prune();
  return out;
}

DoubleForm contract_full(const DoubleForm& a) {
  std::vector<Eigen::VectorXd> onb;
  for (int i = 0; i < a.dim(); ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(a.dim());
    e(i) = 1.0;
    onb.push_back(e);
  }
  return contract(onb, a);
}

namespace {

double elementary_det(const std::vector<Eigen::VectorXd>& u,
                      const MultiIndex& idx) {
  const int p = static_cast<int>(idx.size());
  if (p == 0) return 1.0;
  Eigen::MatrixXd m(p, p);
  for (int r = 0; r < p; ++r)
    for (int c = 0; c < p; ++c) m(r, c) = u[r](idx[c]);
  return m.determinant();
}

}  // namespace

double evaluate(const DoubleForm& a, const std::vector<Eigen::VectorXd>& u,
                const std::vector<Eigen::VectorXd>& v) {
  const int p = static_cast<int>(u.size());
  const int q = static_cast<int>(v.size());
  const Eigen::MatrixXd* g = a.grade_if_present(p, q);
  if (!g) return 0.0;
  const auto& rows = subsets(a.dim(), p);
  const auto& cols = subsets(a.dim(), q);
  double total = 0.0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    double dr = elementary_det(u, rows[r]);
    if (dr == 0.0) continue;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      double val = (*g)(r, c);
      if (val == 0.0) continue;
      total += val * dr * elementary_det(v, cols[c]);
    }
  }
  return total;
}

DoubleForm restrict_to(const DoubleForm& a,
                       const std::vector<Eigen::VectorXd>& onb) {
  const int l = static_cast<int>(onb.size());
  if (l == 0) throw std::invalid_argument("restrict_to: empty basis");
  DoubleForm out(l);
  for (const auto& [key, block] : a.grades()) {
    int p = key.first, q = key.second;
    if (p > l || q > l) continue;
    const auto& rows = subsets(l, p);
    const auto& cols = subsets(l, q);
    Eigen::MatrixXd& g = out.grade(p, q);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::vector<Eigen::VectorXd> u;
      for (int k : rows[r]) u.push_back(onb[k]);
      for (std::size_t c = 0; c < cols.size(); ++c) {
        std::vector<Eigen::VectorXd> v;
        for (int k : cols[c]) v.push_back(onb[k]);
        g(r, c) = evaluate(a, u, v);
      }
    }
  }
  out.prune();
  return out;
}

std::vector<Eigen::VectorXd> gram_schmidt(const std::vector<Eigen::VectorXd>& vs,
                                          double tol) {
  std::vector<Eigen::VectorXd> onb;
  for (Eigen::VectorXd v : vs) {
    for (const Eigen::VectorXd& b : onb) v -= b.dot(v) * b;
    double norm = v.norm();
    if (norm > tol) onb.push_back(v / norm);
  }
  return onb;
}

std::vector<Eigen::VectorXd> complement_basis(const Eigen::VectorXd& v0) {
  const int dim = static_cast<int>(v0.size());
  std::vector<Eigen::VectorXd> candidates{v0};
  for (int i = 0; i < dim; ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(dim);
    e(i) = 1.0;
    candidates.push_back(e);
  }
  auto onb = gram_schmidt(candidates);
  onb.erase(onb.begin());  // drop v0 itself
  return onb;
}

GaussianDoubleFormModel::GaussianDoubleFormModel(const Eigen::MatrixXd& mean_matrix,
                                                 const Eigen::MatrixXd& sigma)
    : dim_(static_cast<int>(mean_matrix.rows())),
      mean_matrix_(mean_matrix),
      sigma_(0.5 * (sigma + sigma.transpose())),
      mean_(DoubleForm::from_matrix(mean_matrix)),
      cov_(dim_) {
  const long n2 = static_cast<long>(dim_) * dim_;
  if (mean_matrix.cols() != dim_)
    throw std::invalid_argument("GaussianDoubleFormModel: mean must be square");
  if (sigma.rows() != n2 || sigma.cols() != n2)
    throw std::invalid_argument(
        "GaussianDoubleFormModel: sigma must be dim^2 x dim^2");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sigma_);
  Eigen::VectorXd vals = eig.eigenvalues();
  for (long i = 0; i < vals.size(); ++i) {
    if (vals(i) < -1e-10)
      throw std::invalid_argument(
          "GaussianDoubleFormModel: flattened covariance is not PSD");
    if (vals(i) < 0.0) vals(i) = 0.0;  // near-PSD repair
  }
  factor_ = eig.eigenvectors() * vals.cwiseSqrt().asDiagonal();

  // C = E[(W - mu)^2]: coefficient on (e^{i<k} (x) e^{j<l}) is
  // 2 (Cov(w_ij, w_kl) - Cov(w_il, w_kj)).
  if (dim_ >= 2) {
    auto idx = [this](int i, int j) { return i * dim_ + j; };
    Eigen::MatrixXd& g = cov_.grade(2, 2);
    const auto& pairs = subsets(dim_, 2);
    for (std::size_t r = 0; r < pairs.size(); ++r) {
      int i = pairs[r][0], k = pairs[r][1];
      for (std::size_t c = 0; c < pairs.size(); ++c) {
        int j = pairs[c][0], l = pairs[c][1];
        g(r, c) = 2.0 * (sigma_(idx(i, j), idx(k, l)) -
                         sigma_(idx(i, l), idx(k, j)));
      }
    }
    cov_.prune();
  }
}

DoubleForm gaussian_moment_rhs(const GaussianDoubleFormModel& model, int k) {
  if (k < 1) throw std::invalid_argument("gaussian_moment_rhs: k must be >= 1");
  DoubleForm out(model.dim());
  for (int j = 0; 2 * j <= k; ++j) {
    double coeff =
        factorial(k) / (factorial(k - 2 * j) * factorial(j) * std::pow(2.0, j));
    out += coeff * double_wedge(wedge_power(model.mean(), k - 2 * j),
                                wedge_power(model.cov(), j));
  }
  out.grade(k, k);  // materialize the target grade even when the sum is zero
  return out;
}

namespace {

// Grade-(k,k) coefficients of W^k for a grade-(1,1) form with matrix m:
// coefficient on (I, J) is k! * det(m[I, J]).
Eigen::MatrixXd wedge_power_of_matrix(const Eigen::MatrixXd& m, int k) {
  const int dim = static_cast<int>(m.rows());
  const auto& idx = subsets(dim, k);
  const double kfact = factorial(k);
  Eigen::MatrixXd out(idx.size(), idx.size());
  Eigen::MatrixXd sub(k, k);
  for (std::size_t r = 0; r < idx.size(); ++r) {
    for (std::size_t c = 0; c < idx.size(); ++c) {
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) sub(a, b) = m(idx[r][a], idx[c][b]);
      out(r, c) = kfact * sub.determinant();
    }
  }
  return out;
}

struct MatrixMoments {
  Eigen::MatrixXd sum;
  Eigen::MatrixXd sum_sq;
  bool init = false;
};

}  // namespace

MomentEstimate gaussian_moment_mc(const GaussianDoubleFormModel& model, int k,
                          std::uint64_t n_samples, std::uint64_t seed) {
  if (k < 1 || k > model.dim())
    throw std::invalid_argument("gaussian_moment_mc: requires 1 <= k <= dim");
  if (n_samples == 0)
    throw std::invalid_argument("gaussian_moment_mc: n_samples must be positive");
  const int dim = model.dim();
  const int n2 = dim * dim;
  const CounterRng rng(seed);
  const Eigen::MatrixXd& factor = model.sampling_factor();
  const Eigen::MatrixXd& mean_matrix = model.mean_matrix();

  auto block_fn = [&](std::uint64_t lo, std::uint64_t hi) {
    MatrixMoments acc;
    Eigen::VectorXd z(n2);
    for (std::uint64_t s = lo; s < hi; ++s) {
      for (int i = 0; i < n2; ++i) z(i) = rng.normal(s, i);
      Eigen::VectorXd xi = factor * z;
      Eigen::MatrixXd w = mean_matrix;
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) w(i, j) += xi(i * dim + j);
      Eigen::MatrixXd powk = wedge_power_of_matrix(w, k);
      if (!acc.init) {
        acc.sum = Eigen::MatrixXd::Zero(powk.rows(), powk.cols());
        acc.sum_sq = acc.sum;
        acc.init = true;
      }
      acc.sum += powk;
      acc.sum_sq += powk.cwiseProduct(powk);
    }
    return acc;
  };
  auto combine = [](MatrixMoments a, const MatrixMoments& b) {
    if (!b.init) return a;
    if (!a.init) return b;
    a.sum += b.sum;
    a.sum_sq += b.sum_sq;
    return a;
  };
  MatrixMoments total = blocked_reduce<MatrixMoments>(n_samples, block_fn, combine);

  const double n = static_cast<double>(n_samples);
  Eigen::MatrixXd mean = total.sum / n;
  Eigen::MatrixXd var =
      (total.sum_sq / n - mean.cwiseProduct(mean)).cwiseMax(0.0);
  Eigen::MatrixXd se = (var / std::max(n - 1.0, 1.0)).cwiseSqrt();

  MomentEstimate est{DoubleForm(dim), DoubleForm(dim)};
  est.mean.grade(k, k) = mean;
  est.std_error.grade(k, k) = se;
  return est;
}

ConditionalCheck conditional_moment_check(const DoubleForm& alpha, const Eigen::VectorXd& v0,
                             const Eigen::VectorXd& c, std::uint64_t n_samples,
                             std::uint64_t seed) {
  const int dim = alpha.dim();
  const int k = static_cast<int>(c.size());
  if (std::abs(v0.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("conditional_moment_check: v0 must be a unit vector");
  if (!alpha.is_single_grade(k, k))
    throw std::invalid_argument("conditional_moment_check: alpha must have grade (k, k)");
  if (k > dim) throw std::invalid_argument("conditional_moment_check: k must be <= dim");

  // Closed-form side.
  auto comp = complement_basis(v0);
  double rhs = factorial(k) * trace_full(restrict_to(alpha, comp));
  DoubleForm beta = alpha;
  for (int i = 0; i < k - 1; ++i) beta = contract(comp, beta);
  double beta_v0v0 = evaluate(beta, {v0}, {v0});
  rhs += c.squaredNorm() * beta_v0v0;

  // Monte Carlo side: exact conditional law X_i = c_i v0 + Y_i.
  const CounterRng rng(seed);
  struct Acc {
    double sum = 0.0, sum_sq = 0.0;
  };
  auto block_fn = [&](std::uint64_t lo, std::uint64_t hi) {
    Acc acc;
    std::vector<Eigen::VectorXd> x(k, Eigen::VectorXd(dim));
    for (std::uint64_t s = lo; s < hi; ++s) {
      for (int i = 0; i < k; ++i) {
        Eigen::VectorXd z(dim);
        for (int d = 0; d < dim; ++d)
          z(d) = rng.normal(s, static_cast<std::uint32_t>(i * dim + d));
        x[i] = c(i) * v0 + (z - v0.dot(z) * v0);
      }
      double val = evaluate(alpha, x, x);
      acc.sum += val;
      acc.sum_sq += val * val;
    }
    return acc;
  };
  auto combine = [](Acc a, const Acc& b) {
    a.sum += b.sum;
    a.sum_sq += b.sum_sq;
    return a;
  };
  Acc total = blocked_reduce<Acc>(n_samples, block_fn, combine);
  const double n = static_cast<double>(n_samples);
  double mc = total.sum / n;
  double var = std::max(0.0, total.sum_sq / n - mc * mc);
  double se = std::sqrt(var / std::max(n - 1.0, 1.0));
  return {mc, rhs, se};
}

}  // namespace gkf
