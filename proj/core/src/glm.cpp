#include "viraltext/glm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "viraltext/error.hpp"

namespace viraltext {

void DesignMatrix::add_row(const std::vector<double>& x, int y) {
  if (n_cols == 0) n_cols = x.size();
  if (x.size() != n_cols)
    throw DataError("design row length mismatch");
  if (y != 0 && y != 1) throw DataError("response must be 0 or 1");
  rows.insert(rows.end(), x.begin(), x.end());
  response.push_back(y);
}

namespace {

double sigmoid(double eta) {
  if (eta >= 0) return 1.0 / (1.0 + std::exp(-eta));
  double e = std::exp(eta);
  return e / (1.0 + e);
}

// log(1 + exp(eta)) without overflow.
double log1pexp(double eta) {
  if (eta > 0) return eta + std::log1p(std::exp(-eta));
  return std::log1p(std::exp(eta));
}

// In-place Cholesky of a symmetric positive definite p x p matrix.
// Returns the index of the first non-positive pivot, or -1 on success.
int cholesky(std::vector<double>& a, std::size_t p, double pivot_floor) {
  for (std::size_t j = 0; j < p; ++j) {
    double d = a[j * p + j];
    for (std::size_t k = 0; k < j; ++k) d -= a[j * p + k] * a[j * p + k];
    if (d <= pivot_floor) return static_cast<int>(j);
    a[j * p + j] = std::sqrt(d);
    for (std::size_t i = j + 1; i < p; ++i) {
      double s = a[i * p + j];
      for (std::size_t k = 0; k < j; ++k) s -= a[i * p + k] * a[j * p + k];
      a[i * p + j] = s / a[j * p + j];
    }
  }
  return -1;
}

void chol_solve(const std::vector<double>& l, std::size_t p,
                std::vector<double>& x) {
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t k = 0; k < i; ++k) x[i] -= l[i * p + k] * x[k];
    x[i] /= l[i * p + i];
  }
  for (std::size_t i = p; i-- > 0;) {
    for (std::size_t k = i + 1; k < p; ++k) x[i] -= l[k * p + i] * x[k];
    x[i] /= l[i * p + i];
  }
}

// Fisher information X^T W X with W_i = p_i (1 - p_i).
std::vector<double> fisher_information(const DesignMatrix& dm,
                                       const std::vector<double>& prob) {
  const std::size_t p = dm.n_cols, n = dm.n_rows();
  std::vector<double> info(p * p, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double* x = dm.row(i);
    double w = prob[i] * (1.0 - prob[i]);
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t b = 0; b <= a; ++b) info[a * p + b] += w * x[a] * x[b];
  }
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = a + 1; b < p; ++b) info[a * p + b] = info[b * p + a];
  return info;
}

void check_full_rank(const DesignMatrix& dm) {
  const std::size_t p = dm.n_cols, n = dm.n_rows();
  std::vector<double> xtx(p * p, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double* x = dm.row(i);
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t b = 0; b <= a; ++b) xtx[a * p + b] += x[a] * x[b];
  }
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = a + 1; b < p; ++b) xtx[a * p + b] = xtx[b * p + a];
  double max_diag = 0;
  for (std::size_t a = 0; a < p; ++a)
    max_diag = std::max(max_diag, xtx[a * p + a]);
  int bad = cholesky(xtx, p, 1e-10 * std::max(max_diag, 1.0));
  if (bad >= 0)
    throw NumericError("design matrix is rank deficient: column " +
                       std::to_string(bad) +
                       " is linearly dependent on earlier columns");
}

}  // namespace

double log_likelihood(const DesignMatrix& design,
                      const std::vector<double>& beta) {
  const std::size_t p = design.n_cols, n = design.n_rows();
  if (beta.size() != p) throw DataError("coefficient length mismatch");
  double ll = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double* x = design.row(i);
    double eta = 0;
    for (std::size_t a = 0; a < p; ++a) eta += beta[a] * x[a];
    ll += design.response[i] * eta - log1pexp(eta);
  }
  return ll;
}

GlmFit fit_logistic(const DesignMatrix& design, double tol, int max_iter) {
  const std::size_t p = design.n_cols, n = design.n_rows();
  if (n <= p)
    throw DataError("need more observations than coefficients (n=" +
                    std::to_string(n) + ", p=" + std::to_string(p) + ")");
  long ones = 0;
  for (int y : design.response) ones += y;
  if (ones == 0 || ones == static_cast<long>(n))
    throw DataError("response is constant; the logistic MLE does not exist");
  check_full_rank(design);

  GlmFit fit;
  fit.beta.assign(p, 0.0);
  fit.log_lik = log_likelihood(design, fit.beta);

  std::vector<double> prob(n), grad(p), delta(p);
  for (int iter = 1; iter <= max_iter; ++iter) {
    fit.iterations = iter;
    for (std::size_t i = 0; i < n; ++i) {
      const double* x = design.row(i);
      double eta = 0;
      for (std::size_t a = 0; a < p; ++a) eta += fit.beta[a] * x[a];
      prob[i] = sigmoid(eta);
    }
    std::fill(grad.begin(), grad.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double* x = design.row(i);
      double r = design.response[i] - prob[i];
      for (std::size_t a = 0; a < p; ++a) grad[a] += r * x[a];
    }
    std::vector<double> info = fisher_information(design, prob);
    double max_diag = 0;
    for (std::size_t a = 0; a < p; ++a)
      max_diag = std::max(max_diag, info[a * p + a]);
    if (cholesky(info, p, 1e-12 * std::max(max_diag, 1.0)) >= 0) {
      // Weights collapsed: fitted probabilities pinned at 0/1.
      fit.separation_suspected = true;
      break;
    }
    delta = grad;
    chol_solve(info, p, delta);

    // Step-halving keeps the likelihood non-decreasing.
    double step = 1.0;
    std::vector<double> candidate(p);
    double new_ll = -std::numeric_limits<double>::infinity();
    for (int h = 0; h < 30; ++h) {
      for (std::size_t a = 0; a < p; ++a)
        candidate[a] = fit.beta[a] + step * delta[a];
      new_ll = log_likelihood(design, candidate);
      if (new_ll >= fit.log_lik - 1e-12) break;
      step *= 0.5;
    }
    double max_change = 0;
    for (std::size_t a = 0; a < p; ++a)
      max_change = std::max(max_change, std::abs(candidate[a] - fit.beta[a]));
    fit.beta = candidate;
    fit.log_lik = new_ll;
    if (max_change < tol) {
      fit.converged = true;
      break;
    }
  }

  double max_beta = 0;
  for (double b : fit.beta) max_beta = std::max(max_beta, std::abs(b));
  if (!fit.converged && max_beta > 25.0) fit.separation_suspected = true;

  // Covariance: inverse Fisher information at the optimum, column by column.
  for (std::size_t i = 0; i < n; ++i) {
    const double* x = design.row(i);
    double eta = 0;
    for (std::size_t a = 0; a < p; ++a) eta += fit.beta[a] * x[a];
    prob[i] = sigmoid(eta);
  }
  std::vector<double> info = fisher_information(design, prob);
  double max_diag = 0;
  for (std::size_t a = 0; a < p; ++a)
    max_diag = std::max(max_diag, info[a * p + a]);
  if (cholesky(info, p, 1e-14 * std::max(max_diag, 1.0)) < 0) {
    fit.cov.assign(p * p, 0.0);
    std::vector<double> e(p);
    for (std::size_t c = 0; c < p; ++c) {
      std::fill(e.begin(), e.end(), 0.0);
      e[c] = 1.0;
      chol_solve(info, p, e);
      for (std::size_t r = 0; r < p; ++r) fit.cov[r * p + c] = e[r];
    }
    fit.std_err.resize(p);
    for (std::size_t a = 0; a < p; ++a)
      fit.std_err[a] = std::sqrt(std::max(fit.cov[a * p + a], 0.0));
  } else {
    fit.separation_suspected = true;
  }
  return fit;
}

std::vector<double> wald_statistics(const GlmFit& fit) {
  if (!fit.converged)
    throw NumericError("Wald statistics require a converged fit");
  if (fit.std_err.size() != fit.beta.size())
    throw NumericError("fit carries no standard errors");
  std::vector<double> stats(fit.beta.size());
  for (std::size_t a = 0; a < fit.beta.size(); ++a) {
    if (!(fit.std_err[a] > 0))
      throw NumericError("non-positive standard error for coefficient " +
                         std::to_string(a));
    stats[a] = fit.beta[a] / fit.std_err[a];
  }
  return stats;
}

LrtResult likelihood_ratio_test(const GlmFit& full, const GlmFit& reduced,
                                int df) {
  if (df < 1) throw ConfigError("degrees of freedom must be at least 1");
  double stat = 2.0 * (full.log_lik - reduced.log_lik);
  if (stat < -1e-8)
    throw NumericError(
        "reduced model out-fits the full model; models are not nested or an "
        "optimization failed");
  stat = std::max(stat, 0.0);
  return {stat, df, chi_square_upper_tail(stat, df)};
}

double predict(const GlmFit& fit, const std::vector<double>& features) {
  if (features.size() != fit.beta.size())
    throw DataError("feature vector length does not match coefficients");
  double eta = 0;
  for (std::size_t a = 0; a < features.size(); ++a)
    eta += fit.beta[a] * features[a];
  return sigmoid(eta);
}

namespace {

constexpr int kGammaMaxIter = 500;
constexpr double kGammaEps = 1e-15;

// Lower regularized gamma P(a, x) by series expansion; valid for x < a+1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < kGammaMaxIter; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * kGammaEps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper regularized gamma Q(a, x) by continued fraction; valid for x >= a+1.
double gamma_q_cf(double a, double x) {
  const double fpmin = std::numeric_limits<double>::min() / kGammaEps;
  double b = x + 1.0 - a;
  double c = 1.0 / fpmin;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kGammaMaxIter; ++i) {
    double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < fpmin) d = fpmin;
    c = b + an / c;
    if (std::abs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kGammaEps) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double regularized_gamma_q(double a, double x) {
  if (!(a > 0) || x < 0)
    throw ConfigError("regularized gamma needs a > 0 and x >= 0");
  if (x == 0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double chi_square_upper_tail(double x, double df) {
  if (!(df > 0)) throw ConfigError("chi-square df must be positive");
  if (x <= 0) return 1.0;
  return regularized_gamma_q(0.5 * df, 0.5 * x);
}

}  // namespace viraltext
