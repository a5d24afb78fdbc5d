#pragma once

#include <string>
#include <vector>

namespace viraltext {

/// Row-major design with an all-ones first column and a binary response.
struct DesignMatrix {
  std::size_t n_cols = 0;
  std::vector<double> rows;   // n * n_cols, row-major
  std::vector<int> response;  // n entries in {0,1}

  std::size_t n_rows() const { return response.size(); }
  const double* row(std::size_t i) const { return rows.data() + i * n_cols; }
  void add_row(const std::vector<double>& x, int y);
};

struct GlmFit {
  std::vector<double> beta;
  std::vector<double> std_err;
  std::vector<double> cov;  // (F+1)^2, row-major; inverse Fisher information
  double log_lik = 0;
  int iterations = 0;
  bool converged = false;
  bool separation_suspected = false;
};

/// Maximum-likelihood logit fit by iteratively reweighted least squares,
/// started at beta = 0. Convergence: max |delta beta| < tol. A
/// non-converging fit (e.g. complete separation) is returned with
/// converged = false; rank deficiency and a constant response are errors.
GlmFit fit_logistic(const DesignMatrix& design, double tol = 1e-8,
                    int max_iter = 50);

/// beta_i / std_err_i per coefficient; the "t" values of the report.
std::vector<double> wald_statistics(const GlmFit& fit);

struct LrtResult {
  double statistic;
  int df;
  double p_value;
};

/// 2 * (log_lik_full - log_lik_reduced) against the chi-square upper tail.
LrtResult likelihood_ratio_test(const GlmFit& full, const GlmFit& reduced,
                                int df);

/// p(y=1 | features) per the inverse-logit of beta . features.
double predict(const GlmFit& fit, const std::vector<double>& features);

double log_likelihood(const DesignMatrix& design,
                      const std::vector<double>& beta);

/// Upper-tail probability P(X > x) for X ~ chi-square(df), via the
/// regularized upper incomplete gamma function.
double chi_square_upper_tail(double x, double df);

double regularized_gamma_q(double a, double x);

}  // namespace viraltext
