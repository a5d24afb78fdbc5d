#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "viraltext/error.hpp"
#include "viraltext/glm.hpp"

using namespace viraltext;
namespace vtt = viraltext::testing;

namespace {

DesignMatrix intercept_only(int n, int k) {
  DesignMatrix dm;
  for (int i = 0; i < n; ++i) dm.add_row({1.0}, i < k ? 1 : 0);
  return dm;
}

DesignMatrix random_binary_design(std::size_t n, std::size_t f,
                                  std::uint64_t seed,
                                  const std::vector<double>& beta_true) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng] { return (rng() >> 11) * 0x1.0p-53; };
  DesignMatrix dm;
  std::vector<double> x(f + 1);
  for (std::size_t i = 0; i < n; ++i) {
    x[0] = 1.0;
    double eta = beta_true[0];
    for (std::size_t c = 1; c <= f; ++c) {
      x[c] = uniform() < 0.5 ? 1.0 : 0.0;
      eta += beta_true[c] * x[c];
    }
    dm.add_row(x, uniform() < 1.0 / (1.0 + std::exp(-eta)) ? 1 : 0);
  }
  return dm;
}

}  // namespace

TEST_CASE("intercept-only closed forms") {
  auto fit = fit_logistic(intercept_only(4, 1));
  REQUIRE(fit.converged);
  CHECK(fit.beta[0] == doctest::Approx(std::log(1.0 / 3.0)).epsilon(1e-8));

  auto balanced = fit_logistic(intercept_only(4, 2));
  REQUIRE(balanced.converged);
  CHECK(balanced.beta[0] == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("intercept-only Wald statistic at p = 1/2") {
  auto fit = fit_logistic(intercept_only(100, 50));
  REQUIRE(fit.converged);
  // Fisher information n*p*(1-p) = 25, so std err = 0.2.
  CHECK(fit.std_err[0] == doctest::Approx(0.2).epsilon(1e-8));
  auto stats = wald_statistics(fit);
  CHECK(stats[0] == doctest::Approx(0.0).epsilon(1e-8));
}

TEST_CASE("IRLS matches the brute-force likelihood oracle") {
  std::vector<double> beta_true{-0.5, 1.0, -1.5};
  auto dm = random_binary_design(200, 2, 42, beta_true);
  auto fit = fit_logistic(dm);
  REQUIRE(fit.converged);
  auto oracle = vtt::brute_force_logistic(dm);
  for (std::size_t a = 0; a < oracle.size(); ++a)
    CHECK(std::abs(fit.beta[a] - oracle[a]) <= 1e-4);
  CHECK(fit.log_lik >= vtt::oracle_log_likelihood(dm, oracle) - 1e-8);
}

TEST_CASE("score equations vanish at the optimum") {
  std::vector<double> beta_true{-1.0, 0.8, 0.0, -0.6};
  for (std::uint64_t seed : {1, 2, 3}) {
    auto dm = random_binary_design(200, 3, seed, beta_true);
    auto fit = fit_logistic(dm);
    REQUIRE(fit.converged);
    std::vector<double> score(dm.n_cols, 0.0);
    for (std::size_t i = 0; i < dm.n_rows(); ++i) {
      const double* x = dm.row(i);
      double p = predict(fit, std::vector<double>(x, x + dm.n_cols));
      for (std::size_t a = 0; a < dm.n_cols; ++a)
        score[a] += (dm.response[i] - p) * x[a];
    }
    for (double s : score) CHECK(std::abs(s) < 1e-6);
  }
}

TEST_CASE("row permutation leaves the fit unchanged") {
  std::vector<double> beta_true{-0.5, 1.0};
  auto dm = random_binary_design(80, 1, 5, beta_true);
  auto fit = fit_logistic(dm);
  DesignMatrix shuffled;
  std::vector<std::size_t> order(dm.n_rows());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::mt19937_64 rng(9);
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i : order) {
    const double* x = dm.row(i);
    shuffled.add_row(std::vector<double>(x, x + dm.n_cols), dm.response[i]);
  }
  auto fit2 = fit_logistic(shuffled);
  for (std::size_t a = 0; a < fit.beta.size(); ++a)
    CHECK(fit.beta[a] == doctest::Approx(fit2.beta[a]).epsilon(1e-10));
}

TEST_CASE("error paths: constant response, rank deficiency, tiny n") {
  DesignMatrix all_one;
  for (int i = 0; i < 10; ++i) all_one.add_row({1.0}, 1);
  CHECK_THROWS_AS(fit_logistic(all_one), DataError);

  DesignMatrix dup;
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    double z = rng() & 1 ? 1.0 : 0.0;
    dup.add_row({1.0, z, z}, rng() & 1 ? 1 : 0);  // column 2 == column 1
  }
  CHECK_THROWS_WITH_AS(fit_logistic(dup), doctest::Contains("rank"),
                       NumericError);

  DesignMatrix tiny;
  tiny.add_row({1.0}, 1);
  CHECK_THROWS_AS(fit_logistic(tiny), DataError);
}

TEST_CASE("complete separation is reported, not hidden") {
  DesignMatrix sep;
  for (int i = 0; i < 20; ++i) {
    double z = i < 10 ? 1.0 : 0.0;
    sep.add_row({1.0, z}, i < 10 ? 1 : 0);
  }
  auto fit = fit_logistic(sep);
  CHECK_FALSE(fit.converged);
  CHECK(fit.separation_suspected);
  CHECK_THROWS_AS(wald_statistics(fit), NumericError);
}

TEST_CASE("likelihood ratio test basics") {
  std::vector<double> beta_true{-0.5, 1.2};
  auto dm = random_binary_design(300, 1, 77, beta_true);
  auto full = fit_logistic(dm);

  auto self = likelihood_ratio_test(full, full, 1);
  CHECK(self.statistic == doctest::Approx(0.0));
  CHECK(self.p_value == doctest::Approx(1.0));

  DesignMatrix reduced_dm;
  for (std::size_t i = 0; i < dm.n_rows(); ++i)
    reduced_dm.add_row({1.0}, dm.response[i]);
  auto reduced = fit_logistic(reduced_dm);
  auto lrt = likelihood_ratio_test(full, reduced, 1);
  CHECK(lrt.statistic > 10.0);  // strongly predictive column
  CHECK(lrt.p_value < 0.01);

  GlmFit better_reduced = reduced;
  better_reduced.log_lik = full.log_lik + 1.0;
  CHECK_THROWS_AS(likelihood_ratio_test(full, better_reduced, 1), NumericError);
}

TEST_CASE("LR statistic of a pure-noise column is chi-square(1)-ish") {
  // Median of chi-square(1) is about 0.455.
  std::vector<double> stats;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    auto dm = random_binary_design(400, 1, 1000 + seed, {0.0, 0.0});
    auto full = fit_logistic(dm);
    DesignMatrix reduced_dm;
    for (std::size_t i = 0; i < dm.n_rows(); ++i)
      reduced_dm.add_row({1.0}, dm.response[i]);
    auto reduced = fit_logistic(reduced_dm);
    stats.push_back(likelihood_ratio_test(full, reduced, 1).statistic);
  }
  std::sort(stats.begin(), stats.end());
  double median = stats[stats.size() / 2];
  CHECK(median > 0.15);
  CHECK(median < 1.0);
}

TEST_CASE("predict evaluates the inverse logit") {
  GlmFit fit;
  fit.beta = {0.0, 0.0};
  CHECK(predict(fit, {1.0, 1.0}) == doctest::Approx(0.5));
  fit.beta = {std::log(1.0 / 3.0)};
  CHECK(predict(fit, {1.0}) == doctest::Approx(0.25).epsilon(1e-12));
  fit.beta = {500.0};
  CHECK(predict(fit, {1.0}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(predict(fit, {1.0, 2.0}), DataError);

  // Strictly increasing in a feature with a positive coefficient.
  fit.beta = {-1.0, 2.0};
  double prev = -1;
  for (double v : {0.0, 0.25, 0.5, 1.0}) {
    double p = predict(fit, {1.0, v});
    CHECK(p > prev);
    prev = p;
  }
}

TEST_CASE("Wald and LR agree for a moderate single covariate") {
  auto dm = random_binary_design(20000, 1, 4242, {-0.3, 0.25});
  auto full = fit_logistic(dm);
  REQUIRE(full.converged);
  double wald = wald_statistics(full)[1];
  DesignMatrix reduced_dm;
  for (std::size_t i = 0; i < dm.n_rows(); ++i)
    reduced_dm.add_row({1.0}, dm.response[i]);
  auto lrt = likelihood_ratio_test(full, fit_logistic(reduced_dm), 1);
  CHECK(wald * wald == doctest::Approx(lrt.statistic).epsilon(0.20));
}

TEST_CASE("chi-square upper tail against independent identities") {
  // df = 2: the tail is exactly exp(-x/2).
  for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 40.0})
    CHECK(chi_square_upper_tail(x, 2) ==
          doctest::Approx(std::exp(-x / 2)).epsilon(1e-10));
  // df = 1: the tail is erfc(sqrt(x/2)).
  for (double x : {0.05, 0.455, 1.0, 3.841, 6.635, 25.0})
    CHECK(chi_square_upper_tail(x, 1) ==
          doctest::Approx(std::erfc(std::sqrt(x / 2))).epsilon(1e-10));
  CHECK(chi_square_upper_tail(0.0, 3) == 1.0);
  CHECK(chi_square_upper_tail(3.841, 1) == doctest::Approx(0.05).epsilon(1e-3));
}
