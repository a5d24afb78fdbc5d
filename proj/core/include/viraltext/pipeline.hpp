#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "viraltext/features.hpp"
#include "viraltext/glm.hpp"
#include "viraltext/naive_bayes.hpp"
#include "viraltext/sentiment.hpp"

namespace viraltext {

struct AnalysisConfig {
  std::string corpus_name = "corpus";
  std::string corpus_path;
  std::string english_lexicon_path;
  std::string sentiment_lexicon_path;
  std::string stopword_path;
  std::string news_model_path;
  std::size_t vocab_size = 10000;
  double split_fraction = 0.75;
  std::uint64_t seed = 0;
  NegativePolicy negative_policy = NegativePolicy::valence_below_zero;
  InteractionMode interaction_mode = InteractionMode::product;
  bool require_declared_lang = true;
  bool arousal_filter = false;  // restrict to tweets with arousal > 0
};

/// Per-covariate cell of the report. A cell is left blank (no values)
/// when the covariate is constant in the design or its sub-model fit
/// failed; `note` records why.
struct CovariateResult {
  std::string name;
  std::optional<double> beta;
  std::optional<double> std_err;
  std::optional<double> wald;     // reported as "t"
  std::optional<double> lr_stat;  // drop-one likelihood-ratio statistic
  std::optional<double> lr_p;
  std::string note;
};

struct Report {
  AnalysisConfig config;
  long n_loaded = 0;
  long n_english = 0;
  long n_analyzed = 0;  // after the optional arousal filter
  double rate_of_news = 0;
  double log_lik = 0;
  bool converged = false;
  std::vector<CovariateResult> covariates;
};

/// Full pipeline: load -> language filter -> tokenize -> classify ->
/// sentiment -> features -> full GLM fit plus a drop-one sub-model per
/// covariate.
Report run_analysis(const AnalysisConfig& config);

enum class ReportFormat { tsv, structured };

void emit_report(std::ostream& out, const Report& report, ReportFormat format);
Report parse_report(std::istream& in);  // structured format only

/// Oracle generator for the retweet model: n rows of independently
/// sampled binary covariates (presence probability per marginal) with the
/// response sampled from the inverse-logit of beta . f. Deterministic for
/// a fixed seed.
DesignMatrix synth_generate(const std::vector<double>& beta, std::size_t n,
                            std::uint64_t seed,
                            const std::vector<double>& feature_marginals);

void write_feature_tsv(std::ostream& out, const std::vector<std::string>& ids,
                       const std::vector<FeatureVector>& features);

}  // namespace viraltext
