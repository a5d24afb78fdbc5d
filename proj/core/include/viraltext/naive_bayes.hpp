#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "viraltext/corpus.hpp"
#include "viraltext/tokenizer.hpp"

namespace viraltext {

/// Bernoulli Naive Bayes model over a fixed vocabulary: class priors and
/// per-term conditional presence probabilities, all kept in log space.
class NaiveBayesModel {
 public:
  struct TermConditionals {
    double log_p1_news;  // log p(w_d = 1 | news)
    double log_p0_news;
    double log_p1_other;
    double log_p0_other;
  };

  NaiveBayesModel(Vocabulary vocab, double log_prior_news,
                  double log_prior_other,
                  std::vector<TermConditionals> conditionals, double alpha);

  const Vocabulary& vocab() const { return vocab_; }
  double log_prior_news() const { return log_prior_news_; }
  double log_prior_other() const { return log_prior_other_; }
  double alpha() const { return alpha_; }
  const std::vector<TermConditionals>& conditionals() const {
    return conditionals_;
  }

  /// p(news | vector): Bernoulli posterior over all D terms (absent terms
  /// contribute their p(w_d = 0 | class) factor), evaluated in log space.
  double posterior(const TermPresence& vector) const;

  void save(std::ostream& out) const;
  static NaiveBayesModel load(std::istream& in);
  void save_file(const std::string& path) const;
  static NaiveBayesModel load_file(const std::string& path);

 private:
  Vocabulary vocab_;
  double log_prior_news_;
  double log_prior_other_;
  double alpha_;
  std::vector<TermConditionals> conditionals_;
  // Precomputed news-vs-other log odds of the all-absent vector.
  double base_log_odds_ = 0;
};

struct LabeledVector {
  TermPresence vector;
  Label label;
};

/// Seeded uniform random partition; deterministic for a fixed seed. Both
/// parts must be non-empty and contain both labels.
std::pair<std::vector<LabeledSentence>, std::vector<LabeledSentence>>
split_train_test(const std::vector<LabeledSentence>& sentences,
                 double train_fraction, std::uint64_t seed);

/// Presence frequencies with additive smoothing:
/// p(w_d = 1 | c) = (count_dc + alpha) / (n_c + 2*alpha).
/// alpha = 0 requires every term to be both present and absent at least
/// once per class.
NaiveBayesModel train(const std::vector<LabeledVector>& examples,
                      const Vocabulary& vocab, double alpha);

/// Fraction of test vectors where (posterior > 0.5) matches label==news.
/// A posterior of exactly 0.5 counts as non-news.
double evaluate(const NaiveBayesModel& model,
                const std::vector<LabeledVector>& test);

/// Fraction of posteriors strictly greater than 0.5.
double news_rate(const std::vector<double>& posteriors);

}  // namespace viraltext
