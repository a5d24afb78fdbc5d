#pragma once

#include <optional>
#include <string>

#include "viraltext/corpus.hpp"
#include "viraltext/sentiment.hpp"

namespace viraltext {

struct RetweetMark {
  bool is_retweet = false;
  std::optional<std::string> attributed_user;
};

/// A tweet is a retweet iff the whole token "RT" or "via"
/// (case-insensitive) is followed, allowing whitespace and an optional
/// ':', by an '@'-prefixed handle. The first such handle is the
/// attribution.
RetweetMark detect_retweet(const std::string& text);

enum class InteractionMode { product, logical_and };

/// GLM covariates plus the retweet response.
struct FeatureVector {
  double f0 = 1.0;  // intercept
  double has_hashtag = 0;
  double has_mention = 0;
  double has_url = 0;
  double negative = 0;
  double negative_newsness = 0;
  double is_retweet = 0;  // response
};

/// Covariate names in design-matrix column order (intercept first).
inline constexpr const char* kFeatureNames[] = {
    "Intercept", "Hashtag", "Mention", "Url", "Negative", "Negative x newsness"};
inline constexpr int kNumFeatures = 6;

/// Extract covariates from the raw text. The retweet-attribution handle
/// is not counted as a mention; any further handle is.
FeatureVector extract_features(const Tweet& tweet, const SentimentScore& score,
                               NegativePolicy policy, double p_news,
                               InteractionMode mode);

}  // namespace viraltext
