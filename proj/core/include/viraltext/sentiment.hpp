#pragma once

#include <string>
#include <vector>

#include "viraltext/lexicon.hpp"

namespace viraltext {

/// Per-tweet valence (signed sum of word scores) and arousal (sum of
/// absolute scores). Each token occurrence contributes.
struct SentimentScore {
  int valence = 0;
  int arousal = 0;
  bool any_negative_word = false;
};

SentimentScore score_sentiment(const std::vector<std::string>& tokens,
                               const Lexicon& sentiment_lexicon);

enum class NegativePolicy { valence_below_zero, any_negative_word };

bool negative_flag(const SentimentScore& score, NegativePolicy policy);

}  // namespace viraltext
