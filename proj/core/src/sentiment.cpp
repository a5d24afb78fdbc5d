#include "viraltext/sentiment.hpp"

#include <cstdlib>

namespace viraltext {

SentimentScore score_sentiment(const std::vector<std::string>& tokens,
                               const Lexicon& sentiment_lexicon) {
  SentimentScore s;
  for (const auto& tok : tokens) {
    if (!sentiment_lexicon.contains(tok)) continue;
    int v = sentiment_lexicon.score(tok);
    s.valence += v;
    s.arousal += std::abs(v);
    if (v < 0) s.any_negative_word = true;
  }
  return s;
}

bool negative_flag(const SentimentScore& score, NegativePolicy policy) {
  switch (policy) {
    case NegativePolicy::valence_below_zero:
      return score.valence < 0;
    case NegativePolicy::any_negative_word:
      return score.any_negative_word;
  }
  return false;
}

}  // namespace viraltext
