#include "viraltext/language.hpp"

#include <algorithm>
#include <cctype>

#include "viraltext/tokenizer.hpp"

namespace viraltext {

int englishness(const std::string& text, const Lexicon& english_lexicon) {
  int sum = 0;
  for (const auto& tok : tokenize(text)) sum += english_lexicon.score(tok);
  return sum;
}

namespace {

bool declared_english(const Tweet& tweet) {
  // Absent means the platform default, which is English.
  if (!tweet.declared_language) return true;
  std::string lang = *tweet.declared_language;
  std::transform(lang.begin(), lang.end(), lang.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return lang == "en" || lang == "english" || lang.rfind("en-", 0) == 0 ||
         lang.rfind("en_", 0) == 0;
}

}  // namespace

bool is_english(const Tweet& tweet, const Lexicon& english_lexicon,
                bool require_declared) {
  if (englishness(tweet.text, english_lexicon) <= 0) return false;
  return !require_declared || declared_english(tweet);
}

}  // namespace viraltext
