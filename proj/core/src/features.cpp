#include "viraltext/features.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace viraltext {

namespace {

bool is_handle_char(unsigned char c) { return std::isalnum(c) || c == '_'; }

// All '@'-prefixed handle occurrences with their '@' byte offsets.
std::vector<std::pair<std::size_t, std::string>> find_handles(
    const std::string& text) {
  std::vector<std::pair<std::size_t, std::string>> handles;
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    if (text[i] != '@' || !is_handle_char(text[i + 1])) continue;
    std::size_t j = i + 1;
    while (j < text.size() && is_handle_char(text[j])) ++j;
    handles.emplace_back(i, text.substr(i + 1, j - i - 1));
    i = j - 1;
  }
  return handles;
}

std::string lower(const std::string& s) {
  std::string out = s;
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Byte offset of the attribution handle's '@', or npos.
std::size_t attribution_offset(const std::string& text, std::string* user) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (!is_handle_char(text[i])) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < n && is_handle_char(text[i])) ++i;
    std::string word = lower(text.substr(start, i - start));
    if (word != "rt" && word != "via") continue;
    std::size_t j = i;
    while (j < n && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j < n && text[j] == ':') ++j;
    while (j < n && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j + 1 < n && text[j] == '@' && is_handle_char(text[j + 1])) {
      std::size_t k = j + 1;
      while (k < n && is_handle_char(text[k])) ++k;
      if (user) *user = text.substr(j + 1, k - j - 1);
      return j;
    }
  }
  return std::string::npos;
}

}  // namespace

RetweetMark detect_retweet(const std::string& text) {
  RetweetMark mark;
  std::string user;
  std::size_t pos = attribution_offset(text, &user);
  if (pos != std::string::npos) {
    mark.is_retweet = true;
    mark.attributed_user = user;
  }
  return mark;
}

FeatureVector extract_features(const Tweet& tweet, const SentimentScore& score,
                               NegativePolicy policy, double p_news,
                               InteractionMode mode) {
  const std::string& text = tweet.text;
  FeatureVector f;

  std::istringstream chunks(text);
  std::string chunk;
  while (chunks >> chunk) {
    if (chunk.size() > 1 && chunk[0] == '#' &&
        is_handle_char(static_cast<unsigned char>(chunk[1])))
      f.has_hashtag = 1;
    if (chunk.rfind("http://", 0) == 0 || chunk.rfind("https://", 0) == 0)
      f.has_url = 1;
  }

  std::size_t attr = attribution_offset(text, nullptr);
  f.is_retweet = attr == std::string::npos ? 0 : 1;
  // Only the attribution handle is excluded from mentions.
  for (const auto& [offset, handle] : find_handles(text)) {
    if (offset != attr) {
      f.has_mention = 1;
      break;
    }
  }

  f.negative = negative_flag(score, policy) ? 1 : 0;
  switch (mode) {
    case InteractionMode::product:
      f.negative_newsness = f.negative * p_news;
      break;
    case InteractionMode::logical_and:
      f.negative_newsness = f.negative * (p_news > 0.5 ? 1 : 0);
      break;
  }
  return f;
}

}  // namespace viraltext
