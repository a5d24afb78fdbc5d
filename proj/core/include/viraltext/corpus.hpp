#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace viraltext {

/// One message record. declared_language is empty when the source record
/// carried no language field; downstream treats that as the platform
/// default (English).
struct Tweet {
  std::string id;
  std::string text;
  std::optional<std::string> declared_language;
  std::optional<std::string> created_at;
  std::optional<std::string> author;
};

enum class Label { news, other };

struct LabeledSentence {
  std::vector<std::string> tokens;
  Label label = Label::other;
  std::string source_category;
};

struct CorpusStats {
  long total = 0;
  long news = 0;
  long other = 0;
  long english = 0;
};

struct LoadOptions {
  bool skip_malformed = false;  // default: abort on first bad line
};

/// Parse a line-delimited tweet file (one JSON object per line; fields
/// id, text required; lang, created_at, user optional). Order preserved.
std::vector<Tweet> load_tweets(std::istream& in, const LoadOptions& opts = {});
std::vector<Tweet> load_tweets_file(const std::string& path, const LoadOptions& opts = {});

/// Serialize tweets in the same line-delimited format load_tweets reads.
void save_tweets(std::ostream& out, const std::vector<Tweet>& tweets);

/// Parse a `category<TAB>token token ...` file. Lines starting with '#'
/// are comments. Sentences whose category is in excluded_categories are
/// dropped; label is news iff category == news_category.
std::vector<LabeledSentence> load_labeled_corpus(
    std::istream& in, const std::string& news_category,
    const std::unordered_set<std::string>& excluded_categories = {});
std::vector<LabeledSentence> load_labeled_corpus_file(
    const std::string& path, const std::string& news_category,
    const std::unordered_set<std::string>& excluded_categories = {});

CorpusStats count_labels(const std::vector<LabeledSentence>& sentences);

}  // namespace viraltext
