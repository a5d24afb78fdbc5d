#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace viraltext {

/// Normalize text to lowercase tokens. URL tokens (whitespace-delimited
/// chunks starting with http:// or https://) are removed first; the rest
/// is split on any character that is not a letter, digit, or apostrophe;
/// leading '#' and '@' are stripped from tokens.
std::vector<std::string> tokenize(const std::string& text);

/// Fixed term axis for the bag-of-terms representation: the max_terms
/// most frequent non-stopword terms, ties broken lexicographically.
class Vocabulary {
 public:
  Vocabulary(std::vector<std::string> terms, std::size_t stopword_count);

  std::size_t size() const { return terms_.size(); }
  const std::vector<std::string>& terms() const { return terms_; }
  std::size_t stopword_count() const { return stopword_count_; }

  /// Index of a term, or npos if out of vocabulary.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t index_of(const std::string& term) const {
    auto it = index_.find(term);
    return it == index_.end() ? npos : it->second;
  }

 private:
  std::vector<std::string> terms_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t stopword_count_;
};

Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& sentences,
                            const std::unordered_set<std::string>& stopwords,
                            std::size_t max_terms);

/// Binary presence vector: sorted set of vocabulary indices.
struct TermPresence {
  std::vector<std::size_t> present;  // sorted, unique, each < D
};

TermPresence vectorize(const std::vector<std::string>& tokens,
                       const Vocabulary& vocab);

/// One lowercased word per line; '#' comments and blanks ignored.
std::unordered_set<std::string> load_stopwords(std::istream& in);
std::unordered_set<std::string> load_stopwords_file(const std::string& path);

}  // namespace viraltext
