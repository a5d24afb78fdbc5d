#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>

namespace viraltext {

/// Word -> integer score map with a declared inclusive score range.
/// Lookup is exact lowercase match; no stemming.
class Lexicon {
 public:
  Lexicon(std::string name, int min_score, int max_score)
      : name_(std::move(name)), min_score_(min_score), max_score_(max_score) {}

  void add(const std::string& word, int score);  // throws on range/duplicate

  /// Score of a word, or 0 if absent.
  int score(const std::string& word) const {
    auto it = entries_.find(word);
    return it == entries_.end() ? 0 : it->second;
  }
  bool contains(const std::string& word) const { return entries_.count(word) != 0; }

  std::size_t size() const { return entries_.size(); }
  int min_score() const { return min_score_; }
  int max_score() const { return max_score_; }
  const std::string& name() const { return name_; }
  const std::unordered_map<std::string, int>& entries() const { return entries_; }

 private:
  std::string name_;
  int min_score_;
  int max_score_;
  std::unordered_map<std::string, int> entries_;
};

/// Parse a `word<TAB>score` file. '#' comment lines and blank lines are
/// ignored. Words are lowercased; duplicates and out-of-range or
/// non-integer scores are errors.
Lexicon load_lexicon(std::istream& in, const std::string& name, int min_score,
                     int max_score);
Lexicon load_lexicon_file(const std::string& path, int min_score, int max_score);

void save_lexicon(std::ostream& out, const Lexicon& lex);

}  // namespace viraltext
