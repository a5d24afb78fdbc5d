#include "viraltext/tokenizer.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "viraltext/error.hpp"

namespace viraltext {

namespace {

// Bytes >= 0x80 (UTF-8 continuation/lead) count as letters so multi-byte
// words stay intact.
bool is_token_char(unsigned char c) {
  return std::isalnum(c) || c == '\'' || c >= 0x80;
}

bool is_url(const std::string& chunk) {
  return chunk.rfind("http://", 0) == 0 || chunk.rfind("https://", 0) == 0;
}

}  // namespace

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream chunks(text);
  std::string chunk;
  while (chunks >> chunk) {
    if (is_url(chunk)) continue;
    std::string cur;
    for (unsigned char c : chunk) {
      if (is_token_char(c)) {
        cur += static_cast<char>(std::tolower(c));
      } else if (!cur.empty()) {
        tokens.push_back(std::move(cur));
        cur.clear();
      }
      // '#' and '@' fall through: prefixes are stripped, the word remains
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
  }
  return tokens;
}

Vocabulary::Vocabulary(std::vector<std::string> terms,
                       std::size_t stopword_count)
    : terms_(std::move(terms)), stopword_count_(stopword_count) {
  index_.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!index_.emplace(terms_[i], i).second)
      throw DataError("vocabulary has duplicate term '" + terms_[i] + "'");
  }
}

Vocabulary build_vocabulary(
    const std::vector<std::vector<std::string>>& sentences,
    const std::unordered_set<std::string>& stopwords, std::size_t max_terms) {
  if (max_terms < 1) throw ConfigError("vocabulary size must be at least 1");
  std::unordered_map<std::string, long> freq;
  for (const auto& sentence : sentences)
    for (const auto& tok : sentence)
      if (!stopwords.count(tok)) ++freq[tok];
  if (freq.empty())
    throw DataError("no non-stopword terms in corpus; cannot build vocabulary");

  std::vector<std::pair<std::string, long>> ranked(freq.begin(), freq.end());
  // Descending frequency, lexicographic ascending tie-break.
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (ranked.size() > max_terms) ranked.resize(max_terms);

  std::vector<std::string> terms;
  terms.reserve(ranked.size());
  for (auto& [term, count] : ranked) terms.push_back(std::move(term));
  return Vocabulary(std::move(terms), stopwords.size());
}

TermPresence vectorize(const std::vector<std::string>& tokens,
                       const Vocabulary& vocab) {
  TermPresence v;
  for (const auto& tok : tokens) {
    std::size_t idx = vocab.index_of(tok);
    if (idx != Vocabulary::npos) v.present.push_back(idx);
  }
  std::sort(v.present.begin(), v.present.end());
  v.present.erase(std::unique(v.present.begin(), v.present.end()),
                  v.present.end());
  return v;
}

std::unordered_set<std::string> load_stopwords(std::istream& in) {
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string word;
    if (fields >> word) {
      std::transform(word.begin(), word.end(), word.begin(),
                     [](unsigned char c) { return std::tolower(c); });
      words.insert(word);
    }
  }
  return words;
}

std::unordered_set<std::string> load_stopwords_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open stopword file: " + path);
  return load_stopwords(in);
}

}  // namespace viraltext
