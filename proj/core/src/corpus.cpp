#include "viraltext/corpus.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "viraltext/error.hpp"

namespace viraltext {

using nlohmann::json;

namespace {

Tweet parse_tweet_line(const std::string& line, long line_no) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw DataError("line " + std::to_string(line_no) + ": invalid record: " +
                    e.what());
  }
  if (!j.is_object() || !j.contains("id") || !j.contains("text"))
    throw DataError("line " + std::to_string(line_no) +
                    ": record needs id and text fields");
  Tweet t;
  t.id = j.at("id").is_string() ? j.at("id").get<std::string>()
                                : j.at("id").dump();
  t.text = j.at("text").get<std::string>();
  if (t.text.empty())
    throw DataError("line " + std::to_string(line_no) + ": empty text");
  if (j.contains("lang") && !j.at("lang").is_null())
    t.declared_language = j.at("lang").get<std::string>();
  if (j.contains("created_at") && !j.at("created_at").is_null())
    t.created_at = j.at("created_at").get<std::string>();
  if (j.contains("user") && !j.at("user").is_null())
    t.author = j.at("user").get<std::string>();
  return t;
}

}  // namespace

std::vector<Tweet> load_tweets(std::istream& in, const LoadOptions& opts) {
  std::vector<Tweet> tweets;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    Tweet t;
    try {
      t = parse_tweet_line(line, line_no);
    } catch (const DataError&) {
      if (opts.skip_malformed) continue;
      throw;
    }
    if (!seen_ids.insert(t.id).second)
      throw DataError("line " + std::to_string(line_no) +
                      ": duplicate tweet id '" + t.id + "'");
    tweets.push_back(std::move(t));
  }
  return tweets;
}

std::vector<Tweet> load_tweets_file(const std::string& path,
                                    const LoadOptions& opts) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open tweet file: " + path);
  return load_tweets(in, opts);
}

void save_tweets(std::ostream& out, const std::vector<Tweet>& tweets) {
  for (const auto& t : tweets) {
    json j;
    j["id"] = t.id;
    j["text"] = t.text;
    if (t.declared_language) j["lang"] = *t.declared_language;
    if (t.created_at) j["created_at"] = *t.created_at;
    if (t.author) j["user"] = *t.author;
    out << j.dump() << '\n';
  }
}

std::vector<LabeledSentence> load_labeled_corpus(
    std::istream& in, const std::string& news_category,
    const std::unordered_set<std::string>& excluded_categories) {
  if (news_category.empty()) throw ConfigError("news category name is empty");
  std::vector<LabeledSentence> sentences;
  bool saw_news_category = false;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0)
      throw DataError("line " + std::to_string(line_no) +
                      ": expected category<TAB>tokens");
    std::string category = line.substr(0, tab);
    if (category == news_category) saw_news_category = true;
    if (excluded_categories.count(category)) continue;
    LabeledSentence s;
    s.source_category = category;
    s.label = category == news_category ? Label::news : Label::other;
    std::istringstream toks(line.substr(tab + 1));
    std::string tok;
    while (toks >> tok) s.tokens.push_back(tok);
    if (s.tokens.empty())
      throw DataError("line " + std::to_string(line_no) + ": empty sentence");
    sentences.push_back(std::move(s));
  }
  if (sentences.empty())
    throw DataError("no sentences remain after category exclusion");
  if (!saw_news_category)
    throw DataError("news category '" + news_category +
                    "' not present in corpus");
  return sentences;
}

std::vector<LabeledSentence> load_labeled_corpus_file(
    const std::string& path, const std::string& news_category,
    const std::unordered_set<std::string>& excluded_categories) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open labeled corpus: " + path);
  return load_labeled_corpus(in, news_category, excluded_categories);
}

CorpusStats count_labels(const std::vector<LabeledSentence>& sentences) {
  CorpusStats stats;
  stats.total = static_cast<long>(sentences.size());
  for (const auto& s : sentences)
    (s.label == Label::news ? stats.news : stats.other)++;
  return stats;
}

}  // namespace viraltext
