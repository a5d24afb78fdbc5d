#include "synthetic.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <stdexcept>

namespace viraltext::testing {

namespace {

const std::vector<std::string> kNewsPool{
    "government", "president", "minister",    "senate",   "budget",
    "election",   "policy",    "economy",     "market",   "treaty",
    "summit",     "climate",   "report",      "official", "court",
    "verdict",    "obama",     "parliament",  "congress", "senator",
    "governor",   "trade",     "finance",     "ruling",   "spokesman",
    "ministry",   "embassy",   "legislation", "reform",   "diplomat"};

const std::vector<std::string> kChatPool{
    "lol",      "haha",    "omg",      "yay",      "dude",     "tonight",
    "sleepy",   "hungry",  "coffee",   "movie",    "song",     "game",
    "weekend",  "wanna",   "gonna",    "bored",    "pizza",    "selfie",
    "homework", "netflix", "chillin",  "bestie",   "birthday", "puppy",
    "kitten",   "naptime", "brunch",   "vibes",    "playlist", "mood"};

const std::vector<std::string> kSharedPool{
    "today",    "people", "time",     "going",    "think",
    "really",   "right",  "still",    "never",    "always",
    "maybe",    "thing",  "stuff",    "place",    "morning",
    "later",    "tomorrow", "everyone", "something", "anything"};

double uniform(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

const std::string& pick(const std::vector<std::string>& pool,
                        std::mt19937_64& rng) {
  return pool[rng() % pool.size()];
}

}  // namespace

std::vector<LabeledSentence> two_register_corpus(std::size_t n_news,
                                                 std::size_t n_other,
                                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<LabeledSentence> sentences;
  sentences.reserve(n_news + n_other);
  for (std::size_t i = 0; i < n_news + n_other; ++i) {
    bool news = i < n_news;
    LabeledSentence s;
    s.source_category = news ? "news" : "chatter";
    s.label = news ? Label::news : Label::other;
    for (int w = 0; w < 8; ++w) {
      const auto& pool = uniform(rng) < 0.75
                             ? (news ? kNewsPool : kChatPool)
                             : kSharedPool;
      s.tokens.push_back(pick(pool, rng));
    }
    sentences.push_back(std::move(s));
  }
  return sentences;
}

void write_labeled_corpus(const std::string& path,
                          const std::vector<LabeledSentence>& sentences) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const auto& s : sentences) {
    out << s.source_category << '\t';
    for (std::size_t i = 0; i < s.tokens.size(); ++i)
      out << (i ? " " : "") << s.tokens[i];
    out << '\n';
  }
}

std::vector<Tweet> synthetic_tweets(const TweetSynthOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  std::vector<Tweet> tweets;
  tweets.reserve(opts.n);
  for (std::size_t i = 0; i < opts.n; ++i) {
    bool news = uniform(rng) < opts.p_news;
    bool hashtag = uniform(rng) < opts.p_hashtag;
    bool mention = uniform(rng) < opts.p_mention;
    bool url = uniform(rng) < opts.p_url;
    bool negative = uniform(rng) < opts.p_negative;

    double eta = opts.b0 + opts.b_hashtag * hashtag +
                 opts.b_mention * mention + opts.b_url * url +
                 opts.b_negative * negative +
                 opts.interaction_boost * (negative && news);
    bool retweeted = uniform(rng) < 1.0 / (1.0 + std::exp(-eta));

    std::string text;
    if (retweeted) text += "RT @src" + std::to_string(i) + ": ";
    const auto& pool = news ? kNewsPool : kChatPool;
    for (int w = 0; w < 5; ++w) text += pick(pool, rng) + " ";
    text += "the";
    if (negative)
      text += " awful";
    else if (uniform(rng) < 0.5)
      text += " happy";
    if (hashtag) text += " #topic";
    if (mention) text += " @pal" + std::to_string(i);
    if (url) text += " http://t.co/x" + std::to_string(i);

    Tweet t;
    t.id = "s" + std::to_string(i);
    t.text = std::move(text);
    t.declared_language = "en";
    tweets.push_back(std::move(t));
  }
  return tweets;
}

void write_min_english_lexicon(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "the\t3\nand\t2\nyou\t2\nfor\t2\nthis\t2\nthat\t2\nwith\t2\n"
         "have\t2\nfrom\t2\nnews\t1\n"
         "le\t-2\nla\t-2\nder\t-2\nund\t-2\nel\t-1\nles\t-2\nje\t-2\n"
         "het\t-2\nog\t-1\n";
}

void write_min_sentiment_lexicon(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "abandon\t-2\nabandons\t-2\nabandoned\t-2\nabsentee\t-1\n"
         "absentees\t-1\naboard\t1\nabducted\t-2\nabduction\t-2\n"
         "awful\t-3\nterrible\t-3\nbad\t-3\nhappy\t3\ngood\t3\ngreat\t3\n";
}

}  // namespace viraltext::testing
