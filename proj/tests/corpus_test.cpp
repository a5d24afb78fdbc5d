#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "viraltext/corpus.hpp"
#include "viraltext/error.hpp"

using namespace viraltext;

TEST_CASE("load_tweets parses well-formed lines in order") {
  std::istringstream in(
      R"({"id":"1","text":"hello","lang":"en"}
{"id":"2","text":"hej"}
)");
  auto tweets = load_tweets(in);
  REQUIRE(tweets.size() == 2);
  CHECK(tweets[0].id == "1");
  CHECK(tweets[0].text == "hello");
  CHECK(tweets[0].declared_language == "en");
  CHECK(tweets[1].id == "2");
  CHECK_FALSE(tweets[1].declared_language.has_value());
}

TEST_CASE("load_tweets rejects empty text") {
  std::istringstream in(R"({"id":"2","text":""})");
  CHECK_THROWS_AS(load_tweets(in), DataError);
}

TEST_CASE("load_tweets rejects duplicate ids") {
  std::istringstream in(
      R"({"id":"1","text":"a"}
{"id":"1","text":"b"}
)");
  CHECK_THROWS_AS(load_tweets(in), DataError);
}

TEST_CASE("load_tweets aborts on malformed lines by default, skips on request") {
  std::string data = "not json\n{\"id\":\"1\",\"text\":\"ok\"}\n";
  {
    std::istringstream in(data);
    CHECK_THROWS_AS(load_tweets(in), DataError);
  }
  {
    std::istringstream in(data);
    auto tweets = load_tweets(in, {.skip_malformed = true});
    REQUIRE(tweets.size() == 1);
    CHECK(tweets[0].id == "1");
  }
}

TEST_CASE("tweet round-trip: save then load yields identical records") {
  std::istringstream in(
      R"({"id":"1","text":"hello there","lang":"en","created_at":"2010-12-01T10:00:00Z","user":"alice"}
{"id":"2","text":"hej"}
)");
  auto tweets = load_tweets(in);
  std::ostringstream out;
  save_tweets(out, tweets);
  std::istringstream back(out.str());
  auto reloaded = load_tweets(back);
  REQUIRE(reloaded.size() == tweets.size());
  for (std::size_t i = 0; i < tweets.size(); ++i) {
    CHECK(reloaded[i].id == tweets[i].id);
    CHECK(reloaded[i].text == tweets[i].text);
    CHECK(reloaded[i].declared_language == tweets[i].declared_language);
    CHECK(reloaded[i].created_at == tweets[i].created_at);
    CHECK(reloaded[i].author == tweets[i].author);
  }
}

TEST_CASE("labeled corpus: labels, exclusion, comments") {
  std::istringstream in(
      "# comment\n"
      "news\tobama signs bill\n"
      "editorial\topinion piece here\n"
      "fiction\tonce upon a time\n");
  auto sentences = load_labeled_corpus(in, "news", {"editorial"});
  REQUIRE(sentences.size() == 2);
  CHECK(sentences[0].label == Label::news);
  CHECK(sentences[0].tokens ==
        std::vector<std::string>{"obama", "signs", "bill"});
  CHECK(sentences[1].label == Label::other);
  CHECK(sentences[1].source_category == "fiction");

  auto stats = count_labels(sentences);
  CHECK(stats.total == 2);
  CHECK(stats.news == 1);
  CHECK(stats.other == 1);
}

TEST_CASE("labeled corpus: empty after exclusion is an error") {
  std::istringstream in("editorial\tsome words\n");
  CHECK_THROWS_AS(load_labeled_corpus(in, "news", {"editorial"}), DataError);
}

TEST_CASE("labeled corpus: missing news category is an error") {
  std::istringstream in("fiction\tsome words\n");
  CHECK_THROWS_AS(load_labeled_corpus(in, "news", {}), DataError);
}

TEST_CASE("labeled corpus: exclusion never relabels retained sentences") {
  std::istringstream all(
      "news\ta b\nfiction\tc d\nhumor\te f\nnews\tg h\n");
  std::istringstream some(
      "news\ta b\nfiction\tc d\nhumor\te f\nnews\tg h\n");
  auto full = load_labeled_corpus(all, "news", {});
  auto filtered = load_labeled_corpus(some, "news", {"humor"});
  REQUIRE(filtered.size() == 3);
  std::size_t j = 0;
  for (const auto& s : full) {
    if (s.source_category == "humor") continue;
    CHECK(filtered[j].label == s.label);
    CHECK(filtered[j].source_category == s.source_category);
    ++j;
  }
}
