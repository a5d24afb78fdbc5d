#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "viraltext/error.hpp"
#include "viraltext/features.hpp"
#include "viraltext/glm.hpp"
#include "viraltext/language.hpp"
#include "viraltext/lexicon.hpp"
#include "viraltext/naive_bayes.hpp"
#include "viraltext/pipeline.hpp"
#include "viraltext/sentiment.hpp"
#include "viraltext/tokenizer.hpp"

namespace vt = viraltext;

namespace {

vt::NegativePolicy parse_policy(const std::string& s) {
  if (s == "valence") return vt::NegativePolicy::valence_below_zero;
  if (s == "word") return vt::NegativePolicy::any_negative_word;
  throw vt::ConfigError("unknown negative policy '" + s + "'");
}

vt::InteractionMode parse_mode(const std::string& s) {
  if (s == "product") return vt::InteractionMode::product;
  if (s == "and") return vt::InteractionMode::logical_and;
  throw vt::ConfigError("unknown interaction mode '" + s + "'");
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw vt::ConfigError("cannot write output file: " + path);
  return file;
}

std::vector<vt::LabeledVector> vectorize_sentences(
    const std::vector<vt::LabeledSentence>& sentences,
    const vt::Vocabulary& vocab) {
  std::vector<vt::LabeledVector> out;
  out.reserve(sentences.size());
  for (const auto& s : sentences)
    out.push_back({vt::vectorize(s.tokens, vocab), s.label});
  return out;
}

int run_train_news(const std::string& labeled_path,
                   const std::string& news_category,
                   const std::vector<std::string>& excluded,
                   const std::string& stopword_path, std::size_t vocab_size,
                   double split, std::uint64_t seed, double alpha, int repeats,
                   const std::string& model_out) {
  std::unordered_set<std::string> excluded_set(excluded.begin(), excluded.end());
  auto sentences =
      vt::load_labeled_corpus_file(labeled_path, news_category, excluded_set);
  auto stats = vt::count_labels(sentences);
  std::cerr << "loaded " << stats.total << " sentences (" << stats.news
            << " news, " << stats.other << " other)\n";

  std::unordered_set<std::string> stopwords;
  if (!stopword_path.empty())
    stopwords = vt::load_stopwords_file(stopword_path);

  // Lowercase the corpus tokens through the tokenizer so training and
  // tweet-side vectorization agree on normalization.
  std::vector<std::vector<std::string>> token_lists;
  std::vector<vt::LabeledSentence> normalized = sentences;
  for (auto& s : normalized) {
    std::string joined;
    for (const auto& t : s.tokens) {
      joined += t;
      joined += ' ';
    }
    s.tokens = vt::tokenize(joined);
    if (s.tokens.empty()) s.tokens.push_back(s.source_category);
    token_lists.push_back(s.tokens);
  }

  double sum = 0, sum_sq = 0;
  for (int r = 0; r < repeats; ++r) {
    auto [tr, te] = vt::split_train_test(normalized, split, seed + r);
    std::vector<std::vector<std::string>> train_tokens;
    for (const auto& s : tr) train_tokens.push_back(s.tokens);
    auto vocab = vt::build_vocabulary(train_tokens, stopwords, vocab_size);
    auto model = vt::train(vectorize_sentences(tr, vocab), vocab, alpha);
    double acc = vt::evaluate(model, vectorize_sentences(te, vocab));
    sum += acc;
    sum_sq += acc * acc;
    if (r == 0 && !model_out.empty()) {
      model.save_file(model_out);
      std::cerr << "model written to " << model_out << " (D=" << vocab.size()
                << ")\n";
    }
  }
  double mean = sum / repeats;
  double sd = repeats > 1
                  ? std::sqrt(std::max(0.0, (sum_sq - repeats * mean * mean) /
                                                (repeats - 1)))
                  : 0.0;
  std::cout << "accuracy " << mean << " +/- " << sd << " over " << repeats
            << " split(s)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tweet-virality analysis toolkit"};
  app.require_subcommand(1);

  // train-news
  std::string labeled_path, news_category = "news", stopword_path, model_out;
  std::vector<std::string> excluded{"editorial"};
  std::size_t vocab_size = 10000;
  double split = 0.75, alpha = 1.0;
  std::uint64_t seed = 0;
  int repeats = 1;
  auto* train = app.add_subcommand(
      "train-news", "Train the Naive Bayes news classifier");
  train->add_option("--labeled", labeled_path, "Labeled corpus file")
      ->required();
  train->add_option("--news-category", news_category, "Category labeled news");
  train->add_option("--exclude", excluded, "Categories to drop");
  train->add_option("--stopwords", stopword_path, "Stopword file");
  train->add_option("--vocab-size", vocab_size, "Vocabulary size");
  train->add_option("--split", split, "Training fraction");
  train->add_option("--seed", seed, "Split seed");
  train->add_option("--alpha", alpha, "Additive smoothing");
  train->add_option("--repeats", repeats, "Seeded repeat splits");
  train->add_option("--out", model_out, "Model artifact path");

  // classify
  std::string model_path, tweet_path, english_path, out_path;
  bool require_declared = true;
  auto* classify =
      app.add_subcommand("classify", "Score tweets for newsness");
  classify->add_option("--model", model_path, "Model artifact")->required();
  classify->add_option("--tweets", tweet_path, "Tweet file")->required();
  classify->add_option("--english-lexicon", english_path,
                       "Filter to English tweets first");
  classify->add_option("--require-declared-lang", require_declared,
                       "Also require the declared language to be English");
  classify->add_option("--out", out_path, "Output path (default stdout)");

  // sentiment
  std::string sentiment_path, policy_str = "valence";
  auto* senti =
      app.add_subcommand("sentiment", "Valence/arousal scores per tweet");
  senti->add_option("--sentiment-lexicon", sentiment_path, "Sentiment lexicon")
      ->required();
  senti->add_option("--tweets", tweet_path, "Tweet file")->required();
  senti->add_option("--negative-policy", policy_str, "valence | word");
  senti->add_option("--out", out_path, "Output path (default stdout)");

  // features
  std::string mode_str = "product";
  auto* feats =
      app.add_subcommand("features", "GLM covariates and response per tweet");
  feats->add_option("--model", model_path, "Model artifact")->required();
  feats->add_option("--sentiment-lexicon", sentiment_path, "Sentiment lexicon")
      ->required();
  feats->add_option("--tweets", tweet_path, "Tweet file")->required();
  feats->add_option("--negative-policy", policy_str, "valence | word");
  feats->add_option("--interaction-mode", mode_str, "product | and");
  feats->add_option("--out", out_path, "Output path (default stdout)");

  // analyze
  vt::AnalysisConfig cfg;
  std::string format_str = "tsv";
  bool arousal = false;
  auto* analyze =
      app.add_subcommand("analyze", "Full pipeline: filter, classify, fit, report");
  analyze->add_option("--tweets", cfg.corpus_path, "Tweet file")->required();
  analyze->add_option("--name", cfg.corpus_name, "Corpus label in the report");
  analyze->add_option("--model", cfg.news_model_path, "Model artifact")
      ->required();
  analyze
      ->add_option("--english-lexicon", cfg.english_lexicon_path,
                   "Englishness lexicon")
      ->required();
  analyze
      ->add_option("--sentiment-lexicon", cfg.sentiment_lexicon_path,
                   "Sentiment lexicon")
      ->required();
  analyze->add_option("--stopwords", cfg.stopword_path, "Stopword file");
  analyze->add_option("--vocab-size", cfg.vocab_size, "Vocabulary size");
  analyze->add_option("--split", cfg.split_fraction, "Training fraction");
  analyze->add_option("--seed", cfg.seed, "Seed");
  analyze->add_option("--negative-policy", policy_str, "valence | word");
  analyze->add_option("--interaction-mode", mode_str, "product | and");
  analyze->add_flag("--arousal-filter", arousal,
                    "Restrict the fit to tweets with arousal > 0");
  analyze->add_option("--require-declared-lang", require_declared,
                      "Also require the declared language to be English");
  analyze->add_option("--format", format_str, "tsv | structured");
  analyze->add_option("--out", out_path, "Output path (default stdout)");

  // synth
  std::vector<double> beta, marginals;
  std::size_t synth_n = 1000;
  auto* synth =
      app.add_subcommand("synth", "Synthetic covariate/response generator");
  synth->add_option("--beta", beta, "Coefficients, intercept first")
      ->required();
  synth->add_option("--marginals", marginals,
                    "Presence probability per non-intercept feature")
      ->required();
  synth->add_option("--n", synth_n, "Rows to generate");
  synth->add_option("--seed", seed, "Generator seed");
  synth->add_option("--out", out_path, "Output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    std::ofstream out_file;
    if (train->parsed())
      return run_train_news(labeled_path, news_category, excluded,
                            stopword_path, vocab_size, split, seed, alpha,
                            repeats, model_out);

    if (classify->parsed()) {
      auto model = vt::NaiveBayesModel::load_file(model_path);
      auto tweets = vt::load_tweets_file(tweet_path);
      std::optional<vt::Lexicon> english;
      if (!english_path.empty())
        english = vt::load_lexicon_file(english_path, -3, 3);
      auto& out = open_output(out_file, out_path);
      std::vector<double> posteriors;
      for (const auto& t : tweets) {
        if (english && !vt::is_english(t, *english, require_declared)) continue;
        double p = model.posterior(
            vt::vectorize(vt::tokenize(t.text), model.vocab()));
        posteriors.push_back(p);
        out << t.id << '\t' << p << '\n';
      }
      if (posteriors.empty()) throw vt::DataError("no tweets to classify");
      out << "# rate of news\t" << vt::news_rate(posteriors) << '\n';
      return 0;
    }

    if (senti->parsed()) {
      auto lex = vt::load_lexicon_file(sentiment_path, -5, 5);
      auto policy = parse_policy(policy_str);
      auto tweets = vt::load_tweets_file(tweet_path);
      auto& out = open_output(out_file, out_path);
      out << "id\tvalence\tarousal\tnegative\n";
      for (const auto& t : tweets) {
        auto s = vt::score_sentiment(vt::tokenize(t.text), lex);
        out << t.id << '\t' << s.valence << '\t' << s.arousal << '\t'
            << (vt::negative_flag(s, policy) ? 1 : 0) << '\n';
      }
      return 0;
    }

    if (feats->parsed()) {
      auto model = vt::NaiveBayesModel::load_file(model_path);
      auto lex = vt::load_lexicon_file(sentiment_path, -5, 5);
      auto policy = parse_policy(policy_str);
      auto mode = parse_mode(mode_str);
      auto tweets = vt::load_tweets_file(tweet_path);
      std::vector<std::string> ids;
      std::vector<vt::FeatureVector> rows;
      for (const auto& t : tweets) {
        auto tokens = vt::tokenize(t.text);
        double p = model.posterior(vt::vectorize(tokens, model.vocab()));
        auto s = vt::score_sentiment(tokens, lex);
        ids.push_back(t.id);
        rows.push_back(vt::extract_features(t, s, policy, p, mode));
      }
      auto& out = open_output(out_file, out_path);
      vt::write_feature_tsv(out, ids, rows);
      return 0;
    }

    if (analyze->parsed()) {
      cfg.negative_policy = parse_policy(policy_str);
      cfg.interaction_mode = parse_mode(mode_str);
      cfg.arousal_filter = arousal;
      cfg.require_declared_lang = require_declared;
      vt::ReportFormat format;
      if (format_str == "tsv")
        format = vt::ReportFormat::tsv;
      else if (format_str == "structured" || format_str == "json")
        format = vt::ReportFormat::structured;
      else
        throw vt::ConfigError("unknown report format '" + format_str + "'");
      auto report = vt::run_analysis(cfg);
      auto& out = open_output(out_file, out_path);
      vt::emit_report(out, report, format);
      if (!report.converged) return 3;
      return 0;
    }

    if (synth->parsed()) {
      auto dm = vt::synth_generate(beta, synth_n, seed, marginals);
      auto& out = open_output(out_file, out_path);
      out << "f0";
      for (std::size_t c = 1; c < dm.n_cols; ++c) out << "\tx" << c;
      out << "\ty\n";
      for (std::size_t i = 0; i < dm.n_rows(); ++i) {
        const double* x = dm.row(i);
        for (std::size_t c = 0; c < dm.n_cols; ++c)
          out << (c ? "\t" : "") << static_cast<int>(x[c]);
        out << '\t' << dm.response[i] << '\n';
      }
      return 0;
    }
  } catch (const vt::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const vt::DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return 2;
  } catch (const vt::NumericError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
