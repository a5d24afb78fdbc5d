#include "viraltext/pipeline.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "viraltext/error.hpp"
#include "viraltext/language.hpp"
#include "viraltext/lexicon.hpp"

namespace viraltext {

using nlohmann::json;

namespace {

std::array<double, kNumFeatures> to_array(const FeatureVector& f) {
  return {f.f0, f.has_hashtag, f.has_mention, f.has_url, f.negative,
          f.negative_newsness};
}

std::string fmt(double v, int precision = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
  return buf;
}

const char* policy_name(NegativePolicy p) {
  return p == NegativePolicy::valence_below_zero ? "valence" : "word";
}

const char* mode_name(InteractionMode m) {
  return m == InteractionMode::product ? "product" : "and";
}

}  // namespace

Report run_analysis(const AnalysisConfig& config) {
  Lexicon english = load_lexicon_file(config.english_lexicon_path, -3, 3);
  Lexicon sentiment = load_lexicon_file(config.sentiment_lexicon_path, -5, 5);
  NaiveBayesModel model = NaiveBayesModel::load_file(config.news_model_path);
  std::vector<Tweet> tweets = load_tweets_file(config.corpus_path);

  Report report;
  report.config = config;
  report.n_loaded = static_cast<long>(tweets.size());

  std::vector<double> posteriors;
  std::vector<std::array<double, kNumFeatures>> rows;
  std::vector<int> responses;
  for (const auto& tweet : tweets) {
    if (!is_english(tweet, english, config.require_declared_lang)) continue;
    auto tokens = tokenize(tweet.text);
    double p_news = model.posterior(vectorize(tokens, model.vocab()));
    posteriors.push_back(p_news);
    SentimentScore s = score_sentiment(tokens, sentiment);
    if (config.arousal_filter && s.arousal <= 0) continue;
    FeatureVector f = extract_features(tweet, s, config.negative_policy, p_news,
                                       config.interaction_mode);
    rows.push_back(to_array(f));
    responses.push_back(f.is_retweet > 0 ? 1 : 0);
  }
  report.n_english = static_cast<long>(posteriors.size());
  if (report.n_english == 0)
    throw DataError("no tweets remain after the language filter");
  report.n_analyzed = static_cast<long>(rows.size());
  if (report.n_analyzed == 0)
    throw DataError("no tweets remain after the arousal filter");
  report.rate_of_news = news_rate(posteriors);

  // Constant covariates cannot be fitted; they get a blank cell.
  std::vector<int> active_cols{0};
  report.covariates.resize(kNumFeatures);
  for (int c = 0; c < kNumFeatures; ++c)
    report.covariates[c].name = kFeatureNames[c];
  for (int c = 1; c < kNumFeatures; ++c) {
    bool constant = true;
    for (const auto& r : rows)
      if (r[c] != rows.front()[c]) {
        constant = false;
        break;
      }
    if (constant)
      report.covariates[c].note = "constant covariate; excluded from the model";
    else
      active_cols.push_back(c);
  }

  DesignMatrix full_design;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<double> x;
    for (int c : active_cols) x.push_back(rows[i][c]);
    full_design.add_row(x, responses[i]);
  }

  GlmFit full;
  try {
    full = fit_logistic(full_design);
  } catch (const std::exception& e) {
    throw NumericError(std::string("full-model fit failed: ") + e.what());
  }
  report.log_lik = full.log_lik;
  report.converged = full.converged;

  std::vector<double> wald;
  if (full.converged) wald = wald_statistics(full);
  for (std::size_t k = 0; k < active_cols.size(); ++k) {
    auto& cell = report.covariates[active_cols[k]];
    cell.beta = full.beta[k];
    if (full.converged) {
      cell.std_err = full.std_err[k];
      cell.wald = wald[k];
    } else {
      cell.note = full.separation_suspected
                      ? "full model did not converge; possible separation"
                      : "full model did not converge";
    }
  }

  // Drop-one protocol: one sub-model per non-intercept covariate.
  for (std::size_t k = 1; k < active_cols.size(); ++k) {
    auto& cell = report.covariates[active_cols[k]];
    DesignMatrix sub;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::vector<double> x;
      for (std::size_t j = 0; j < active_cols.size(); ++j)
        if (j != k) x.push_back(rows[i][active_cols[j]]);
      sub.add_row(x, responses[i]);
    }
    try {
      GlmFit reduced = fit_logistic(sub);
      LrtResult lrt = likelihood_ratio_test(full, reduced, 1);
      cell.lr_stat = lrt.statistic;
      cell.lr_p = lrt.p_value;
    } catch (const std::exception& e) {
      cell.note = std::string("drop-one sub-model failed: ") + e.what();
    }
  }
  return report;
}

namespace {

json config_to_json(const AnalysisConfig& c) {
  return json{{"corpus_name", c.corpus_name},
              {"corpus_path", c.corpus_path},
              {"english_lexicon_path", c.english_lexicon_path},
              {"sentiment_lexicon_path", c.sentiment_lexicon_path},
              {"stopword_path", c.stopword_path},
              {"news_model_path", c.news_model_path},
              {"vocab_size", c.vocab_size},
              {"split_fraction", c.split_fraction},
              {"seed", c.seed},
              {"negative_policy", policy_name(c.negative_policy)},
              {"interaction_mode", mode_name(c.interaction_mode)},
              {"require_declared_lang", c.require_declared_lang},
              {"arousal_filter", c.arousal_filter}};
}

AnalysisConfig config_from_json(const json& j) {
  AnalysisConfig c;
  c.corpus_name = j.at("corpus_name").get<std::string>();
  c.corpus_path = j.at("corpus_path").get<std::string>();
  c.english_lexicon_path = j.at("english_lexicon_path").get<std::string>();
  c.sentiment_lexicon_path = j.at("sentiment_lexicon_path").get<std::string>();
  c.stopword_path = j.at("stopword_path").get<std::string>();
  c.news_model_path = j.at("news_model_path").get<std::string>();
  c.vocab_size = j.at("vocab_size").get<std::size_t>();
  c.split_fraction = j.at("split_fraction").get<double>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.negative_policy = j.at("negative_policy").get<std::string>() == "word"
                          ? NegativePolicy::any_negative_word
                          : NegativePolicy::valence_below_zero;
  c.interaction_mode = j.at("interaction_mode").get<std::string>() == "and"
                           ? InteractionMode::logical_and
                           : InteractionMode::product;
  c.require_declared_lang = j.at("require_declared_lang").get<bool>();
  c.arousal_filter = j.at("arousal_filter").get<bool>();
  return c;
}

void set_opt(json& j, const char* key, const std::optional<double>& v) {
  if (v) j[key] = *v;
}

std::optional<double> get_opt(const json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return j.at(key).get<double>();
}

}  // namespace

void emit_report(std::ostream& out, const Report& report, ReportFormat format) {
  if (format == ReportFormat::structured) {
    json j;
    j["format"] = "viraltext-report";
    j["version"] = 1;
    j["config"] = config_to_json(report.config);
    j["n_loaded"] = report.n_loaded;
    j["n_english"] = report.n_english;
    j["n_analyzed"] = report.n_analyzed;
    j["rate_of_news"] = report.rate_of_news;
    j["log_lik"] = report.log_lik;
    j["converged"] = report.converged;
    j["covariates"] = json::array();
    for (const auto& c : report.covariates) {
      json cell{{"name", c.name}, {"note", c.note}};
      set_opt(cell, "beta", c.beta);
      set_opt(cell, "std_err", c.std_err);
      set_opt(cell, "wald", c.wald);
      set_opt(cell, "lr_stat", c.lr_stat);
      set_opt(cell, "lr_p", c.lr_p);
      j["covariates"].push_back(cell);
    }
    out << j.dump(2) << '\n';
    return;
  }

  const auto& cfg = report.config;
  out << "# corpus\t" << cfg.corpus_name << '\n';
  out << "# config\tcorpus_path=" << cfg.corpus_path
      << "\tenglish_lexicon=" << cfg.english_lexicon_path
      << "\tsentiment_lexicon=" << cfg.sentiment_lexicon_path
      << "\tstopwords=" << cfg.stopword_path
      << "\tnews_model=" << cfg.news_model_path
      << "\tvocab_size=" << cfg.vocab_size
      << "\tsplit=" << fmt(cfg.split_fraction) << "\tseed=" << cfg.seed
      << "\tnegative_policy=" << policy_name(cfg.negative_policy)
      << "\tinteraction_mode=" << mode_name(cfg.interaction_mode)
      << "\trequire_declared_lang=" << (cfg.require_declared_lang ? "true" : "false")
      << "\tarousal_filter=" << (cfg.arousal_filter ? "true" : "false") << '\n';
  out << "N loaded\t" << report.n_loaded << '\n';
  out << "N English\t" << report.n_english << '\n';
  if (cfg.arousal_filter) out << "Only tweets with Arousal > 0\n";
  out << "N\t" << report.n_analyzed << '\n';
  out << "Rate of News\t" << fmt(report.rate_of_news) << '\n';
  for (std::size_t c = 1; c < report.covariates.size(); ++c) {
    const auto& cell = report.covariates[c];
    out << "t(" << cell.name << ")\t" << (cell.wald ? fmt(*cell.wald) : "-");
    if (!cell.note.empty()) out << "\t# " << cell.note;
    out << '\n';
  }
  for (std::size_t c = 1; c < report.covariates.size(); ++c) {
    const auto& cell = report.covariates[c];
    out << "LR(" << cell.name << ")\t"
        << (cell.lr_stat ? fmt(*cell.lr_stat) : "-") << "\tp="
        << (cell.lr_p ? fmt(*cell.lr_p) : "-") << '\n';
  }
  out << "log-likelihood\t" << fmt(report.log_lik, 12) << '\n';
  out << "converged\t" << (report.converged ? "true" : "false") << '\n';
}

Report parse_report(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw DataError(std::string("invalid report: ") + e.what());
  }
  if (j.value("format", "") != "viraltext-report" || j.value("version", 0) != 1)
    throw DataError("not a viraltext-report version 1 document");
  Report r;
  r.config = config_from_json(j.at("config"));
  r.n_loaded = j.at("n_loaded").get<long>();
  r.n_english = j.at("n_english").get<long>();
  r.n_analyzed = j.at("n_analyzed").get<long>();
  r.rate_of_news = j.at("rate_of_news").get<double>();
  r.log_lik = j.at("log_lik").get<double>();
  r.converged = j.at("converged").get<bool>();
  for (const auto& cell : j.at("covariates")) {
    CovariateResult c;
    c.name = cell.at("name").get<std::string>();
    c.note = cell.value("note", "");
    c.beta = get_opt(cell, "beta");
    c.std_err = get_opt(cell, "std_err");
    c.wald = get_opt(cell, "wald");
    c.lr_stat = get_opt(cell, "lr_stat");
    c.lr_p = get_opt(cell, "lr_p");
    r.covariates.push_back(std::move(c));
  }
  return r;
}

DesignMatrix synth_generate(const std::vector<double>& beta, std::size_t n,
                            std::uint64_t seed,
                            const std::vector<double>& feature_marginals) {
  if (n < 1) throw ConfigError("synthetic corpus size must be at least 1");
  if (beta.size() != feature_marginals.size() + 1)
    throw ConfigError("need one coefficient per feature plus the intercept");
  for (double m : feature_marginals)
    if (m < 0 || m > 1) throw ConfigError("feature marginals must lie in [0,1]");

  std::mt19937_64 rng(seed);
  auto uniform = [&rng]() { return (rng() >> 11) * 0x1.0p-53; };

  const std::size_t p = beta.size();
  DesignMatrix dm;
  std::vector<double> x(p);
  for (std::size_t i = 0; i < n; ++i) {
    x[0] = 1.0;
    double eta = beta[0];
    for (std::size_t c = 1; c < p; ++c) {
      x[c] = uniform() < feature_marginals[c - 1] ? 1.0 : 0.0;
      eta += beta[c] * x[c];
    }
    double prob = 1.0 / (1.0 + std::exp(-eta));
    dm.add_row(x, uniform() < prob ? 1 : 0);
  }
  return dm;
}

void write_feature_tsv(std::ostream& out, const std::vector<std::string>& ids,
                       const std::vector<FeatureVector>& features) {
  if (ids.size() != features.size())
    throw DataError("id/feature count mismatch");
  out << "id\tf0\thashtag\tmention\turl\tnegative\tinteraction\tretweet\n";
  for (std::size_t i = 0; i < features.size(); ++i) {
    const auto& f = features[i];
    out << ids[i] << '\t' << static_cast<int>(f.f0) << '\t'
        << static_cast<int>(f.has_hashtag) << '\t'
        << static_cast<int>(f.has_mention) << '\t'
        << static_cast<int>(f.has_url) << '\t' << static_cast<int>(f.negative)
        << '\t' << fmt(f.negative_newsness, 10) << '\t'
        << static_cast<int>(f.is_retweet) << '\n';
  }
}

}  // namespace viraltext
