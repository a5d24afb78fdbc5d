#include "viraltext/naive_bayes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "viraltext/error.hpp"

namespace viraltext {

namespace {

// Hexfloat round-trips doubles bit-exactly through text.
std::string hexd(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%a", v);
  return buf;
}

double parse_hexd(const std::string& s, const char* what) {
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size())
    throw DataError(std::string("model file: bad ") + what + " value '" + s +
                    "'");
  return v;
}

}  // namespace

NaiveBayesModel::NaiveBayesModel(Vocabulary vocab, double log_prior_news,
                                 double log_prior_other,
                                 std::vector<TermConditionals> conditionals,
                                 double alpha)
    : vocab_(std::move(vocab)),
      log_prior_news_(log_prior_news),
      log_prior_other_(log_prior_other),
      alpha_(alpha),
      conditionals_(std::move(conditionals)) {
  if (conditionals_.size() != vocab_.size())
    throw DataError("model conditionals do not match vocabulary size");
  // One log-odds accumulator (news vs other), summed per term so that
  // symmetric evidence cancels exactly and an uninformative vector scores
  // exactly 0.5.
  base_log_odds_ = log_prior_news_ - log_prior_other_;
  for (const auto& c : conditionals_)
    base_log_odds_ += c.log_p0_news - c.log_p0_other;
}

double NaiveBayesModel::posterior(const TermPresence& vector) const {
  // log odds = base + sum over present terms of the p1-vs-p0 swap; absent
  // terms are folded into the precomputed base.
  double log_odds = base_log_odds_;
  for (std::size_t d : vector.present) {
    if (d >= conditionals_.size())
      throw DataError("presence index " + std::to_string(d) +
                      " outside vocabulary");
    const auto& c = conditionals_[d];
    log_odds += (c.log_p1_news - c.log_p0_news) -
                (c.log_p1_other - c.log_p0_other);
  }
  return 1.0 / (1.0 + std::exp(-log_odds));
}

void NaiveBayesModel::save(std::ostream& out) const {
  out << "viraltext-nb 1\n";
  out << "alpha " << hexd(alpha_) << '\n';
  out << "priors " << hexd(log_prior_news_) << ' ' << hexd(log_prior_other_)
      << '\n';
  out << "stopword_count " << vocab_.stopword_count() << '\n';
  out << "terms " << vocab_.size() << '\n';
  for (std::size_t d = 0; d < vocab_.size(); ++d) {
    const auto& c = conditionals_[d];
    out << vocab_.terms()[d] << '\t' << hexd(c.log_p1_news) << ' '
        << hexd(c.log_p0_news) << ' ' << hexd(c.log_p1_other) << ' '
        << hexd(c.log_p0_other) << '\n';
  }
}

NaiveBayesModel NaiveBayesModel::load(std::istream& in) {
  std::string magic;
  int version = 0;
  if (!(in >> magic >> version) || magic != "viraltext-nb" || version != 1)
    throw DataError("not a viraltext-nb version 1 model file");
  std::string key, v1, v2;
  double alpha, lp_news, lp_other;
  std::size_t stopword_count, n_terms;
  if (!(in >> key >> v1) || key != "alpha")
    throw DataError("model file: missing alpha");
  alpha = parse_hexd(v1, "alpha");
  if (!(in >> key >> v1 >> v2) || key != "priors")
    throw DataError("model file: missing priors");
  lp_news = parse_hexd(v1, "prior");
  lp_other = parse_hexd(v2, "prior");
  if (!(in >> key >> stopword_count) || key != "stopword_count")
    throw DataError("model file: missing stopword_count");
  if (!(in >> key >> n_terms) || key != "terms")
    throw DataError("model file: missing term count");

  std::vector<std::string> terms;
  std::vector<TermConditionals> cond;
  terms.reserve(n_terms);
  cond.reserve(n_terms);
  for (std::size_t d = 0; d < n_terms; ++d) {
    std::string term, a, b, c, e;
    if (!(in >> term >> a >> b >> c >> e))
      throw DataError("model file: truncated term table");
    terms.push_back(term);
    cond.push_back({parse_hexd(a, "conditional"), parse_hexd(b, "conditional"),
                    parse_hexd(c, "conditional"), parse_hexd(e, "conditional")});
  }
  return NaiveBayesModel(Vocabulary(std::move(terms), stopword_count), lp_news,
                         lp_other, std::move(cond), alpha);
}

void NaiveBayesModel::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write model file: " + path);
  save(out);
}

NaiveBayesModel NaiveBayesModel::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open model file: " + path);
  return load(in);
}

std::pair<std::vector<LabeledSentence>, std::vector<LabeledSentence>>
split_train_test(const std::vector<LabeledSentence>& sentences,
                 double train_fraction, std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0))
    throw ConfigError("train fraction must lie strictly between 0 and 1");
  const std::size_t n = sentences.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  auto n_train =
      static_cast<std::size_t>(std::llround(train_fraction * static_cast<double>(n)));
  n_train = std::clamp<std::size_t>(n_train, 1, n > 1 ? n - 1 : 1);

  std::pair<std::vector<LabeledSentence>, std::vector<LabeledSentence>> parts;
  for (std::size_t i = 0; i < n; ++i) {
    auto& dst = i < n_train ? parts.first : parts.second;
    dst.push_back(sentences[order[i]]);
  }

  auto has_both = [](const std::vector<LabeledSentence>& part) {
    bool news = false, other = false;
    for (const auto& s : part) (s.label == Label::news ? news : other) = true;
    return news && other;
  };
  if (parts.first.empty() || parts.second.empty() || !has_both(parts.first) ||
      !has_both(parts.second))
    throw DataError(
        "train/test split left a part without both labels; "
        "use a different seed or a larger corpus");
  return parts;
}

NaiveBayesModel train(const std::vector<LabeledVector>& examples,
                      const Vocabulary& vocab, double alpha) {
  if (alpha < 0) throw ConfigError("smoothing alpha must be non-negative");
  long n_news = 0, n_other = 0;
  std::vector<long> count_news(vocab.size(), 0), count_other(vocab.size(), 0);
  for (const auto& ex : examples) {
    auto& counts = ex.label == Label::news ? count_news : count_other;
    (ex.label == Label::news ? n_news : n_other)++;
    for (std::size_t d : ex.vector.present) {
      if (d >= vocab.size())
        throw DataError("presence index outside vocabulary");
      ++counts[d];
    }
  }
  if (n_news == 0 || n_other == 0)
    throw DataError("training set must contain both labels");

  std::vector<NaiveBayesModel::TermConditionals> cond(vocab.size());
  for (std::size_t d = 0; d < vocab.size(); ++d) {
    if (alpha == 0.0) {
      if (count_news[d] == 0 || count_news[d] == n_news ||
          count_other[d] == 0 || count_other[d] == n_other)
        throw DataError("alpha=0 needs term '" + vocab.terms()[d] +
                        "' present and absent at least once per class");
    }
    double p1n = (static_cast<double>(count_news[d]) + alpha) /
                 (static_cast<double>(n_news) + 2 * alpha);
    double p1o = (static_cast<double>(count_other[d]) + alpha) /
                 (static_cast<double>(n_other) + 2 * alpha);
    cond[d] = {std::log(p1n), std::log1p(-p1n), std::log(p1o),
               std::log1p(-p1o)};
  }
  double total = static_cast<double>(n_news + n_other);
  return NaiveBayesModel(vocab, std::log(n_news / total),
                         std::log(n_other / total), std::move(cond), alpha);
}

double evaluate(const NaiveBayesModel& model,
                const std::vector<LabeledVector>& test) {
  if (test.empty()) throw DataError("empty test set");
  long correct = 0;
  for (const auto& ex : test) {
    bool predicted_news = model.posterior(ex.vector) > 0.5;
    if (predicted_news == (ex.label == Label::news)) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(test.size());
}

double news_rate(const std::vector<double>& posteriors) {
  if (posteriors.empty()) throw DataError("news rate of an empty sequence");
  long above = 0;
  for (double p : posteriors)
    if (p > 0.5) ++above;
  return static_cast<double>(above) / static_cast<double>(posteriors.size());
}

}  // namespace viraltext
