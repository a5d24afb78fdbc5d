#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "viraltext/glm.hpp"
#include "viraltext/naive_bayes.hpp"
#include "viraltext/pipeline.hpp"
#include "viraltext/tokenizer.hpp"

using namespace viraltext;

namespace {

const std::string kSampleText =
    "RT @newsdesk: summit talks stall as delegates walk out #cop15 "
    "details at http://example.com/live awful scenes via @reporter";

NaiveBayesModel make_model(std::size_t vocab_size) {
  std::mt19937_64 rng(1);
  auto uniform = [&rng] { return (rng() >> 11) * 0x1.0p-53; };
  std::vector<std::string> terms;
  std::vector<NaiveBayesModel::TermConditionals> cond;
  for (std::size_t d = 0; d < vocab_size; ++d) {
    terms.push_back("term" + std::to_string(d));
    double p1n = 0.01 + 0.98 * uniform();
    double p1o = 0.01 + 0.98 * uniform();
    cond.push_back({std::log(p1n), std::log1p(-p1n), std::log(p1o),
                    std::log1p(-p1o)});
  }
  return NaiveBayesModel(Vocabulary(std::move(terms), 0), std::log(0.2),
                         std::log(0.8), std::move(cond), 1.0);
}

void bm_tokenize(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tokenize(kSampleText));
}
BENCHMARK(bm_tokenize);

void bm_posterior(benchmark::State& state) {
  auto model = make_model(static_cast<std::size_t>(state.range(0)));
  TermPresence tp;
  for (std::size_t d = 0; d < model.vocab().size(); d += 97) tp.present.push_back(d);
  for (auto _ : state) benchmark::DoNotOptimize(model.posterior(tp));
}
BENCHMARK(bm_posterior)->Arg(1000)->Arg(10000);

void bm_fit_logistic(benchmark::State& state) {
  auto dm = synth_generate({-2.0, 0.5, 0.0, -0.8, 1.0, 0.0},
                           static_cast<std::size_t>(state.range(0)), 7,
                           {0.5, 0.5, 0.5, 0.5, 0.5});
  for (auto _ : state) benchmark::DoNotOptimize(fit_logistic(dm));
}
BENCHMARK(bm_fit_logistic)->Arg(10000)->Arg(50000);

}  // namespace

BENCHMARK_MAIN();
