#include "viraltext/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "viraltext/error.hpp"

namespace viraltext {

namespace {

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return s;
}

}  // namespace

void Lexicon::add(const std::string& word, int score) {
  std::string w = lowercase(word);
  if (w.empty()) throw DataError("lexicon '" + name_ + "': empty word");
  if (score < min_score_ || score > max_score_)
    throw DataError("lexicon '" + name_ + "': score " + std::to_string(score) +
                    " for '" + w + "' outside [" + std::to_string(min_score_) +
                    ", " + std::to_string(max_score_) + "]");
  if (!entries_.emplace(w, score).second)
    throw DataError("lexicon '" + name_ + "': duplicate word '" + w + "'");
}

Lexicon load_lexicon(std::istream& in, const std::string& name, int min_score,
                     int max_score) {
  Lexicon lex(name, min_score, max_score);
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string word, score_str, extra;
    if (!(fields >> word >> score_str) || (fields >> extra))
      throw DataError("lexicon '" + name + "' line " + std::to_string(line_no) +
                      ": expected word<TAB>score");
    std::size_t pos = 0;
    int score;
    try {
      score = std::stoi(score_str, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != score_str.size())
      throw DataError("lexicon '" + name + "' line " + std::to_string(line_no) +
                      ": non-integer score '" + score_str + "'");
    lex.add(word, score);
  }
  return lex;
}

Lexicon load_lexicon_file(const std::string& path, int min_score,
                          int max_score) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open lexicon file: " + path);
  return load_lexicon(in, path, min_score, max_score);
}

void save_lexicon(std::ostream& out, const Lexicon& lex) {
  // Sorted so output is stable.
  std::map<std::string, int> sorted(lex.entries().begin(), lex.entries().end());
  for (const auto& [word, score] : sorted) out << word << '\t' << score << '\n';
}

}  // namespace viraltext
