#pragma once

#include <string>

#include "viraltext/corpus.hpp"
#include "viraltext/lexicon.hpp"

namespace viraltext {

/// Accumulated word-list score over the tokenized text. Unknown words
/// contribute 0; empty text scores 0.
int englishness(const std::string& text, const Lexicon& english_lexicon);

/// A tweet passes the language gate iff its englishness is strictly
/// positive and, when require_declared is set, the declared language is
/// English or absent (the platform default).
bool is_english(const Tweet& tweet, const Lexicon& english_lexicon,
                bool require_declared);

}  // namespace viraltext
