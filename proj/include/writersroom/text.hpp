#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Sentence and word handling shared by the writing phase and its checks.
//
// Sentence boundaries fall after a run of terminators (. ! ? or an ellipsis),
// plus any closing quotes or brackets, when followed by whitespace or the end
// of the text. A boundary is suppressed when
//   - the terminator sits inside an open quotation ("..." or curly quotes),
//   - the next word starts with a lowercase letter ("What now?" she asked.),
//   - a single period ends one of a few fixed abbreviations (Dr., e.g., ...).
// A blank line always ends a sentence and closes any open quotation.
namespace writersroom::text {

std::vector<std::string> split_sentences(std::string_view text);

// True when `sentence` ends at a boundary, i.e. appending another sentence
// after a space would not merge the two.
bool ends_sentence(std::string_view sentence);

// True when the text has at least one letter or digit.
bool has_word_chars(std::string_view text);

// Case-folded words with punctuation removed. Dashes, "--", ellipses and ".." separate
// words; apostrophes and hyphens inside a word are dropped ("city's" -> "citys").
std::vector<std::string> fold_words(std::string_view text);

// First contiguous run of `n` folded words in `candidate` that also occurs in
// `prior`, joined with single spaces.
std::optional<std::string> find_repeated_span(std::string_view candidate, std::string_view prior,
                                              std::size_t n);

// Case-sensitive whole-word match of `name`.
bool mentions_name(std::string_view text, std::string_view name);

// True when the text contains at least one quoted span with words in it.
bool has_dialogue(std::string_view text);

std::size_t word_count(std::string_view text);

// First folded word, or empty.
std::string opening_word(std::string_view text);

}  // namespace writersroom::text
