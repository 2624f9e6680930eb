#include "writersroom/text.hpp"

#include <array>
#include <cctype>
#include <unordered_set>

#include "writersroom/core.hpp"

namespace writersroom::text {

namespace {

constexpr std::string_view kLeftDouble = "\xE2\x80\x9C";
constexpr std::string_view kRightDouble = "\xE2\x80\x9D";
constexpr std::string_view kRightSingle = "\xE2\x80\x99";
constexpr std::string_view kEllipsis = "\xE2\x80\xA6";
constexpr std::string_view kEmDash = "\xE2\x80\x94";
constexpr std::string_view kEnDash = "\xE2\x80\x93";

constexpr std::array<std::string_view, 12> kAbbreviations = {
    "mr", "mrs", "ms", "dr", "prof", "sr", "jr", "st", "vs", "mt", "e.g", "i.e"};

bool at(std::string_view text, std::size_t pos, std::string_view token) {
  return text.substr(pos, token.size()) == token;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_ascii_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }

// UTF-8 General Punctuation (U+2000..U+206F) starts with E2 80 or E2 81.
bool is_general_punctuation(std::string_view text, std::size_t pos) {
  if (pos + 2 >= text.size() || static_cast<unsigned char>(text[pos]) != 0xE2) return false;
  const auto second = static_cast<unsigned char>(text[pos + 1]);
  return second == 0x80 || second == 0x81;
}

// Length of the terminator at `pos` (0 when there is none).
std::size_t terminator_at(std::string_view text, std::size_t pos) {
  const char c = text[pos];
  if (c == '.' || c == '!' || c == '?') return 1;
  if (at(text, pos, kEllipsis)) return kEllipsis.size();
  return 0;
}

bool is_abbreviation(std::string_view text, std::size_t period) {
  std::size_t begin = period;
  while (begin > 0) {
    const char c = text[begin - 1];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '.') {
      --begin;
    } else {
      break;
    }
  }
  if (begin == period) return false;
  std::string word;
  for (char c : text.substr(begin, period - begin)) {
    word.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  for (auto abbreviation : kAbbreviations) {
    if (word == abbreviation) return true;
  }
  return false;
}

// A blank line: newline, optional horizontal space, newline.
std::size_t blank_line_at(std::string_view text, std::size_t pos) {
  if (text[pos] != '\n') return 0;
  std::size_t q = pos + 1;
  while (q < text.size() && (text[q] == ' ' || text[q] == '\t' || text[q] == '\r')) ++q;
  if (q < text.size() && text[q] == '\n') return q + 1 - pos;
  return 0;
}

std::vector<std::string> raw_pieces(std::string_view text) {
  std::vector<std::string> pieces;
  std::size_t start = 0;
  std::size_t pos = 0;
  bool in_quote = false;

  auto emit = [&](std::size_t end) {
    auto piece = trim(text.substr(start, end - start));
    if (!piece.empty()) pieces.push_back(std::move(piece));
    start = end;
  };

  while (pos < text.size()) {
    if (auto blank = blank_line_at(text, pos)) {
      emit(pos);
      pos += blank;
      start = pos;
      in_quote = false;
      continue;
    }
    const char c = text[pos];
    if (c == '"') {
      in_quote = !in_quote;
      ++pos;
      continue;
    }
    if (at(text, pos, kLeftDouble)) {
      in_quote = true;
      pos += kLeftDouble.size();
      continue;
    }
    if (at(text, pos, kRightDouble)) {
      in_quote = false;
      pos += kRightDouble.size();
      continue;
    }
    const auto first_len = terminator_at(text, pos);
    if (first_len == 0) {
      ++pos;
      continue;
    }

    const std::size_t run_start = pos;
    std::size_t q = pos;
    while (q < text.size()) {
      const auto len = terminator_at(text, q);
      if (len == 0) break;
      q += len;
    }
    const bool single_period = (q - run_start == 1) && text[run_start] == '.';

    // Closing quotes and brackets that belong to this sentence.
    while (q < text.size()) {
      if (text[q] == '"') {
        if (!in_quote) break;
        in_quote = false;
        ++q;
      } else if (at(text, q, kRightDouble)) {
        in_quote = false;
        q += kRightDouble.size();
      } else if (text[q] == ')' || text[q] == ']' || text[q] == '\'') {
        ++q;
      } else if (at(text, q, kRightSingle)) {
        q += kRightSingle.size();
      } else {
        break;
      }
    }
    pos = q;
    if (in_quote) continue;
    if (q < text.size()) {
      if (!is_space(text[q])) continue;
      std::size_t next = q;
      while (next < text.size() && is_space(text[next])) ++next;
      if (next < text.size() && is_lower(text[next])) continue;
      if (single_period && is_abbreviation(text, run_start)) continue;
    }
    emit(q);
  }
  emit(text.size());
  return pieces;
}

}  // namespace

bool has_word_chars(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto byte = static_cast<unsigned char>(text[i]);
    if (byte < 0x80) {
      if (is_ascii_alnum(text[i])) return true;
      continue;
    }
    if (is_general_punctuation(text, i)) {
      i += 2;
      continue;
    }
    if (byte >= 0xC0) return true;  // lead byte of some other code point
  }
  return false;
}

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> sentences;
  std::string pending;  // punctuation-only pieces waiting for a home
  for (auto& piece : raw_pieces(text)) {
    if (!has_word_chars(piece)) {
      if (!sentences.empty()) {
        sentences.back() += " " + piece;
      } else {
        pending += piece + " ";
      }
      continue;
    }
    sentences.push_back(pending + piece);
    pending.clear();
  }
  return sentences;
}

bool ends_sentence(std::string_view sentence) {
  if (!has_word_chars(sentence)) return false;
  const auto probe = std::string(sentence) + " Then.";
  return split_sentences(probe).size() == split_sentences(sentence).size() + 1;
}

std::vector<std::string> fold_words(std::string_view text) {
  std::vector<std::string> words;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) words.push_back(std::move(current));
    current.clear();
  };
  for (std::size_t i = 0; i < text.size();) {
    const auto byte = static_cast<unsigned char>(text[i]);
    if (is_space(text[i])) {
      flush();
      ++i;
    } else if (at(text, i, kEmDash) || at(text, i, kEnDash) || at(text, i, kEllipsis)) {
      flush();
      i += 3;
    } else if ((text[i] == '-' || text[i] == '.') && i + 1 < text.size() &&
               text[i + 1] == text[i]) {
      // "--" and ".." (a typed ellipsis) separate words like their Unicode forms.
      flush();
      const char run = text[i];
      while (i < text.size() && text[i] == run) ++i;
    } else if (byte < 0x80) {
      if (is_ascii_alnum(text[i])) {
        current.push_back(static_cast<char>(std::tolower(byte)));
      }
      ++i;
    } else if (is_general_punctuation(text, i)) {
      i += 3;
    } else {
      current.push_back(text[i]);
      ++i;
    }
  }
  flush();
  return words;
}

std::optional<std::string> find_repeated_span(std::string_view candidate, std::string_view prior,
                                              std::size_t n) {
  if (n == 0) return std::nullopt;
  const auto prior_words = fold_words(prior);
  const auto words = fold_words(candidate);
  if (prior_words.size() < n || words.size() < n) return std::nullopt;

  auto join = [n](const std::vector<std::string>& source, std::size_t from) {
    std::string gram;
    for (std::size_t k = 0; k < n; ++k) {
      if (k) gram.push_back(' ');
      gram += source[from + k];
    }
    return gram;
  };

  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i + n <= prior_words.size(); ++i) seen.insert(join(prior_words, i));
  for (std::size_t i = 0; i + n <= words.size(); ++i) {
    auto gram = join(words, i);
    if (seen.count(gram)) return gram;
  }
  return std::nullopt;
}

bool mentions_name(std::string_view text, std::string_view name) {
  if (name.empty()) return false;
  auto is_word = [](char c) { return is_ascii_alnum(c) || c == '_'; };
  for (auto pos = text.find(name); pos != std::string_view::npos; pos = text.find(name, pos + 1)) {
    const bool left_ok = pos == 0 || !is_word(text[pos - 1]);
    const auto end = pos + name.size();
    const bool right_ok = end == text.size() || !is_word(text[end]);
    if (left_ok && right_ok) return true;
  }
  return false;
}

bool has_dialogue(std::string_view text) {
  std::size_t open = std::string_view::npos;
  for (std::size_t i = 0; i < text.size();) {
    const bool straight = text[i] == '"';
    const bool left = at(text, i, kLeftDouble);
    const bool right = at(text, i, kRightDouble);
    const std::size_t width = straight ? 1 : (left || right) ? 3 : 1;
    if (open == std::string_view::npos) {
      if (straight || left) open = i + width;
    } else if (straight || right) {
      if (has_word_chars(text.substr(open, i - open))) return true;
      open = std::string_view::npos;
    }
    i += width;
  }
  return false;
}

std::size_t word_count(std::string_view text) {
  std::size_t count = 0;
  bool in_word = false;
  for (char c : text) {
    if (is_space(c)) {
      in_word = false;
    } else if (!in_word) {
      in_word = true;
      ++count;
    }
  }
  return count;
}

std::string opening_word(std::string_view text) {
  auto words = fold_words(text);
  return words.empty() ? std::string() : words.front();
}

}  // namespace writersroom::text
