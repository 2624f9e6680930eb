#include "writersroom/core.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

namespace writersroom {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string writer_path(std::size_t index, std::string_view field) {
  return "writers[" + std::to_string(index) + "]." + std::string(field);
}

void check_binding(const ProviderBinding& binding, const std::string& prefix,
                   std::vector<Diagnostic>& out) {
  if (!(binding.temperature >= 0.0 && binding.temperature <= 2.0)) {
    out.push_back({prefix + ".temperature", "temperature must lie in [0, 2]"});
  }
  const bool wants_endpoint = binding.provider_kind == ProviderKind::http_chat;
  if (wants_endpoint && trim(binding.endpoint).empty()) {
    out.push_back({prefix + ".endpoint", "http_chat bindings need an endpoint"});
  }
  if (!wants_endpoint && !binding.endpoint.empty()) {
    out.push_back({prefix + ".endpoint", "only http_chat bindings take an endpoint"});
  }
  if (binding.max_retries < 0) {
    out.push_back({prefix + ".max_retries", "max_retries must be nonnegative"});
  }
  if (!(binding.timeout_seconds > 0.0)) {
    out.push_back({prefix + ".timeout_seconds", "timeout must be positive"});
  }
}

}  // namespace

std::string_view to_string(ProviderKind kind) {
  switch (kind) {
    case ProviderKind::http_chat: return "http_chat";
    case ProviderKind::scripted: return "scripted";
  }
  return "unknown";
}

std::optional<ProviderKind> parse_provider_kind(std::string_view text) {
  if (text == "http_chat") return ProviderKind::http_chat;
  if (text == "scripted") return ProviderKind::scripted;
  return std::nullopt;
}

std::string_view to_string(ContributionFlag flag) {
  switch (flag) {
    case ContributionFlag::truncated: return "truncated";
    case ContributionFlag::duplication_retry_exhausted: return "duplication_retry_exhausted";
    case ContributionFlag::self_mention: return "self_mention";
    case ContributionFlag::end_requested: return "end_requested";
  }
  return "unknown";
}

std::optional<ContributionFlag> parse_contribution_flag(std::string_view text) {
  for (auto flag : {ContributionFlag::truncated, ContributionFlag::duplication_retry_exhausted,
                    ContributionFlag::self_mention, ContributionFlag::end_requested}) {
    if (to_string(flag) == text) return flag;
  }
  return std::nullopt;
}

const WriterProfile* RoomConfig::find_writer(std::string_view name) const {
  for (const auto& writer : writers) {
    if (writer.name == name) return &writer;
  }
  return nullptr;
}

std::vector<std::string> RoomConfig::writer_names() const {
  std::vector<std::string> names;
  names.reserve(writers.size());
  for (const auto& writer : writers) names.push_back(writer.name);
  return names;
}

std::vector<StoryShape> RoomConfig::prompt_shapes() const {
  return shapes.empty() ? shape_catalog() : shapes;
}

std::string trim(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && is_space(text[begin])) ++begin;
  while (end > begin && is_space(text[end - 1])) --end;
  return std::string(text.substr(begin, end - begin));
}

std::size_t statement_word_count(std::string_view text) {
  std::size_t count = 0;
  bool in_word = false;
  for (char c : text) {
    const bool separator = is_space(c) || c == '-';
    if (!separator && !in_word) ++count;
    in_word = !separator;
  }
  return count;
}

RoomValidation validate_room(const RoomConfig& config) {
  RoomValidation result;
  auto& out = result.diagnostics;

  if (config.writers.size() < 2) {
    out.push_back({"writers", "a room needs at least 2 writers, found " +
                                  std::to_string(config.writers.size())});
  }

  std::set<std::string> seen;
  for (std::size_t i = 0; i < config.writers.size(); ++i) {
    const auto& writer = config.writers[i];
    if (writer.name.empty()) {
      out.push_back({writer_path(i, "name"), "name must be nonempty"});
    } else if (std::any_of(writer.name.begin(), writer.name.end(),
                           [](char c) { return is_space(c) || c == '/'; })) {
      out.push_back({writer_path(i, "name"), "name must not contain whitespace or '/'"});
    } else if (!seen.insert(writer.name).second) {
      out.push_back({writer_path(i, "name"), "duplicate writer name \"" + writer.name + "\""});
    }

    if (trim(writer.position_statement).empty()) {
      out.push_back({writer_path(i, "position_statement"), "position statement must be nonempty"});
    } else {
      const auto words = statement_word_count(writer.position_statement);
      if (words < kStatementWordsMin || words > kStatementWordsMax) {
        result.notes.push_back(writer_path(i, "position_statement") + " has " +
                               std::to_string(words) +
                               " words; the reference author statements ranged 164-455 words");
      }
    }
    check_binding(writer.binding, writer_path(i, "binding"), out);
  }

  if (trim(config.topic_brief).empty()) {
    out.push_back({"topic_brief", "topic brief must be nonempty"});
  }
  if (config.consensus_max_rounds < 1) {
    out.push_back({"consensus_max_rounds", "must be a positive integer"});
  }
  if (config.writing_sentence_budget < 1) {
    out.push_back({"writing_sentence_budget", "must be a positive integer"});
  } else if (static_cast<std::size_t>(config.writing_sentence_budget) < config.writers.size()) {
    out.push_back({"writing_sentence_budget", "budget " +
                                                  std::to_string(config.writing_sentence_budget) +
                                                  " is smaller than the number of writers"});
  }
  if (config.repair_attempts < 0) {
    out.push_back({"repair_attempts", "must be nonnegative"});
  }
  if (config.duplication_ngram < 3) {
    out.push_back({"duplication_ngram", "must be at least 3"});
  }

  std::set<std::string> shape_ids;
  for (std::size_t i = 0; i < config.shapes.size(); ++i) {
    const auto& shape = config.shapes[i];
    const auto prefix = "shapes[" + std::to_string(i) + "]";
    if (shape.shape_id.empty()) {
      out.push_back({prefix + ".shape_id", "shape_id must be nonempty"});
    } else if (!shape_ids.insert(shape.shape_id).second) {
      out.push_back({prefix + ".shape_id", "duplicate shape_id \"" + shape.shape_id + "\""});
    }
    if (trim(shape.description).empty()) {
      out.push_back({prefix + ".description", "description must be nonempty"});
    }
  }
  return result;
}

}  // namespace writersroom
