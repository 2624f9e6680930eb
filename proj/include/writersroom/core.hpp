#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace writersroom {

enum class ProviderKind { http_chat, scripted };

std::string_view to_string(ProviderKind kind);
std::optional<ProviderKind> parse_provider_kind(std::string_view text);

// How one writer reaches its model.
struct ProviderBinding {
  ProviderKind provider_kind = ProviderKind::scripted;
  std::string endpoint;  // http_chat only
  std::string model_id;
  double temperature = 0.9;
  int max_retries = 3;
  double timeout_seconds = 60.0;
  std::string api_key_env = "WRITERSROOM_API_KEY";

  bool operator==(const ProviderBinding&) const = default;
};

struct WriterProfile {
  std::string name;
  std::string position_statement;
  ProviderBinding binding;
  std::optional<std::string> persona_note;

  bool operator==(const WriterProfile&) const = default;
};

// An archetypal trajectory of a protagonist's fortunes.
struct StoryShape {
  std::string shape_id;
  std::string title;
  std::string description;

  bool operator==(const StoryShape&) const = default;
};

// One writer's ideation output. `raw` always holds the unparsed response.
struct NarrativeProposal {
  std::string author;
  std::string genre;
  std::string setting;
  std::string characters;
  std::string shape;
  std::string plot;
  std::string conflict;
  std::vector<std::pair<std::string, std::string>> extras;
  std::string raw;

  bool operator==(const NarrativeProposal&) const = default;
};

struct RoomConfig {
  // Canonical round-robin order for every phase.
  std::vector<WriterProfile> writers;
  std::string topic_brief;
  int consensus_max_rounds = 8;
  int writing_sentence_budget = 32;
  int repair_attempts = 2;
  int duplication_ngram = 10;
  std::int64_t seed = 0;
  // Stop writing early once every writer's latest turn ends with END.
  bool writing_end_marker = false;
  // Overrides the default shape catalog when nonempty.
  std::vector<StoryShape> shapes;

  const WriterProfile* find_writer(std::string_view name) const;
  std::vector<std::string> writer_names() const;
  // The catalog shown to writers during ideation.
  std::vector<StoryShape> prompt_shapes() const;

  bool operator==(const RoomConfig&) const = default;
};

struct DeliberationTurn {
  int round = 1;
  std::string writer;
  std::string text;
  bool yielded = false;

  bool operator==(const DeliberationTurn&) const = default;
};

struct ConsensusOutcome {
  std::vector<DeliberationTurn> transcript;
  std::string decisions;
  std::map<std::string, std::string> summaries;
  // The round cap ended the discussion; unyielded writers were force-yielded.
  bool capped = false;
  std::vector<std::string> forced_yields;

  bool operator==(const ConsensusOutcome&) const = default;
};

enum class ContributionFlag { truncated, duplication_retry_exhausted, self_mention, end_requested };

std::string_view to_string(ContributionFlag flag);
std::optional<ContributionFlag> parse_contribution_flag(std::string_view text);

struct Contribution {
  std::size_t index = 0;
  std::string writer;
  std::string sentence;
  std::set<ContributionFlag> flags;

  bool operator==(const Contribution&) const = default;
};

struct StoryDraft {
  std::vector<Contribution> contributions;
  std::vector<std::string> writer_order;

  bool operator==(const StoryDraft&) const = default;
};

struct Diagnostic {
  std::string path;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

// `diagnostics` lists invariant violations; `notes` are informational only.
struct RoomValidation {
  std::vector<Diagnostic> diagnostics;
  std::vector<std::string> notes;

  bool ok() const { return diagnostics.empty(); }
};

// Word range of the reference author statements.
inline constexpr std::size_t kStatementWordsMin = 164;
inline constexpr std::size_t kStatementWordsMax = 455;

std::vector<StoryShape> shape_catalog();

RoomValidation validate_room(const RoomConfig& config);

// Counts words split on whitespace and hyphens.
std::size_t statement_word_count(std::string_view text);

std::string trim(std::string_view text);

}  // namespace writersroom
