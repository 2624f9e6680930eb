#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "writersroom/core.hpp"
#include "writersroom/journal.hpp"
#include "writersroom/prompts.hpp"
#include "writersroom/provider.hpp"

namespace writersroom {

enum class ViolationKind { multi_sentence, duplication, self_mention, monotony, empty };

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;

  // Blocking violations send the turn to repair.
  bool blocking() const;
};

struct ContributionCheck {
  std::string sentence;
  std::vector<Violation> violations;

  bool has(ViolationKind kind) const;
  std::size_t blocking_count() const;
};

// Checks one raw response against the draft for `writer`'s turn.
//  - sentence: the first sentence of `raw`, capitalized and terminated if needed
//  - multi_sentence: raw held more than one sentence (informational)
//  - duplication: a run of room.duplication_ngram folded words already in the draft
//  - self_mention: the writer's own name appears as a word
//  - monotony: within 10% of the writer's previous length with the same opening word
//    (informational)
// Throws EmptyContribution when `raw` has no words at all.
ContributionCheck validate_contribution(std::string_view raw, const StoryDraft& draft,
                                        const RoomConfig& room, std::string_view writer);

// One writing turn in progress.
struct WritingTurn {
  const RoomConfig& room;
  const WriterProfile& writer;
  std::size_t index;
  const StoryDraft& draft;
  PromptBundle bundle;
};

// Re-prompts the writer with the problems named, up to room.repair_attempts
// times, stopping at the first candidate without blocking violations. If none
// is clean, the candidate with the fewest blocking violations wins (earliest on
// ties) and carries duplication_retry_exhausted / self_mention flags. `first`
// is the rejected attempt-0 response. Throws EmptyContribution when every
// attempt was empty.
Contribution repair(const WritingTurn& turn, std::string_view first, ChatProvider& provider,
                    Journal& journal);

// Writes room.writing_sentence_budget sentences round-robin in canonical order.
StoryDraft run_writing(const RoomConfig& room, const ConsensusOutcome& outcome,
                       ChatProvider& provider, Journal& journal, const RunControl& control = {});

// Sentences joined by single spaces into one paragraph.
std::string export_story(const StoryDraft& draft);

struct AttributionRow {
  std::size_t index;
  std::string writer;
  std::string sentence;

  bool operator==(const AttributionRow&) const = default;
};

std::vector<AttributionRow> attribution_report(const StoryDraft& draft);

// One JSON object per line: {"index", "writer", "sentence"}.
std::string encode_attribution(const std::vector<AttributionRow>& rows);

}  // namespace writersroom
