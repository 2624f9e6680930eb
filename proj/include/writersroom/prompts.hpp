#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "writersroom/chat.hpp"
#include "writersroom/core.hpp"

namespace writersroom {

enum class PromptPhase { ideation, consensus, decision, summary, writing };

std::string_view to_string(PromptPhase phase);

// Everything sent to one writer for one turn.
struct PromptBundle {
  std::string system_text;  // starts with render_base()
  std::vector<ChatMessage> context_messages;
  PromptPhase phase = PromptPhase::ideation;

  // system_text as a system message, followed by the context.
  std::vector<ChatMessage> messages() const;

  bool operator==(const PromptBundle&) const = default;
};

// Inputs a phase prompt may draw on. Each phase reads only its own fields:
//   ideation  - nothing
//   consensus - proposals, transcript, round
//   decision  - transcript
//   summary   - transcript, decisions
//   writing   - decisions, own_summary, story
struct PhaseContext {
  std::span<const NarrativeProposal> proposals;
  std::span<const DeliberationTurn> transcript;
  int round = 1;
  std::string_view decisions;
  std::string_view own_summary;
  std::span<const Contribution> story;
};

// "A", "A and B", "A, B, and C".
std::string serial_list(std::span<const std::string> items);

// The base writer prompt with the writer's name, the other writers, the topic
// brief, and the writer's position statement substituted. Throws ConfigError
// when the writer is not part of the room.
std::string render_base(const WriterProfile& writer, const RoomConfig& room);

PromptBundle render_phase(PromptPhase phase, const WriterProfile& writer, const RoomConfig& room,
                          const PhaseContext& context);

// Extends a writing bundle with the rejected attempt and what was wrong with it.
PromptBundle render_repair(const PromptBundle& writing, std::string_view rejected,
                           std::span<const std::string> problems);

std::string format_shapes(std::span<const StoryShape> shapes);
std::string format_proposals(std::span<const NarrativeProposal> proposals);
std::string format_transcript(std::span<const DeliberationTurn> transcript);
std::string format_story(std::span<const Contribution> story);

}  // namespace writersroom
