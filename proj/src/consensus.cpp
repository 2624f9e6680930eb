#include "writersroom/consensus.hpp"

#include <set>

#include "phase_support.hpp"
#include "writersroom/prompts.hpp"

namespace writersroom {

namespace {

constexpr const char* kPhase = "consensus";

}  // namespace

bool detect_yield(std::string_view text) {
  const auto trimmed = trim(text);
  const auto last_space = trimmed.find_last_of(" \t\r\n\v\f");
  const std::string_view last_word =
      last_space == std::string::npos ? std::string_view(trimmed)
                                      : std::string_view(trimmed).substr(last_space + 1);
  return last_word == kYieldMarker;
}

ConsensusOutcome run_consensus(const RoomConfig& room,
                               std::span<const NarrativeProposal> proposals,
                               ChatProvider& provider, Journal& journal,
                               const RunControl& control) {
  ConsensusOutcome outcome;
  std::set<std::string> yielded;

  for (int round = 1; round <= room.consensus_max_rounds; ++round) {
    for (const auto& writer : room.writers) {
      if (yielded.count(writer.name)) continue;
      control.checkpoint();
      PhaseContext context;
      context.proposals = proposals;
      context.transcript = outcome.transcript;
      context.round = round;

      DeliberationTurn turn{round, writer.name, {}, false};
      if (auto stored = journal.recall(kPhase, round, writer.name, RecordKind::turn)) {
        turn.text = stored->text;
        turn.yielded = detect_yield(turn.text);
      } else {
        const auto bundle = render_phase(PromptPhase::consensus, writer, room, context);
        turn.text = provider
                        .complete(detail::make_request(writer, bundle,
                                                       {kPhase, round, writer.name}))
                        .text;
        turn.yielded = detect_yield(turn.text);
        journal.record(
            {kPhase, round, writer.name, RecordKind::turn, 0, turn.yielded, turn.text, {}});
      }
      if (turn.yielded) yielded.insert(writer.name);
      control.report("consensus: round " + std::to_string(round) + ", " + writer.name +
                     (turn.yielded ? " yielded" : " spoke"));
      outcome.transcript.push_back(std::move(turn));
    }
    if (yielded.size() == room.writers.size()) break;
  }

  for (const auto& writer : room.writers) {
    if (!yielded.count(writer.name)) outcome.forced_yields.push_back(writer.name);
  }
  outcome.capped = !outcome.forced_yields.empty();

  control.checkpoint();
  const auto& chair = room.writers.front();
  PhaseContext context;
  context.transcript = outcome.transcript;
  const auto bundle = render_phase(PromptPhase::decision, chair, room, context);
  TurnRecord proto{kPhase, 1, chair.name, RecordKind::decision, 0, std::nullopt, {}, {}};
  if (outcome.capped) proto.flags.push_back("capped");
  outcome.decisions = detail::recall_or_request(journal, provider, chair, bundle,
                                                {"decision", 1, chair.name}, std::move(proto));
  control.report("consensus: decisions recorded by " + chair.name);

  for (const auto& writer : room.writers) {
    control.checkpoint();
    summarize(writer, room, outcome, provider, journal);
    control.report("consensus: " + writer.name + " summarized");
  }
  return outcome;
}

const std::string& summarize(const WriterProfile& writer, const RoomConfig& room,
                             ConsensusOutcome& outcome, ChatProvider& provider, Journal& journal) {
  PhaseContext context;
  context.transcript = outcome.transcript;
  context.decisions = outcome.decisions;
  const auto bundle = render_phase(PromptPhase::summary, writer, room, context);
  auto text = detail::recall_or_request(
      journal, provider, writer, bundle, {"summary", 1, writer.name},
      {kPhase, 1, writer.name, RecordKind::summary, 0, std::nullopt, {}, {}});
  auto& slot = outcome.summaries[writer.name];
  slot = std::move(text);
  return slot;
}

}  // namespace writersroom
