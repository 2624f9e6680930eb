#pragma once

#include <span>
#include <string>
#include <string_view>

#include "writersroom/core.hpp"
#include "writersroom/journal.hpp"
#include "writersroom/provider.hpp"

namespace writersroom {

inline constexpr std::string_view kYieldMarker = "YIELD";

// True when the trimmed text's last whitespace-separated word is exactly
// YIELD (case-sensitive). A final line consisting of YIELD is the common case.
bool detect_yield(std::string_view text);

// Round-robin deliberation in canonical order. Writers who yield are skipped
// in later rounds. The discussion ends when everyone has yielded or after
// room.consensus_max_rounds rounds, in which case the outcome is capped and
// the holdouts are force-yielded. The first writer then states the group's
// decisions, and every writer writes a private summary.
ConsensusOutcome run_consensus(const RoomConfig& room,
                               std::span<const NarrativeProposal> proposals,
                               ChatProvider& provider, Journal& journal,
                               const RunControl& control = {});

// Asks `writer` for a private summary of the finished discussion and stores
// it in outcome.summaries.
const std::string& summarize(const WriterProfile& writer, const RoomConfig& room,
                             ConsensusOutcome& outcome, ChatProvider& provider, Journal& journal);

}  // namespace writersroom
