#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "writersroom/core.hpp"
#include "writersroom/journal.hpp"
#include "writersroom/provider.hpp"
#include "writersroom/session.hpp"

namespace writersroom {

struct RoomRun {
  std::map<std::string, NarrativeProposal> proposals;
  ConsensusOutcome consensus;
  StoryDraft draft;
};

using PhaseListener = std::function<void(Phase, PhaseStatus)>;

// Ideation, consensus, then writing. Records already in `journal` are
// replayed instead of asking the provider.
RoomRun run_room(const RoomConfig& room, ChatProvider& provider, Journal& journal,
                 const RunControl& control = {}, const PhaseListener& on_phase = {});

enum class RunStatus { completed, already_complete };

struct SessionRun {
  RunStatus status = RunStatus::completed;
  RoomRun room;
};

struct SessionHooks {
  RunControl control;
  // Called before each transcript append; throwing aborts the run there.
  std::function<void(const TurnRecord&)> before_append;
};

// Runs a session to completion, replaying its transcript first. On failure the
// running phase is marked aborted and the exception propagates.
SessionRun run_session(Session& session, ChatProvider& provider, const SessionHooks& hooks = {});

// Loads a session and continues it. When `config` is given its digest must
// match the manifest; the stored config must always match. Throws
// DigestMismatch otherwise.
SessionRun resume(const std::filesystem::path& root, std::string_view session_id,
                  ChatProvider& provider, const RoomConfig* config = nullptr,
                  const SessionHooks& hooks = {});

}  // namespace writersroom
