#include "writersroom/room.hpp"

#include <optional>

#include "writersroom/config_io.hpp"
#include "writersroom/consensus.hpp"
#include "writersroom/errors.hpp"
#include "writersroom/ideation.hpp"
#include "writersroom/writing.hpp"

namespace writersroom {

RoomRun run_room(const RoomConfig& room, ChatProvider& provider, Journal& journal,
                 const RunControl& control, const PhaseListener& on_phase) {
  auto notify = [&](Phase phase, PhaseStatus status) {
    if (on_phase) on_phase(phase, status);
  };
  RoomRun run;

  notify(Phase::ideation, PhaseStatus::running);
  run.proposals = run_ideation(room, provider, journal, control);
  notify(Phase::ideation, PhaseStatus::done);

  notify(Phase::consensus, PhaseStatus::running);
  const auto proposals = ordered_proposals(room, run.proposals);
  run.consensus = run_consensus(room, proposals, provider, journal, control);
  notify(Phase::consensus, PhaseStatus::done);

  notify(Phase::writing, PhaseStatus::running);
  run.draft = run_writing(room, run.consensus, provider, journal, control);
  notify(Phase::writing, PhaseStatus::done);
  return run;
}

SessionRun run_session(Session& session, ChatProvider& provider, const SessionHooks& hooks) {
  if (session.manifest().complete()) return {RunStatus::already_complete, {}};

  const auto room = session.stored_config();
  if (config_digest(room) != session.manifest().config_digest) {
    throw DigestMismatch("stored config of session " + session.manifest().session_id +
                         " no longer matches its manifest digest");
  }

  Journal journal(session.read_transcript(), [&](const TurnRecord& record) {
    if (hooks.before_append) hooks.before_append(record);
    session.append_turn(record);
  });

  std::optional<Phase> active;
  auto on_phase = [&](Phase phase, PhaseStatus status) {
    // Writing is marked done only after its outputs exist.
    if (phase == Phase::writing && status == PhaseStatus::done) return;
    active = status == PhaseStatus::running ? std::optional<Phase>(phase) : std::nullopt;
    if (session.manifest().status(phase) == PhaseStatus::done) return;
    session.set_phase(phase, status);
  };

  SessionRun result;
  try {
    result.room = run_room(room, provider, journal, hooks.control, on_phase);
    session.write_outputs(result.room.draft);
    session.set_phase(Phase::writing, PhaseStatus::done);
    active.reset();
  } catch (...) {
    if (active && session.manifest().status(*active) == PhaseStatus::running) {
      try {
        session.set_phase(*active, PhaseStatus::aborted);
      } catch (...) {
        // The original failure is the one worth reporting.
      }
    }
    throw;
  }
  return result;
}

SessionRun resume(const std::filesystem::path& root, std::string_view session_id,
                  ChatProvider& provider, const RoomConfig* config, const SessionHooks& hooks) {
  auto session = Session::load(root, session_id);
  if (config != nullptr && config_digest(*config) != session.manifest().config_digest) {
    throw DigestMismatch("config digest " + config_digest(*config).substr(0, 12) +
                         " does not match session " + std::string(session_id) + " (" +
                         session.manifest().config_digest.substr(0, 12) +
                         "); the config changed since the session was opened");
  }
  return run_session(session, provider, hooks);
}

}  // namespace writersroom
