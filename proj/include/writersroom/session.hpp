#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "writersroom/core.hpp"
#include "writersroom/journal.hpp"

namespace writersroom {

enum class Phase { ideation, consensus, writing };
enum class PhaseStatus { pending, running, done, aborted };

std::string_view to_string(Phase phase);
std::string_view to_string(PhaseStatus status);

struct ArtifactPaths {
  std::string config = "config.json";
  std::string transcript = "transcript.jsonl";
  std::string story = "story.txt";
  std::string attribution = "attribution.jsonl";

  bool operator==(const ArtifactPaths&) const = default;
};

struct SessionManifest {
  std::string session_id;
  std::string config_digest;
  std::string digest_algorithm;
  std::int64_t seed = 0;
  std::map<Phase, PhaseStatus> phase_status;
  std::string created_at;
  std::string updated_at;
  ArtifactPaths artifact_paths;

  PhaseStatus status(Phase phase) const;
  bool complete() const;
};

// "room-YYYYMMDD-HHMMSS-xxxxxx" with a random suffix.
std::string make_session_id();

// A session directory: manifest.json, config.json, transcript.jsonl, and once
// writing is done, story.txt and attribution.jsonl. The transcript is
// append-only, one record per line.
class Session {
 public:
  // Validates the config, then creates <root>/<session_id>. Throws ConfigError
  // for an invalid config and SessionCollision when the directory exists.
  static Session open(const std::filesystem::path& root, const RoomConfig& config,
                      std::string session_id = {});

  // Opens an existing session. A torn final transcript line is cut off.
  static Session load(const std::filesystem::path& root, std::string_view session_id);

  Session(Session&&) noexcept;
  Session& operator=(Session&&) noexcept;
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;
  ~Session();

  const SessionManifest& manifest() const { return manifest_; }
  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path artifact(std::string_view relative) const { return dir_ / relative; }

  RoomConfig stored_config() const;

  // Appends one line with a single write. Throws SessionStateError unless a
  // phase is running, StorageError if the write fails.
  void append_turn(const TurnRecord& record);

  std::vector<TurnRecord> read_transcript() const;

  // Enforces phase order: consensus needs ideation done, writing needs
  // consensus done.
  void set_phase(Phase phase, PhaseStatus status);

  void write_outputs(const StoryDraft& draft);

 private:
  Session(std::filesystem::path dir, SessionManifest manifest);
  void save_manifest();
  void open_transcript();

  std::filesystem::path dir_;
  SessionManifest manifest_;
  int transcript_fd_ = -1;
};

}  // namespace writersroom
