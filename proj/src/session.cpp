#include "writersroom/session.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <ctime>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "writersroom/config_io.hpp"
#include "writersroom/errors.hpp"
#include "writersroom/writing.hpp"

namespace writersroom {

namespace fs = std::filesystem;

namespace {

constexpr const char* kManifest = "manifest.json";
constexpr Phase kPhases[] = {Phase::ideation, Phase::consensus, Phase::writing};

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

bool valid_slug(std::string_view id) {
  if (id.empty() || id.size() > 128 || id.front() == '.') return false;
  for (char c : id) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '-' || c == '_' || c == '.';
    if (!ok) return false;
  }
  return true;
}

std::optional<Phase> parse_phase(std::string_view text) {
  for (auto phase : kPhases) {
    if (to_string(phase) == text) return phase;
  }
  return std::nullopt;
}

std::optional<PhaseStatus> parse_status(std::string_view text) {
  for (auto status :
       {PhaseStatus::pending, PhaseStatus::running, PhaseStatus::done, PhaseStatus::aborted}) {
    if (to_string(status) == text) return status;
  }
  return std::nullopt;
}

nlohmann::ordered_json manifest_to_json(const SessionManifest& m) {
  nlohmann::ordered_json j;
  j["session_id"] = m.session_id;
  j["config_digest"] = m.config_digest;
  j["digest_algorithm"] = m.digest_algorithm;
  j["seed"] = m.seed;
  nlohmann::ordered_json phases;
  for (auto phase : kPhases) phases[std::string(to_string(phase))] = to_string(m.status(phase));
  j["phase_status"] = phases;
  j["created_at"] = m.created_at;
  j["updated_at"] = m.updated_at;
  j["artifact_paths"] = {{"config", m.artifact_paths.config},
                         {"transcript", m.artifact_paths.transcript},
                         {"story", m.artifact_paths.story},
                         {"attribution", m.artifact_paths.attribution}};
  return j;
}

SessionManifest manifest_from_json(const nlohmann::json& j) {
  SessionManifest m;
  m.session_id = j.at("session_id").get<std::string>();
  m.config_digest = j.at("config_digest").get<std::string>();
  m.digest_algorithm = j.at("digest_algorithm").get<std::string>();
  m.seed = j.value("seed", std::int64_t{0});
  for (const auto& item : j.at("phase_status").items()) {
    auto phase = parse_phase(item.key());
    auto status = parse_status(item.value().get<std::string>());
    if (!phase || !status) throw StorageError("manifest has an unknown phase status");
    m.phase_status[*phase] = *status;
  }
  m.created_at = j.at("created_at").get<std::string>();
  m.updated_at = j.at("updated_at").get<std::string>();
  const auto& paths = j.at("artifact_paths");
  m.artifact_paths.config = paths.at("config").get<std::string>();
  m.artifact_paths.transcript = paths.at("transcript").get<std::string>();
  m.artifact_paths.story = paths.at("story").get<std::string>();
  m.artifact_paths.attribution = paths.at("attribution").get<std::string>();
  return m;
}

// Writes to a sibling temp file, then renames over the target.
void replace_file(const fs::path& target, std::string_view content) {
  const auto temp = target.string() + ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out.flush()) throw StorageError("cannot write " + temp);
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) throw StorageError("cannot replace " + target.string() + ": " + ec.message());
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StorageError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::ideation: return "ideation";
    case Phase::consensus: return "consensus";
    case Phase::writing: return "writing";
  }
  return "unknown";
}

std::string_view to_string(PhaseStatus status) {
  switch (status) {
    case PhaseStatus::pending: return "pending";
    case PhaseStatus::running: return "running";
    case PhaseStatus::done: return "done";
    case PhaseStatus::aborted: return "aborted";
  }
  return "unknown";
}

PhaseStatus SessionManifest::status(Phase phase) const {
  auto it = phase_status.find(phase);
  return it == phase_status.end() ? PhaseStatus::pending : it->second;
}

bool SessionManifest::complete() const {
  for (auto phase : kPhases) {
    if (status(phase) != PhaseStatus::done) return false;
  }
  return true;
}

std::string make_session_id() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y%m%d-%H%M%S", &tm);
  std::random_device device;
  std::uniform_int_distribution<int> hex(0, 15);
  std::string suffix;
  for (int i = 0; i < 6; ++i) suffix.push_back("0123456789abcdef"[hex(device)]);
  return std::string("room-") + stamp + "-" + suffix;
}

Session::Session(fs::path dir, SessionManifest manifest)
    : dir_(std::move(dir)), manifest_(std::move(manifest)) {}

Session::Session(Session&& other) noexcept
    : dir_(std::move(other.dir_)),
      manifest_(std::move(other.manifest_)),
      transcript_fd_(std::exchange(other.transcript_fd_, -1)) {}

Session& Session::operator=(Session&& other) noexcept {
  if (this != &other) {
    if (transcript_fd_ >= 0) ::close(transcript_fd_);
    dir_ = std::move(other.dir_);
    manifest_ = std::move(other.manifest_);
    transcript_fd_ = std::exchange(other.transcript_fd_, -1);
  }
  return *this;
}

Session::~Session() {
  if (transcript_fd_ >= 0) ::close(transcript_fd_);
}

Session Session::open(const fs::path& root, const RoomConfig& config, std::string session_id) {
  const auto validation = validate_room(config);
  if (!validation.ok()) {
    std::vector<std::string> details;
    for (const auto& d : validation.diagnostics) details.push_back(d.path + ": " + d.message);
    throw ConfigError("room config is invalid", std::move(details));
  }
  if (session_id.empty()) session_id = make_session_id();
  if (!valid_slug(session_id)) {
    throw ConfigError("session id \"" + session_id + "\" must use only letters, digits, . _ -");
  }

  std::error_code ec;
  fs::create_directories(root, ec);
  const auto dir = root / session_id;
  if (!fs::create_directory(dir, ec)) {
    if (ec) throw StorageError("cannot create " + dir.string() + ": " + ec.message());
    throw SessionCollision("session " + session_id + " already exists in " + root.string());
  }

  SessionManifest manifest;
  manifest.session_id = session_id;
  manifest.config_digest = config_digest(config);
  manifest.digest_algorithm = kDigestAlgorithm;
  manifest.seed = config.seed;
  for (auto phase : kPhases) manifest.phase_status[phase] = PhaseStatus::pending;
  manifest.created_at = manifest.updated_at = utc_now();

  Session session(dir, std::move(manifest));
  save_room(config, session.artifact(session.manifest_.artifact_paths.config));
  session.open_transcript();
  session.save_manifest();
  return session;
}

Session Session::load(const fs::path& root, std::string_view session_id) {
  if (!valid_slug(session_id)) {
    throw SessionError("session id \"" + std::string(session_id) + "\" is not valid");
  }
  const auto dir = root / std::string(session_id);
  if (!fs::exists(dir / kManifest)) {
    throw SessionError("no session " + std::string(session_id) + " in " + root.string());
  }
  SessionManifest manifest;
  try {
    manifest = manifest_from_json(nlohmann::json::parse(read_file(dir / kManifest)));
  } catch (const nlohmann::json::exception& e) {
    throw StorageError(std::string("manifest is unreadable: ") + e.what());
  }
  Session session(dir, std::move(manifest));

  // Cut a torn final line so appends resume on a record boundary.
  const auto transcript = session.artifact(session.manifest_.artifact_paths.transcript);
  if (fs::exists(transcript)) {
    const auto content = read_file(transcript);
    const auto keep = content.rfind('\n') == std::string::npos ? 0 : content.rfind('\n') + 1;
    if (keep != content.size()) fs::resize_file(transcript, keep);
  }
  session.open_transcript();
  return session;
}

void Session::open_transcript() {
  const auto path = artifact(manifest_.artifact_paths.transcript);
  transcript_fd_ = ::open(path.c_str(), O_WRONLY | O_APPEND | O_CREAT | O_CLOEXEC, 0644);
  if (transcript_fd_ < 0) {
    throw StorageError("cannot open " + path.string() + ": " + std::strerror(errno));
  }
}

RoomConfig Session::stored_config() const {
  return load_room(artifact(manifest_.artifact_paths.config));
}

void Session::append_turn(const TurnRecord& record) {
  bool running = false;
  for (auto phase : kPhases) running = running || manifest_.status(phase) == PhaseStatus::running;
  if (!running) {
    throw SessionStateError(manifest_.complete() ? "session is complete; transcript is closed"
                                                 : "no phase is running");
  }
  const auto line = encode_record(record) + "\n";
  std::size_t written = 0;
  while (written < line.size()) {
    const auto n = ::write(transcript_fd_, line.data() + written, line.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw StorageError(std::string("transcript append failed: ") + std::strerror(errno));
    }
    written += static_cast<std::size_t>(n);
  }
  if (::fdatasync(transcript_fd_) != 0) {
    throw StorageError(std::string("transcript sync failed: ") + std::strerror(errno));
  }
}

std::vector<TurnRecord> Session::read_transcript() const {
  const auto content = read_file(artifact(manifest_.artifact_paths.transcript));
  std::vector<TurnRecord> records;
  std::size_t pos = 0;
  while (pos < content.size()) {
    const auto end = content.find('\n', pos);
    if (end == std::string::npos) break;  // torn tail
    if (end > pos) records.push_back(decode_record(std::string_view(content).substr(pos, end - pos)));
    pos = end + 1;
  }
  return records;
}

void Session::set_phase(Phase phase, PhaseStatus status) {
  auto requires_done = [&](Phase before) {
    if (manifest_.status(before) != PhaseStatus::done) {
      throw SessionStateError(std::string(to_string(phase)) + " cannot be " +
                              std::string(to_string(status)) + " before " +
                              std::string(to_string(before)) + " is done");
    }
  };
  if (status == PhaseStatus::running || status == PhaseStatus::done) {
    if (phase == Phase::consensus) requires_done(Phase::ideation);
    if (phase == Phase::writing) requires_done(Phase::consensus);
  }
  if (manifest_.status(phase) == PhaseStatus::done && status != PhaseStatus::done) {
    throw SessionStateError(std::string(to_string(phase)) + " is already done");
  }
  manifest_.phase_status[phase] = status;
  manifest_.updated_at = utc_now();
  save_manifest();
}

void Session::save_manifest() {
  replace_file(dir_ / kManifest, manifest_to_json(manifest_).dump(2) + "\n");
}

void Session::write_outputs(const StoryDraft& draft) {
  const auto story = export_story(draft);
  replace_file(artifact(manifest_.artifact_paths.story), story.empty() ? story : story + "\n");
  replace_file(artifact(manifest_.artifact_paths.attribution),
               encode_attribution(attribution_report(draft)));
}

}  // namespace writersroom
