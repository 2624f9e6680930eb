#include "writersroom/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "writersroom/assets.hpp"
#include "writersroom/config_io.hpp"
#include "writersroom/errors.hpp"
#include "writersroom/session.hpp"
#include "writersroom/text.hpp"
#include "writersroom/writing.hpp"

namespace writersroom::cli {
namespace fs = std::filesystem;

namespace {

constexpr int kDemoBudget = 12;

void print_diagnostics(const RoomValidation& validation, std::ostream& err) {
  for (const auto& d : validation.diagnostics) err << "error: " << d.path << ": " << d.message << "\n";
}

void print_notes(const RoomValidation& validation, std::ostream& err) {
  for (const auto& note : validation.notes) err << "note: " << note << "\n";
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Writers that will be served over HTTP under the chosen provider mode.
std::vector<const WriterProfile*> http_writers(const RoomConfig& room, const std::string& mode) {
  std::vector<const WriterProfile*> found;
  if (mode == "scripted") return found;
  for (const auto& writer : room.writers) {
    if (mode == "http" || writer.binding.provider_kind == ProviderKind::http_chat) {
      found.push_back(&writer);
    }
  }
  return found;
}

void check_credentials(const std::vector<const WriterProfile*>& writers) {
  std::vector<std::string> missing;
  for (const auto* writer : writers) {
    if (writer->binding.endpoint.empty()) {
      missing.push_back("writer " + writer->name + " has no endpoint for the http provider");
      continue;
    }
    const char* value = std::getenv(writer->binding.api_key_env.c_str());
    if (value == nullptr || *value == '\0') {
      missing.push_back("writer " + writer->name + " needs the credential in $" +
                        writer->binding.api_key_env);
    }
  }
  if (!missing.empty()) throw ConfigError("provider credentials are missing", missing);
}

// Sends every request to one target regardless of binding kind.
class ForcedProvider : public ChatProvider {
 public:
  explicit ForcedProvider(ChatProvider& target) : target_(target) {}
  ChatReply complete(const ChatTurnRequest& request) override { return target_.complete(request); }

 private:
  ChatProvider& target_;
};

struct ProviderSet {
  std::unique_ptr<HttpChatProvider> http;
  std::unique_ptr<ScriptedProvider> scripted;
  std::unique_ptr<ChatProvider> front;
};

ProviderSet make_providers(const RoomConfig& room, const RunOptions& options) {
  const auto& mode = options.provider;
  if (!mode.empty() && mode != "scripted" && mode != "http") {
    throw ConfigError("unknown provider '" + mode + "'; expected scripted or http");
  }
  ProviderSet set;
  const auto remote = http_writers(room, mode);
  if (!remote.empty()) {
    check_credentials(remote);
    set.http = std::make_unique<HttpChatProvider>(options.http);
  }
  const bool needs_script =
      mode == "scripted" ||
      (mode.empty() && remote.size() < room.writers.size());
  if (needs_script) {
    if (options.script.empty()) throw ConfigError("scripted writers need --script");
    set.scripted = std::make_unique<ScriptedProvider>(load_script(options.script));
  }
  if (mode == "scripted") {
    set.front = std::make_unique<ForcedProvider>(*set.scripted);
  } else if (mode == "http") {
    set.front = std::make_unique<ForcedProvider>(*set.http);
  } else {
    set.front = std::make_unique<RoutingProvider>(set.http.get(), set.scripted.get());
  }
  return set;
}

void report_outputs(const Session& session, const SessionRun& run, std::ostream& out,
                    std::ostream& err) {
  const auto& paths = session.manifest().artifact_paths;
  if (run.status == RunStatus::already_complete) {
    out << "session " << session.manifest().session_id << " is already complete\n";
  } else {
    out << "story: " << session.artifact(paths.story).string() << "\n";
    out << "attribution: " << session.artifact(paths.attribution).string() << "\n";
    out << "sentences: " << run.room.draft.contributions.size() << "\n";
    if (!text::has_dialogue(export_story(run.room.draft))) {
      err << "warning: the story contains no dialogue\n";
    }
  }
}

int handle_failure(const std::exception_ptr& failure, const std::string& session_id,
                   const fs::path& root, std::ostream& err) {
  auto resume_hint = [&] {
    if (!session_id.empty()) {
      err << "resume with: writersroom run --resume " << session_id << " --out " << root.string()
          << "\n";
    }
  };
  try {
    std::rethrow_exception(failure);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    for (const auto& d : e.details()) err << "  " << d << "\n";
    return exit_config;
  } catch (const DigestMismatch& e) {
    err << "error: " << e.what() << "\n";
    return exit_config;
  } catch (const SessionCollision& e) {
    err << "error: " << e.what() << "\n";
    return exit_config;
  } catch (const ProviderError& e) {
    err << "error: provider failed: " << e.what() << "\n";
    resume_hint();
    return exit_provider;
  } catch (const Interrupted&) {
    err << "interrupted\n";
    resume_hint();
    return exit_resumable;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    resume_hint();
    return exit_resumable;
  }
}

fs::path fresh_temp_dir() {
  std::random_device rd;
  for (int i = 0; i < 16; ++i) {
    auto candidate = fs::temp_directory_path() / ("writersroom-demo-" + std::to_string(rd()));
    if (fs::create_directory(candidate)) return candidate;
  }
  throw StorageError("cannot create a temporary directory");
}

}  // namespace

int cmd_init(const fs::path& path, bool force, std::ostream& out, std::ostream& err) {
  try {
    if (fs::exists(path) && !force) {
      err << "error: " << path.string() << " exists; pass --force to overwrite\n";
      return exit_config;
    }
    save_room(reference_room(), path);
    out << "wrote " << path.string() << "\n";
    return exit_ok;
  } catch (const std::exception& e) {
    err << "error: cannot write " << path.string() << ": " << e.what() << "\n";
    return exit_config;
  }
}

int cmd_validate(const fs::path& config, std::ostream& out, std::ostream& err) {
  RoomConfig room;
  try {
    room = load_room(config);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    for (const auto& d : e.details()) err << "  " << d << "\n";
    return exit_config;
  }
  const auto validation = validate_room(room);
  print_diagnostics(validation, err);
  print_notes(validation, err);
  if (!validation.ok()) return exit_config;
  out << "ok: " << room.writers.size() << " writers, budget " << room.writing_sentence_budget
      << ", digest " << config_digest(room) << "\n";
  return exit_ok;
}

int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err) {
  std::string session_id = options.resume_id;
  try {
    std::optional<RoomConfig> given;
    if (!options.config.empty()) given = load_room(options.config);

    std::optional<Session> session;
    if (options.resume_id.empty()) {
      if (!given) throw ConfigError("run needs --config or --resume");
      const auto validation = validate_room(*given);
      print_diagnostics(validation, err);
      if (!validation.ok()) return exit_config;
      print_notes(validation, err);
    } else {
      session.emplace(Session::load(options.out, options.resume_id));
      if (given && config_digest(*given) != session->manifest().config_digest) {
        throw DigestMismatch("config " + options.config.string() + " does not match session " +
                             options.resume_id + "; the config changed since the session was opened");
      }
    }

    const RoomConfig room = session ? session->stored_config() : *given;
    auto providers = make_providers(room, options);

    if (!session) {
      session.emplace(Session::open(options.out, room, options.session_id));
      session_id = session->manifest().session_id;
      out << "session " << session_id << " at " << session->dir().string() << "\n";
    } else {
      out << "resuming session " << session_id << "\n";
    }

    SessionHooks hooks = options.hooks;
    if (!hooks.control.progress) hooks.control.progress = [&](const std::string& line) { err << line << "\n"; };
    const auto run = run_session(*session, *providers.front, hooks);
    report_outputs(*session, run, out, err);
    return exit_ok;
  } catch (...) {
    return handle_failure(std::current_exception(), session_id, options.out, err);
  }
}

RoomConfig demo_room() {
  auto room = reference_room();
  for (auto& writer : room.writers) {
    writer.binding.provider_kind = ProviderKind::scripted;
    writer.binding.endpoint.clear();
  }
  room.writing_sentence_budget = kDemoBudget;
  return room;
}

Script demo_script() {
  const auto text = assets::find("demo_script.json");
  if (!text) throw Error("demo script asset is missing");
  return script_from_json(nlohmann::json::parse(*text));
}

int cmd_demo(const fs::path& out_dir, std::ostream& out, std::ostream& err) {
  fs::path root = out_dir;
  try {
    if (root.empty()) root = fresh_temp_dir();
    ScriptedProvider provider(demo_script());
    auto session = Session::open(root, demo_room(), kDemoSessionId);
    const auto run = run_session(session, provider);
    out << export_story(run.room.draft) << "\n";
    err << "demo session written to " << session.dir().string() << "\n";
    return exit_ok;
  } catch (...) {
    return handle_failure(std::current_exception(), {}, root, err);
  }
}

int cmd_export(const fs::path& root, const std::string& session_id, bool attribution,
               std::ostream& out, std::ostream& err) {
  try {
    const auto session = Session::load(root, session_id);
    if (!session.manifest().complete()) {
      err << "error: session " << session_id << " is not complete; resume it first\n";
      return exit_resumable;
    }
    const auto& paths = session.manifest().artifact_paths;
    out << read_file(session.artifact(attribution ? paths.attribution : paths.story));
    return exit_ok;
  } catch (...) {
    return handle_failure(std::current_exception(), {}, root, err);
  }
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err,
            std::function<bool()> cancelled) {
  CLI::App app{"Multi-writer story room"};
  app.require_subcommand(1);

  fs::path init_path;
  bool init_force = false;
  auto* init = app.add_subcommand("init", "Write the reference room config");
  init->add_option("path", init_path, "Where to write the config")->required();
  init->add_flag("--force", init_force, "Overwrite an existing file");

  fs::path validate_config;
  auto* validate = app.add_subcommand("validate", "Check a room config");
  validate->add_option("--config,config", validate_config, "Room config")->required();

  RunOptions run_options;
  auto* run = app.add_subcommand("run", "Run or resume a session");
  run->add_option("--config", run_options.config, "Room config");
  run->add_option("--provider", run_options.provider, "Force every writer onto one provider")
      ->check(CLI::IsMember({"scripted", "http"}));
  run->add_option("--script", run_options.script, "Scripted responses");
  run->add_option("--out", run_options.out, "Directory holding sessions")->capture_default_str();
  run->add_option("--session-id", run_options.session_id, "Name for a new session");
  run->add_option("--resume", run_options.resume_id, "Continue an existing session");

  fs::path demo_out;
  auto* demo = app.add_subcommand("demo", "Run the bundled scripted room");
  demo->add_option("--out", demo_out, "Directory for the demo session");

  fs::path export_root = "sessions";
  std::string export_id;
  bool export_attribution = false;
  auto* exp = app.add_subcommand("export", "Print a finished session's story");
  exp->add_option("--out", export_root, "Directory holding sessions")->capture_default_str();
  exp->add_option("--session,session", export_id, "Session id")->required();
  exp->add_flag("--attribution", export_attribution, "Print the attribution report instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_config;
  }

  if (*init) return cmd_init(init_path, init_force, out, err);
  if (*validate) return cmd_validate(validate_config, out, err);
  if (*run) {
    run_options.hooks.control.cancelled = std::move(cancelled);
    return cmd_run(run_options, out, err);
  }
  if (*demo) return cmd_demo(demo_out, out, err);
  return cmd_export(export_root, export_id, export_attribution, out, err);
}

}  // namespace writersroom::cli
