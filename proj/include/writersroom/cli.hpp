#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>

#include "writersroom/core.hpp"
#include "writersroom/http_provider.hpp"
#include "writersroom/room.hpp"
#include "writersroom/scripted_provider.hpp"

namespace writersroom::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_config = 2,
  exit_provider = 3,
  exit_resumable = 4,
};

struct RunOptions {
  std::filesystem::path config;  // optional when resuming
  // "scripted" or "http" forces every writer onto that provider; empty routes
  // by each writer's binding.
  std::string provider;
  std::filesystem::path script;
  std::filesystem::path out = "sessions";
  std::string session_id;
  std::string resume_id;
  HttpOptions http;
  SessionHooks hooks;
};

int cmd_init(const std::filesystem::path& path, bool force, std::ostream& out, std::ostream& err);
int cmd_validate(const std::filesystem::path& config, std::ostream& out, std::ostream& err);
int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err);
// Runs the bundled scripted room. Only the story goes to `out`. An empty
// `out_dir` means a fresh temporary directory.
int cmd_demo(const std::filesystem::path& out_dir, std::ostream& out, std::ostream& err);
int cmd_export(const std::filesystem::path& root, const std::string& session_id, bool attribution,
               std::ostream& out, std::ostream& err);

// The reference room with every writer on the scripted provider and a short
// writing budget, paired with demo_script().
RoomConfig demo_room();
Script demo_script();
inline constexpr const char* kDemoSessionId = "demo";

// Parses argv and dispatches. Installs no signal handlers; pass `cancelled`
// to make runs interruptible.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err,
            std::function<bool()> cancelled = {});

}  // namespace writersroom::cli
