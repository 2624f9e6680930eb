#pragma once

#include <filesystem>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "writersroom/provider.hpp"

namespace writersroom {

inline constexpr const char* kScriptFiller = "The cursor blinked, waiting for the next line.";

// Canned responses keyed by RequestTag::key().
struct Script {
  std::map<std::string, std::string> entries;
  bool strict = true;
  std::string filler = kScriptFiller;
};

// {"strict": bool, "filler": string, "entries": {"phase/round/writer": text}}
Script script_from_json(const nlohmann::json& json);
nlohmann::json script_to_json(const Script& script);
Script load_script(const std::filesystem::path& path);

class ScriptedProvider : public ChatProvider {
 public:
  explicit ScriptedProvider(Script script) : script_(std::move(script)) {}

  // Strict scripts throw ScriptMiss for unknown keys; lenient ones answer with
  // the filler sentence.
  ChatReply complete(const ChatTurnRequest& request) override;

  const Script& script() const { return script_; }

 private:
  Script script_;
};

}  // namespace writersroom
