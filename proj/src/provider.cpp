#include "writersroom/provider.hpp"

#include <fstream>

#include "writersroom/errors.hpp"
#include "writersroom/scripted_provider.hpp"

namespace writersroom {

std::string RequestTag::key() const {
  auto key = phase + "/" + std::to_string(round) + "/" + writer;
  if (attempt > 0) key += "/retry" + std::to_string(attempt);
  return key;
}

void check_request(const ChatTurnRequest& request) {
  if (request.messages.empty()) throw Error("chat request " + request.tag.key() + " is empty");
  if (request.messages.front().role != ChatRole::system) {
    throw Error("chat request " + request.tag.key() + " must start with a system message");
  }
}

ChatReply RoutingProvider::complete(const ChatTurnRequest& request) {
  ChatProvider* target =
      request.binding.provider_kind == ProviderKind::http_chat ? http_ : scripted_;
  if (target == nullptr) {
    throw ConfigError("no " + std::string(to_string(request.binding.provider_kind)) +
                      " provider is configured for " + request.tag.writer);
  }
  return target->complete(request);
}

Script script_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("script must be a JSON object");
  Script script;
  try {
    script.strict = j.value("strict", true);
    script.filler = j.value("filler", std::string(kScriptFiller));
    if (auto it = j.find("entries"); it != j.end()) {
      if (!it->is_object()) throw ConfigError("script entries must be an object");
      for (const auto& item : it->items()) {
        script.entries.emplace(item.key(), item.value().get<std::string>());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed script: ") + e.what());
  }
  return script;
}

nlohmann::json script_to_json(const Script& script) {
  return {{"strict", script.strict}, {"filler", script.filler}, {"entries", script.entries}};
}

Script load_script(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read script " + path.string());
  try {
    return script_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("script " + path.string() + " is not valid JSON: " + e.what());
  }
}

ChatReply ScriptedProvider::complete(const ChatTurnRequest& request) {
  check_request(request);
  const auto key = request.tag.key();
  if (auto it = script_.entries.find(key); it != script_.entries.end()) return {it->second, 1};
  if (script_.strict) throw ScriptMiss(key);
  return {script_.filler, 1};
}

}  // namespace writersroom
