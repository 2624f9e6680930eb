#include "writersroom/config_io.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "writersroom/assets.hpp"
#include "writersroom/errors.hpp"

namespace writersroom {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& object, const std::set<std::string>& known,
                         const std::string& where) {
  for (const auto& item : object.items()) {
    if (!known.count(item.key())) {
      throw ConfigError("unknown key \"" + item.key() + "\" in " + where);
    }
  }
}

const json& require(const json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) throw ConfigError(where + " is missing \"" + key + "\"");
  return *it;
}

template <typename T>
T read_or(const json& object, const char* key, T fallback, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw ConfigError(where + "." + key + " has the wrong type");
  }
}

std::string read_string(const json& object, const char* key, const std::string& where) {
  const auto& value = require(object, key, where);
  if (!value.is_string()) throw ConfigError(where + "." + key + " must be a string");
  return value.get<std::string>();
}

ProviderBinding binding_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  reject_unknown_keys(j, {"provider_kind", "endpoint", "model_id", "temperature", "max_retries",
                          "timeout_seconds", "api_key_env"},
                      where);
  ProviderBinding binding;
  const auto kind_text = read_string(j, "provider_kind", where);
  auto kind = parse_provider_kind(kind_text);
  if (!kind) throw ConfigError(where + ".provider_kind \"" + kind_text + "\" is not recognized");
  binding.provider_kind = *kind;
  binding.endpoint = read_or<std::string>(j, "endpoint", "", where);
  binding.model_id = read_or<std::string>(j, "model_id", "", where);
  binding.temperature = read_or<double>(j, "temperature", binding.temperature, where);
  binding.max_retries = read_or<int>(j, "max_retries", binding.max_retries, where);
  binding.timeout_seconds = read_or<double>(j, "timeout_seconds", binding.timeout_seconds, where);
  binding.api_key_env = read_or<std::string>(j, "api_key_env", binding.api_key_env, where);
  return binding;
}

json binding_to_json(const ProviderBinding& binding) {
  json j = json::object();
  j["provider_kind"] = std::string(to_string(binding.provider_kind));
  if (!binding.endpoint.empty()) j["endpoint"] = binding.endpoint;
  j["model_id"] = binding.model_id;
  j["temperature"] = binding.temperature;
  j["max_retries"] = binding.max_retries;
  j["timeout_seconds"] = binding.timeout_seconds;
  j["api_key_env"] = binding.api_key_env;
  return j;
}

}  // namespace

std::string default_topic_brief() {
  auto text = assets::find("topic_brief.txt");
  return trim(text.value_or(""));
}

RoomConfig room_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("room config must be a JSON object");
  reject_unknown_keys(j, {"writers", "topic_brief", "consensus_max_rounds",
                          "writing_sentence_budget", "repair_attempts", "duplication_ngram", "seed",
                          "writing_end_marker", "shapes"},
                      "room config");
  RoomConfig config;
  const auto& writers = require(j, "writers", "room config");
  if (!writers.is_array()) throw ConfigError("writers must be a list");
  for (std::size_t i = 0; i < writers.size(); ++i) {
    const auto where = "writers[" + std::to_string(i) + "]";
    const auto& w = writers[i];
    if (!w.is_object()) throw ConfigError(where + " must be an object");
    reject_unknown_keys(w, {"name", "position_statement", "binding", "persona_note"}, where);
    WriterProfile writer;
    writer.name = read_string(w, "name", where);
    writer.position_statement = read_string(w, "position_statement", where);
    writer.binding = binding_from_json(require(w, "binding", where), where + ".binding");
    if (auto it = w.find("persona_note"); it != w.end() && !it->is_null()) {
      if (!it->is_string()) throw ConfigError(where + ".persona_note must be a string");
      writer.persona_note = it->get<std::string>();
    }
    config.writers.push_back(std::move(writer));
  }
  config.topic_brief = read_or<std::string>(j, "topic_brief", default_topic_brief(), "room config");
  config.consensus_max_rounds =
      read_or<int>(j, "consensus_max_rounds", config.consensus_max_rounds, "room config");
  config.writing_sentence_budget =
      read_or<int>(j, "writing_sentence_budget", config.writing_sentence_budget, "room config");
  config.repair_attempts = read_or<int>(j, "repair_attempts", config.repair_attempts, "room config");
  config.duplication_ngram =
      read_or<int>(j, "duplication_ngram", config.duplication_ngram, "room config");
  config.seed = read_or<std::int64_t>(j, "seed", config.seed, "room config");
  config.writing_end_marker =
      read_or<bool>(j, "writing_end_marker", config.writing_end_marker, "room config");
  if (auto it = j.find("shapes"); it != j.end()) {
    if (!it->is_array()) throw ConfigError("shapes must be a list");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const auto where = "shapes[" + std::to_string(i) + "]";
      const auto& s = (*it)[i];
      if (!s.is_object()) throw ConfigError(where + " must be an object");
      reject_unknown_keys(s, {"shape_id", "title", "description"}, where);
      config.shapes.push_back({read_string(s, "shape_id", where),
                               read_or<std::string>(s, "title", "", where),
                               read_string(s, "description", where)});
    }
  }
  return config;
}

json room_to_json(const RoomConfig& config) {
  json j = json::object();
  json writers = json::array();
  for (const auto& writer : config.writers) {
    json w = json::object();
    w["name"] = writer.name;
    w["position_statement"] = writer.position_statement;
    w["binding"] = binding_to_json(writer.binding);
    if (writer.persona_note) w["persona_note"] = *writer.persona_note;
    writers.push_back(std::move(w));
  }
  j["writers"] = std::move(writers);
  j["topic_brief"] = config.topic_brief;
  j["consensus_max_rounds"] = config.consensus_max_rounds;
  j["writing_sentence_budget"] = config.writing_sentence_budget;
  j["repair_attempts"] = config.repair_attempts;
  j["duplication_ngram"] = config.duplication_ngram;
  j["seed"] = config.seed;
  j["writing_end_marker"] = config.writing_end_marker;
  if (!config.shapes.empty()) {
    json shapes = json::array();
    for (const auto& shape : config.shapes) {
      shapes.push_back(
          {{"shape_id", shape.shape_id}, {"title", shape.title}, {"description", shape.description}});
    }
    j["shapes"] = std::move(shapes);
  }
  return j;
}

RoomConfig load_room(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("config " + path.string() + " is not valid JSON: " + e.what());
  }
  return room_from_json(j);
}

void save_room(const RoomConfig& config, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw ConfigError("cannot write config " + path.string());
  out << room_to_json(config).dump(2) << '\n';
  if (!out.flush()) throw ConfigError("failed writing config " + path.string());
}

RoomConfig reference_room() {
  auto text = assets::find("reference_room.json");
  if (!text) throw ConfigError("reference room asset is missing");
  return room_from_json(json::parse(*text));
}

std::string config_digest(const RoomConfig& config) {
  // nlohmann::json objects keep keys sorted, so dump() is canonical.
  const auto canonical = room_to_json(config).dump();
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(canonical.data(), canonical.size(), digest.data(), &length, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("sha256 digest failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

}  // namespace writersroom
