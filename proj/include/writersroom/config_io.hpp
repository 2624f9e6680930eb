#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "writersroom/core.hpp"

namespace writersroom {

// Throws ConfigError on missing fields, wrong types, or unknown keys.
RoomConfig room_from_json(const nlohmann::json& json);
nlohmann::json room_to_json(const RoomConfig& config);

RoomConfig load_room(const std::filesystem::path& path);
void save_room(const RoomConfig& config, const std::filesystem::path& path);

// The four-writer reference room shipped with the project.
RoomConfig reference_room();

// The design-fiction task used when a config omits `topic_brief`.
std::string default_topic_brief();

inline constexpr const char* kDigestAlgorithm = "sha256";

// Hex SHA-256 over the canonical JSON form of the config.
std::string config_digest(const RoomConfig& config);

}  // namespace writersroom
