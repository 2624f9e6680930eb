#pragma once

#include <filesystem>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "writersroom/core.hpp"
#include "writersroom/provider.hpp"
#include "writersroom/scripted_provider.hpp"

namespace wr_test {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(WR_FIXTURE_DIR) / name;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() / ("wr-test-" + std::to_string(rd()) + "-" +
                                                      std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline std::string statement_for(const std::string& name) {
  std::string text = "Writer " + name + " believes software will change.";
  for (int i = 0; i < 40; ++i) text += " Tools evolve, people adapt, and code keeps shipping.";
  return text;
}

inline writersroom::RoomConfig scripted_room(std::vector<std::string> names = {"JW", "MM", "KV",
                                                                              "AI"},
                                             int budget = 8) {
  writersroom::RoomConfig room;
  for (const auto& name : names) {
    writersroom::WriterProfile writer;
    writer.name = name;
    writer.position_statement = statement_for(name);
    writer.binding.provider_kind = writersroom::ProviderKind::scripted;
    writer.binding.model_id = "model-" + name;
    room.writers.push_back(writer);
  }
  room.topic_brief = "Write a short story about software.";
  room.writing_sentence_budget = budget;
  return room;
}

// Short, distinct sentences: fewer than ten words each so no duplication run
// can form across them at the default n-gram length.
inline std::string clean_sentence(std::size_t index) {
  static const std::vector<std::string> nouns = {
      "lantern", "harbor", "ledger", "orchard", "compass", "kettle", "meadow", "signal",
      "archive", "furnace", "glacier", "pendant", "quarry",  "ribbon", "saddle", "thimble",
      "violin",  "walnut",  "yarrow",  "zephyr",  "anchor", "beacon", "cobalt", "dynamo"};
  const auto& a = nouns[index % nouns.size()];
  const auto& b = nouns[(index * 7 + 3) % nouns.size()];
  return "Line " + std::to_string(index + 1) + " finds a " + a + " beside the " + b + ".";
}

// Proposals, a single yielding round, decisions, summaries and `budget` clean
// writing turns for every writer of `room`.
inline writersroom::Script full_script(const writersroom::RoomConfig& room) {
  writersroom::Script script;
  for (const auto& w : room.writers) {
    const auto& n = w.name;
    script.entries["ideation/1/" + n] = "Genre: genre of " + n + "\nSetting: setting of " + n +
                                        "\nPlot: plot of " + n;
    script.entries["consensus/1/" + n] = "I agree with the plan from " + n + ". YIELD";
    script.entries["summary/1/" + n] = "private summary token " + n + "-7f3a";
  }
  script.entries["decision/1/" + room.writers.front().name] = "Genre: shared decision text";
  const auto budget = static_cast<std::size_t>(room.writing_sentence_budget);
  for (std::size_t i = 0; i < budget; ++i) {
    const auto& w = room.writers[i % room.writers.size()].name;
    script.entries["writing/" + std::to_string(i + 1) + "/" + w] = clean_sentence(i);
  }
  return script;
}

// Keeps every request that passes through.
class RecordingProvider : public writersroom::ChatProvider {
 public:
  explicit RecordingProvider(writersroom::ChatProvider& inner) : inner_(inner) {}
  writersroom::ChatReply complete(const writersroom::ChatTurnRequest& request) override {
    {
      std::lock_guard lock(mutex_);
      requests_.push_back(request);
    }
    return inner_.complete(request);
  }
  std::vector<writersroom::ChatTurnRequest> requests() const {
    std::lock_guard lock(mutex_);
    return requests_;
  }

 private:
  writersroom::ChatProvider& inner_;
  mutable std::mutex mutex_;
  std::vector<writersroom::ChatTurnRequest> requests_;
};

inline std::string joined_text(const writersroom::ChatTurnRequest& request) {
  std::string all;
  for (const auto& m : request.messages) all += m.text + "\n";
  return all;
}

}  // namespace wr_test
