#include <gtest/gtest.h>

#include "test_support.hpp"
#include "writersroom/config_io.hpp"
#include "writersroom/errors.hpp"

using namespace writersroom;
using nlohmann::json;

TEST(ConfigIo, RoundTripPreservesEverything) {
  auto room = wr_test::scripted_room();
  room.writers[1].persona_note = "Prefers short sentences.";
  room.shapes = {{"loop", "Loop", "Ends where it began."}};
  room.writing_end_marker = true;
  room.seed = 42;
  EXPECT_EQ(room_from_json(room_to_json(room)), room);
}

TEST(ConfigIo, SaveAndLoad) {
  wr_test::TempDir dir;
  const auto room = reference_room();
  save_room(room, dir.path() / "room.json");
  EXPECT_EQ(load_room(dir.path() / "room.json"), room);
}

TEST(ConfigIo, UnknownKeyRejected) {
  auto j = room_to_json(wr_test::scripted_room());
  j["writers"][0]["nickname"] = "J";
  EXPECT_THROW(room_from_json(j), ConfigError);
  j = room_to_json(wr_test::scripted_room());
  j["budget"] = 3;
  EXPECT_THROW(room_from_json(j), ConfigError);
}

TEST(ConfigIo, WrongTypesRejected) {
  auto j = room_to_json(wr_test::scripted_room());
  j["writers"][0]["binding"]["temperature"] = "hot";
  EXPECT_THROW(room_from_json(j), ConfigError);
  j = room_to_json(wr_test::scripted_room());
  j["writers"][0]["binding"]["provider_kind"] = "telegraph";
  EXPECT_THROW(room_from_json(j), ConfigError);
}

TEST(ConfigIo, MissingFileIsConfigError) {
  EXPECT_THROW(load_room("/nonexistent/room.json"), ConfigError);
}

TEST(ConfigIo, MalformedJsonIsConfigError) {
  wr_test::TempDir dir;
  {
    std::ofstream out(dir.path() / "bad.json");
    out << "{ not json";
  }
  EXPECT_THROW(load_room(dir.path() / "bad.json"), ConfigError);
}

TEST(ConfigIo, TopicBriefDefaultsWhenOmitted) {
  auto j = room_to_json(wr_test::scripted_room());
  j.erase("topic_brief");
  EXPECT_EQ(room_from_json(j).topic_brief, default_topic_brief());
}

TEST(ReferenceRoom, MatchesPublishedSetup) {
  const auto room = reference_room();
  ASSERT_EQ(room.writer_names(), (std::vector<std::string>{"JW", "MM", "KV", "AI"}));
  for (const auto& w : room.writers) {
    EXPECT_DOUBLE_EQ(w.binding.temperature, 0.9);
    EXPECT_EQ(wr_test::read_file(wr_test::fixture("statements/" + w.name + ".txt")),
              w.position_statement);
  }
  EXPECT_NE(room.find_writer("AI")->position_statement.find("I am artificial intelligence."),
            std::string::npos);
  EXPECT_TRUE(validate_room(room).ok());
}

TEST(ConfigDigest, StableAndSensitive) {
  const auto room = reference_room();
  const auto digest = config_digest(room);
  EXPECT_EQ(digest.size(), 64u);
  EXPECT_EQ(digest, config_digest(reference_room()));
  auto edited = room;
  edited.writers[0].binding.temperature = 0.7;
  EXPECT_NE(config_digest(edited), digest);
}
