#include <set>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "writersroom/core.hpp"

using namespace writersroom;

TEST(ShapeCatalog, HasTenDistinctShapes) {
  const auto shapes = shape_catalog();
  ASSERT_EQ(shapes.size(), 10u);
  std::set<std::string> ids;
  bool man_in_a_hole = false;
  for (const auto& s : shapes) {
    ids.insert(s.shape_id);
    EXPECT_FALSE(s.description.empty());
    man_in_a_hole = man_in_a_hole || s.title == "Man in a Hole";
  }
  EXPECT_EQ(ids.size(), shapes.size());
  EXPECT_TRUE(man_in_a_hole);
}

TEST(ShapeCatalog, RoomOverrideReplacesCatalog) {
  auto room = wr_test::scripted_room();
  EXPECT_EQ(room.prompt_shapes(), shape_catalog());
  room.shapes = {{"loop", "Loop", "Ends where it began."}};
  ASSERT_EQ(room.prompt_shapes().size(), 1u);
  EXPECT_EQ(room.prompt_shapes()[0].title, "Loop");
}

TEST(ValidateRoom, FourWritersBudgetTwentyIsClean) {
  const auto room = wr_test::scripted_room({"JW", "MM", "KV", "AI"}, 20);
  const auto result = validate_room(room);
  EXPECT_TRUE(result.diagnostics.empty());
  EXPECT_TRUE(result.ok());
}

TEST(ValidateRoom, DuplicateNameReportedOnLaterWriter) {
  const auto room = wr_test::scripted_room({"JW", "JW", "KV"});
  const auto result = validate_room(room);
  ASSERT_EQ(result.diagnostics.size(), 1u);
  EXPECT_EQ(result.diagnostics[0].path, "writers[1].name");
}

TEST(ValidateRoom, ShortStatementIsOnlyANote) {
  auto room = wr_test::scripted_room();
  std::string statement;
  for (int i = 0; i < 120; ++i) statement += "word ";
  room.writers[2].position_statement = statement;
  const auto result = validate_room(room);
  EXPECT_TRUE(result.ok());
  ASSERT_EQ(result.notes.size(), 1u);
  EXPECT_NE(result.notes[0].find("120 words"), std::string::npos);
  EXPECT_NE(result.notes[0].find("164-455"), std::string::npos);
}

TEST(ValidateRoom, SingleWriterRejected) {
  const auto result = validate_room(wr_test::scripted_room({"JW"}));
  ASSERT_FALSE(result.ok());
  EXPECT_EQ(result.diagnostics[0].path, "writers");
}

TEST(ValidateRoom, ReportsEachBrokenInvariant) {
  auto room = wr_test::scripted_room({"JW", "M M", ""});
  room.writers[0].binding.temperature = 2.5;
  room.writers[0].binding.max_retries = -1;
  room.writers[1].position_statement = "   ";
  room.writers[2].binding.provider_kind = ProviderKind::http_chat;
  room.topic_brief.clear();
  room.consensus_max_rounds = 0;
  room.writing_sentence_budget = 2;
  room.repair_attempts = -1;
  room.duplication_ngram = 2;
  room.shapes = {{"a", "A", "x"}, {"a", "B", ""}};
  const auto result = validate_room(room);
  std::set<std::string> paths;
  for (const auto& d : result.diagnostics) paths.insert(d.path);
  for (const char* expected :
       {"writers[0].binding.temperature", "writers[0].binding.max_retries", "writers[1].name",
        "writers[1].position_statement", "writers[2].name", "writers[2].binding.endpoint",
        "topic_brief", "consensus_max_rounds", "writing_sentence_budget", "repair_attempts",
        "duplication_ngram", "shapes[1].shape_id", "shapes[1].description"}) {
    EXPECT_TRUE(paths.count(expected)) << expected;
  }
}

TEST(ValidateRoom, ScriptedBindingMustNotCarryEndpoint) {
  auto room = wr_test::scripted_room();
  room.writers[0].binding.endpoint = "http://localhost:1/v1/chat/completions";
  const auto result = validate_room(room);
  ASSERT_EQ(result.diagnostics.size(), 1u);
  EXPECT_EQ(result.diagnostics[0].path, "writers[0].binding.endpoint");
}

TEST(StatementWordCount, SplitsOnWhitespaceAndHyphens) {
  EXPECT_EQ(statement_word_count(""), 0u);
  EXPECT_EQ(statement_word_count("one two  three"), 3u);
  EXPECT_EQ(statement_word_count("well-known co-pilot"), 4u);
  EXPECT_EQ(statement_word_count("a - b"), 2u);
}

TEST(EnumNames, RoundTrip) {
  for (auto kind : {ProviderKind::http_chat, ProviderKind::scripted}) {
    EXPECT_EQ(parse_provider_kind(to_string(kind)), kind);
  }
  for (auto flag : {ContributionFlag::truncated, ContributionFlag::duplication_retry_exhausted,
                    ContributionFlag::self_mention, ContributionFlag::end_requested}) {
    EXPECT_EQ(parse_contribution_flag(to_string(flag)), flag);
  }
  EXPECT_FALSE(parse_provider_kind("carrier-pigeon"));
}
