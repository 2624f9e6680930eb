#include <gtest/gtest.h>

#include "test_support.hpp"
#include "writersroom/errors.hpp"
#include "writersroom/text.hpp"
#include "writersroom/writing.hpp"

using namespace writersroom;

namespace {

ConsensusOutcome outcome_for(const RoomConfig& room) {
  ConsensusOutcome outcome;
  outcome.decisions = "Genre: shared decision text";
  for (const auto& w : room.writers) outcome.summaries[w.name] = "private summary token " + w.name;
  return outcome;
}

StoryDraft write(const RoomConfig& room, const Script& script, Journal& journal) {
  ScriptedProvider provider(script);
  return run_writing(room, outcome_for(room), provider, journal);
}

StoryDraft draft_of(std::vector<std::pair<std::string, std::string>> lines) {
  StoryDraft draft;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    draft.contributions.push_back({i, lines[i].first, lines[i].second, {}});
  }
  return draft;
}

const std::string kLongLine =
    "The harbor lights blinked twice across the water before the ferry finally left the pier.";

}  // namespace

TEST(RunWriting, BudgetTwentyRoundRobin) {
  const auto room = wr_test::scripted_room({"JW", "MM", "KV", "AI"}, 20);
  Journal journal;
  const auto draft = write(room, wr_test::full_script(room), journal);
  ASSERT_EQ(draft.contributions.size(), 20u);
  for (std::size_t i = 0; i < 20; ++i) {
    EXPECT_EQ(draft.contributions[i].index, i);
    EXPECT_EQ(draft.contributions[i].writer, room.writers[i % 4].name);
    EXPECT_TRUE(draft.contributions[i].flags.empty());
  }
  EXPECT_EQ(text::split_sentences(export_story(draft)).size(), 20u);
}

TEST(RunWriting, CleanBudgetFourKeepsOrder) {
  const auto room = wr_test::scripted_room({"JW", "MM", "KV", "AI"}, 4);
  Journal journal;
  const auto draft = write(room, wr_test::full_script(room), journal);
  std::string expected;
  for (std::size_t i = 0; i < 4; ++i) {
    expected += (i ? " " : "") + wr_test::clean_sentence(i);
  }
  EXPECT_EQ(export_story(draft), expected);
}

TEST(RunWriting, MultiSentenceResponseIsTruncated) {
  const auto room = wr_test::scripted_room({"JW", "MM", "KV", "AI"}, 4);
  auto script = wr_test::full_script(room);
  script.entries["writing/4/AI"] = "The screen went dark. Nobody moved.";
  Journal journal;
  const auto draft = write(room, script, journal);
  EXPECT_EQ(draft.contributions[3].sentence, "The screen went dark.");
  EXPECT_TRUE(draft.contributions[3].flags.count(ContributionFlag::truncated));
}

TEST(ValidateContribution, DuplicationAtNgramEight) {
  auto room = wr_test::scripted_room();
  room.duplication_ngram = 8;
  const auto draft = draft_of({{"JW", "One."}, {"MM", "Two."}, {"KV", kLongLine}});
  const auto check = validate_contribution(
      "Again, the harbor lights blinked twice across the water before the ferry finally left.",
      draft, room, "AI");
  EXPECT_TRUE(check.has(ViolationKind::duplication));
  EXPECT_EQ(check.blocking_count(), 1u);
}

TEST(ValidateContribution, QuotedDialogueIsOneSentence) {
  const auto room = wr_test::scripted_room();
  const auto check = validate_contribution("\"Let's see where this takes us,\" Alex whispered.",
                                           {}, room, "JW");
  EXPECT_FALSE(check.has(ViolationKind::multi_sentence));
  EXPECT_EQ(check.sentence, "\"Let's see where this takes us,\" Alex whispered.");
}

TEST(ValidateContribution, SelfMention) {
  const auto room = wr_test::scripted_room();
  EXPECT_TRUE(validate_contribution("MM pondered the code.", {}, room, "MM")
                  .has(ViolationKind::self_mention));
  EXPECT_FALSE(validate_contribution("MM pondered the code.", {}, room, "JW")
                   .has(ViolationKind::self_mention));
}

TEST(ValidateContribution, MonotonyIsInformational) {
  const auto room = wr_test::scripted_room();
  const auto draft = draft_of({{"JW", "She walked to the old door slowly."}});
  const auto check =
      validate_contribution("She walked to the new desk quickly.", draft, room, "JW");
  EXPECT_TRUE(check.has(ViolationKind::monotony));
  EXPECT_EQ(check.blocking_count(), 0u);
}

TEST(ValidateContribution, NormalizesSentence) {
  const auto room = wr_test::scripted_room();
  EXPECT_EQ(validate_contribution("and then it rained", {}, room, "JW").sentence,
            "And then it rained.");
  EXPECT_THROW(validate_contribution("  ...  ", {}, room, "JW"), EmptyContribution);
}

TEST(Repair, CleanRetryAccepted) {
  const auto room = wr_test::scripted_room({"JW", "MM", "KV", "AI"}, 4);
  auto script = wr_test::full_script(room);
  script.entries["writing/3/KV"] = wr_test::clean_sentence(0);
  script.entries["writing/3/KV/retry1"] = "A fresh line arrives at last.";
  Journal journal;
  auto room8 = room;
  room8.duplication_ngram = 3;
  const auto draft = write(room8, script, journal);
  EXPECT_EQ(draft.contributions[2].sentence, "A fresh line arrives at last.");
  EXPECT_TRUE(draft.contributions[2].flags.empty());
}

TEST(Repair, ExhaustionFlagsAndContinues) {
  auto room = wr_test::scripted_room({"JW", "MM", "KV", "AI"}, 4);
  room.duplication_ngram = 3;
  auto script = wr_test::full_script(room);
  const auto copy = wr_test::clean_sentence(0);
  script.entries["writing/2/MM"] = copy;
  script.entries["writing/2/MM/retry1"] = copy;
  script.entries["writing/2/MM/retry2"] = copy;
  ScriptedProvider scripted(script);
  wr_test::RecordingProvider recorder(scripted);
  Journal journal;
  const auto draft = run_writing(room, outcome_for(room), recorder, journal);
  ASSERT_EQ(draft.contributions.size(), 4u);
  EXPECT_EQ(draft.contributions[1].sentence, copy);
  EXPECT_TRUE(draft.contributions[1].flags.count(ContributionFlag::duplication_retry_exhausted));
  int mm_calls = 0;
  for (const auto& r : recorder.requests()) mm_calls += r.tag.writer == "MM";
  EXPECT_EQ(mm_calls, 1 + room.repair_attempts);
}

TEST(Repair, SelfMentionExhaustionFlag) {
  auto room = wr_test::scripted_room({"JW", "MM"}, 2);
  auto script = wr_test::full_script(room);
  script.entries["writing/1/JW"] = "JW typed quietly.";
  script.entries["writing/1/JW/retry1"] = "JW typed again.";
  script.entries["writing/1/JW/retry2"] = "JW gave up.";
  Journal journal;
  const auto draft = write(room, script, journal);
  EXPECT_EQ(draft.contributions[0].sentence, "JW typed quietly.");
  EXPECT_TRUE(draft.contributions[0].flags.count(ContributionFlag::self_mention));
}

TEST(Repair, EmptyThenClean) {
  auto room = wr_test::scripted_room({"JW", "MM"}, 2);
  auto script = wr_test::full_script(room);
  script.entries["writing/1/JW"] = "   ";
  script.entries["writing/1/JW/retry1"] = "The first real line.";
  Journal journal;
  const auto draft = write(room, script, journal);
  EXPECT_EQ(draft.contributions[0].sentence, "The first real line.");
  EXPECT_TRUE(draft.contributions[0].flags.empty());
}

TEST(Repair, AllEmptyThrows) {
  auto room = wr_test::scripted_room({"JW", "MM"}, 2);
  auto script = wr_test::full_script(room);
  script.entries["writing/1/JW"] = "";
  script.entries["writing/1/JW/retry1"] = "";
  script.entries["writing/1/JW/retry2"] = "...";
  Journal journal;
  EXPECT_THROW(write(room, script, journal), EmptyContribution);
}

TEST(Repair, PromptNamesTheProblem) {
  auto room = wr_test::scripted_room({"JW", "MM"}, 2);
  auto script = wr_test::full_script(room);
  script.entries["writing/2/MM"] = "MM looked up.";
  script.entries["writing/2/MM/retry1"] = "Someone looked up.";
  ScriptedProvider scripted(script);
  wr_test::RecordingProvider recorder(scripted);
  Journal journal;
  run_writing(room, outcome_for(room), recorder, journal);
  const auto requests = recorder.requests();
  const auto& retry = requests.back();
  EXPECT_EQ(retry.tag.key(), "writing/2/MM/retry1");
  EXPECT_NE(wr_test::joined_text(retry).find("Do not include yourself"), std::string::npos);
  EXPECT_EQ(retry.messages[retry.messages.size() - 2].text, "MM looked up.");
}

TEST(RunWriting, EndMarkerStopsWhenAllAgree) {
  auto room = wr_test::scripted_room({"JW", "MM"}, 10);
  room.writing_end_marker = true;
  auto script = wr_test::full_script(room);
  script.entries["writing/3/JW"] = "It was nearly over. END";
  script.entries["writing/4/MM"] = "Then it was. END";
  Journal journal;
  const auto draft = write(room, script, journal);
  ASSERT_EQ(draft.contributions.size(), 4u);
  EXPECT_EQ(draft.contributions[3].sentence, "Then it was.");
  EXPECT_TRUE(draft.contributions[3].flags.count(ContributionFlag::end_requested));
}

TEST(RunWriting, WritingPromptIsolation) {
  const auto room = wr_test::scripted_room({"JW", "MM", "KV", "AI"}, 8);
  ScriptedProvider scripted(wr_test::full_script(room));
  wr_test::RecordingProvider recorder(scripted);
  Journal journal;
  run_writing(room, outcome_for(room), recorder, journal);
  for (const auto& request : recorder.requests()) {
    const auto text = wr_test::joined_text(request);
    for (const auto& w : room.writers) {
      const bool present = text.find("private summary token " + w.name) != std::string::npos;
      EXPECT_EQ(present, w.name == request.tag.writer) << request.tag.key();
    }
  }
}

TEST(Export, JoinsWithSingleSpaces) {
  const auto draft = draft_of({{"JW", "A."}, {"MM", "B."}, {"KV", "C."}, {"AI", "D."}});
  EXPECT_EQ(export_story(draft), "A. B. C. D.");
  EXPECT_EQ(export_story({}), "");
  EXPECT_TRUE(attribution_report({}).empty());
}

TEST(Export, AttributionLines) {
  const auto draft = draft_of({{"JW", "A \"quoted\" line."}, {"MM", "B."}});
  EXPECT_EQ(encode_attribution(attribution_report(draft)),
            "{\"index\":0,\"writer\":\"JW\",\"sentence\":\"A \\\"quoted\\\" line.\"}\n"
            "{\"index\":1,\"writer\":\"MM\",\"sentence\":\"B.\"}\n");
}
