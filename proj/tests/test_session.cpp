#include <fstream>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "writersroom/config_io.hpp"
#include "writersroom/errors.hpp"
#include "writersroom/room.hpp"
#include "writersroom/session.hpp"

using namespace writersroom;

namespace {

TurnRecord sample_record(int round, const std::string& writer) {
  return {"consensus", round, writer, RecordKind::turn, 0, true, "Agreed. YIELD", {}};
}

struct Abort : std::runtime_error {
  Abort() : std::runtime_error("injected abort") {}
};

}  // namespace

TEST(Journal, EncodeDecodeRoundTrip) {
  TurnRecord record{"writing", 3, "KV", RecordKind::contribution_accepted, 0, std::nullopt,
                    "Line with \"quotes\"\nand a newline.", {"truncated"}};
  const auto line = encode_record(record);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  EXPECT_EQ(decode_record(line), record);
  EXPECT_THROW(decode_record("{\"phase\":"), StorageError);
  EXPECT_THROW(decode_record("{\"phase\":\"x\"}"), StorageError);
}

TEST(Journal, RecallDetectsDivergence) {
  Journal journal({sample_record(1, "JW")});
  EXPECT_THROW(journal.recall("consensus", 1, "MM", RecordKind::turn), ReplayDivergence);
}

TEST(Journal, RecordOrVerify) {
  const auto record = sample_record(1, "JW");
  Journal journal({record});
  EXPECT_NO_THROW(journal.record_or_verify(record));
  EXPECT_FALSE(journal.replaying());
  auto other = sample_record(2, "JW");
  journal.record_or_verify(other);
  EXPECT_EQ(journal.records().size(), 2u);

  auto changed = record;
  changed.text = "Different.";
  Journal strict({record});
  EXPECT_THROW(strict.record_or_verify(changed), ReplayDivergence);
}

TEST(Session, OpenCreatesPendingManifest) {
  wr_test::TempDir dir;
  const auto session = Session::open(dir.path(), reference_room(), "s1");
  const auto& m = session.manifest();
  EXPECT_EQ(m.session_id, "s1");
  EXPECT_EQ(m.config_digest, config_digest(reference_room()));
  EXPECT_EQ(m.digest_algorithm, "sha256");
  for (auto phase : {Phase::ideation, Phase::consensus, Phase::writing}) {
    EXPECT_EQ(m.status(phase), PhaseStatus::pending);
  }
  EXPECT_TRUE(std::filesystem::exists(dir.path() / "s1" / "manifest.json"));
  EXPECT_EQ(session.stored_config(), reference_room());
}

TEST(Session, GeneratedIdsAreSlugs) {
  const auto id = make_session_id();
  EXPECT_EQ(id.rfind("room-", 0), 0u);
  EXPECT_EQ(id.size(), std::string("room-20260101-000000-abcdef").size());
}

TEST(Session, InvalidConfigRejected) {
  wr_test::TempDir dir;
  try {
    Session::open(dir.path(), wr_test::scripted_room({"JW"}), "s1");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    ASSERT_FALSE(e.details().empty());
    EXPECT_EQ(e.details()[0].rfind("writers:", 0), 0u);
  }
  EXPECT_FALSE(std::filesystem::exists(dir.path() / "s1"));
}

TEST(Session, ReopeningSameIdCollides) {
  wr_test::TempDir dir;
  Session::open(dir.path(), reference_room(), "s1");
  EXPECT_THROW(Session::open(dir.path(), reference_room(), "s1"), SessionCollision);
  EXPECT_THROW(Session::open(dir.path(), reference_room(), "../escape"), ConfigError);
}

TEST(Session, AppendAndReadBack) {
  wr_test::TempDir dir;
  auto session = Session::open(dir.path(), reference_room(), "s1");
  EXPECT_THROW(session.append_turn(sample_record(1, "JW")), SessionStateError);
  session.set_phase(Phase::ideation, PhaseStatus::running);
  session.append_turn(sample_record(1, "JW"));
  session.append_turn(sample_record(1, "MM"));
  const auto records = session.read_transcript();
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0], sample_record(1, "JW"));
  EXPECT_EQ(records[1].writer, "MM");
}

TEST(Session, PhaseOrderEnforced) {
  wr_test::TempDir dir;
  auto session = Session::open(dir.path(), reference_room(), "s1");
  EXPECT_THROW(session.set_phase(Phase::writing, PhaseStatus::running), SessionStateError);
  session.set_phase(Phase::ideation, PhaseStatus::running);
  session.set_phase(Phase::ideation, PhaseStatus::done);
  EXPECT_THROW(session.set_phase(Phase::ideation, PhaseStatus::running), SessionStateError);
  session.set_phase(Phase::consensus, PhaseStatus::running);
  session.set_phase(Phase::consensus, PhaseStatus::done);
  session.set_phase(Phase::writing, PhaseStatus::running);
  session.set_phase(Phase::writing, PhaseStatus::done);
  EXPECT_TRUE(session.manifest().complete());
  try {
    session.append_turn(sample_record(1, "JW"));
    FAIL() << "expected SessionStateError";
  } catch (const SessionStateError& e) {
    EXPECT_NE(std::string(e.what()).find("complete"), std::string::npos);
  }
}

TEST(Session, TornTailIsCutOnLoad) {
  wr_test::TempDir dir;
  {
    auto session = Session::open(dir.path(), reference_room(), "s1");
    session.set_phase(Phase::ideation, PhaseStatus::running);
    session.append_turn(sample_record(1, "JW"));
  }
  {
    std::ofstream out(dir.path() / "s1" / "transcript.jsonl", std::ios::app);
    out << "{\"phase\":\"consensus\",\"rou";
  }
  auto session = Session::load(dir.path(), "s1");
  EXPECT_EQ(session.read_transcript().size(), 1u);
  session.append_turn(sample_record(1, "MM"));
  EXPECT_EQ(session.read_transcript().size(), 2u);
}

TEST(RunSession, AbortAfterConsensusRoundOneThenResume) {
  auto room = wr_test::scripted_room({"JW", "MM", "KV", "AI"}, 8);
  auto script = wr_test::full_script(room);
  script.entries["consensus/1/MM"] = "Not yet.";
  script.entries["consensus/2/MM"] = "Now yes. YIELD";

  wr_test::TempDir dir;
  {
    ScriptedProvider provider(script);
    auto session = Session::open(dir.path() / "a", room, "s");
    run_session(session, provider);
  }

  SessionHooks hooks;
  hooks.before_append = [](const TurnRecord& r) {
    if (r.phase == "consensus" && r.round == 2) throw Abort();
  };
  {
    ScriptedProvider provider(script);
    auto session = Session::open(dir.path() / "b", room, "s");
    EXPECT_THROW(run_session(session, provider, hooks), Abort);
    EXPECT_EQ(session.manifest().status(Phase::consensus), PhaseStatus::aborted);
  }
  ScriptedProvider provider(script);
  const auto result = resume(dir.path() / "b", "s", provider);
  EXPECT_EQ(result.status, RunStatus::completed);
  for (const char* file : {"transcript.jsonl", "story.txt", "attribution.jsonl"}) {
    EXPECT_EQ(wr_test::read_file(dir.path() / "a" / "s" / file),
              wr_test::read_file(dir.path() / "b" / "s" / file))
        << file;
  }
}

TEST(RunSession, ResumeOfDoneSessionIsNoOp) {
  const auto room = wr_test::scripted_room({"JW", "MM"}, 2);
  wr_test::TempDir dir;
  ScriptedProvider provider(wr_test::full_script(room));
  {
    auto session = Session::open(dir.path(), room, "s");
    run_session(session, provider);
  }
  const auto before = wr_test::read_file(dir.path() / "s" / "transcript.jsonl");
  ScriptedProvider silent(Script{});
  EXPECT_EQ(resume(dir.path(), "s", silent).status, RunStatus::already_complete);
  EXPECT_EQ(wr_test::read_file(dir.path() / "s" / "transcript.jsonl"), before);
}

TEST(RunSession, ResumeWithEditedConfigIsRejected) {
  const auto room = wr_test::scripted_room({"JW", "MM"}, 2);
  wr_test::TempDir dir;
  ScriptedProvider provider(wr_test::full_script(room));
  { Session::open(dir.path(), room, "s"); }
  auto edited = room;
  edited.writing_sentence_budget = 4;
  EXPECT_THROW(resume(dir.path(), "s", provider, &edited), DigestMismatch);
}

TEST(RunSession, ProviderFailureLeavesResumableSession) {
  const auto room = wr_test::scripted_room({"JW", "MM"}, 4);
  auto script = wr_test::full_script(room);
  const auto missing = script.entries.at("writing/3/JW");
  script.entries.erase("writing/3/JW");
  wr_test::TempDir dir;
  {
    ScriptedProvider provider(script);
    auto session = Session::open(dir.path(), room, "s");
    EXPECT_THROW(run_session(session, provider), ScriptMiss);
    EXPECT_EQ(session.manifest().status(Phase::writing), PhaseStatus::aborted);
    EXPECT_FALSE(std::filesystem::exists(dir.path() / "s" / "story.txt"));
  }
  script.entries["writing/3/JW"] = missing;
  ScriptedProvider provider(script);
  const auto result = resume(dir.path(), "s", provider);
  EXPECT_EQ(result.room.draft.contributions.size(), 4u);
  EXPECT_TRUE(Session::load(dir.path(), "s").manifest().complete());
}

TEST(RunSession, ChangedScriptDivergesOnReplay) {
  const auto room = wr_test::scripted_room({"JW", "MM"}, 4);
  auto script = wr_test::full_script(room);
  script.entries.erase("writing/3/JW");
  wr_test::TempDir dir;
  {
    ScriptedProvider provider(script);
    auto session = Session::open(dir.path(), room, "s");
    EXPECT_THROW(run_session(session, provider), ScriptMiss);
  }
  // Replay never calls the provider for stored records, so a changed answer
  // for an already-recorded turn cannot alter the transcript.
  script.entries["writing/1/JW"] = "A different opening entirely.";
  script.entries["writing/3/JW"] = "Line three at last.";
  ScriptedProvider provider(script);
  const auto result = resume(dir.path(), "s", provider);
  EXPECT_EQ(result.room.draft.contributions[0].sentence, wr_test::clean_sentence(0));
}
