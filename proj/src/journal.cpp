#include "writersroom/journal.hpp"

#include <nlohmann/json.hpp>

#include "writersroom/errors.hpp"

namespace writersroom {

std::string_view to_string(RecordKind kind) {
  switch (kind) {
    case RecordKind::proposal: return "proposal";
    case RecordKind::turn: return "turn";
    case RecordKind::summary: return "summary";
    case RecordKind::decision: return "decision";
    case RecordKind::contribution_raw: return "contribution-raw";
    case RecordKind::contribution_accepted: return "contribution-accepted";
  }
  return "unknown";
}

std::optional<RecordKind> parse_record_kind(std::string_view text) {
  for (auto kind : {RecordKind::proposal, RecordKind::turn, RecordKind::summary,
                    RecordKind::decision, RecordKind::contribution_raw,
                    RecordKind::contribution_accepted}) {
    if (to_string(kind) == text) return kind;
  }
  return std::nullopt;
}

std::string encode_record(const TurnRecord& record) {
  nlohmann::ordered_json j;
  j["phase"] = record.phase;
  j["round"] = record.round;
  j["writer"] = record.writer;
  j["kind"] = std::string(to_string(record.kind));
  j["attempt"] = record.attempt;
  if (record.yielded) j["yielded"] = *record.yielded;
  j["text"] = record.text;
  j["flags"] = record.flags;
  return j.dump();
}

TurnRecord decode_record(std::string_view line) {
  try {
    const auto j = nlohmann::json::parse(line);
    TurnRecord record;
    record.phase = j.at("phase").get<std::string>();
    record.round = j.at("round").get<int>();
    record.writer = j.at("writer").get<std::string>();
    const auto kind_text = j.at("kind").get<std::string>();
    auto kind = parse_record_kind(kind_text);
    if (!kind) throw StorageError("unknown record kind \"" + kind_text + "\"");
    record.kind = *kind;
    record.attempt = j.value("attempt", 0);
    if (auto it = j.find("yielded"); it != j.end()) record.yielded = it->get<bool>();
    record.text = j.at("text").get<std::string>();
    record.flags = j.value("flags", std::vector<std::string>{});
    return record;
  } catch (const nlohmann::json::exception& e) {
    throw StorageError(std::string("malformed transcript record: ") + e.what());
  }
}

Journal::Journal(std::vector<TurnRecord> stored, Sink sink)
    : records_(std::move(stored)), sink_(std::move(sink)) {}

std::optional<TurnRecord> Journal::recall(std::string_view phase, int round,
                                          std::string_view writer, RecordKind kind, int attempt) {
  if (!replaying()) return std::nullopt;
  const auto& next = records_[cursor_];
  if (next.phase != phase || next.round != round || next.writer != writer || next.kind != kind ||
      next.attempt != attempt) {
    throw ReplayDivergence("transcript record " + std::to_string(cursor_ + 1) + " is " +
                           next.phase + "/" + std::to_string(next.round) + "/" + next.writer + " " +
                           std::string(to_string(next.kind)) + ", expected " + std::string(phase) +
                           "/" + std::to_string(round) + "/" + std::string(writer) + " " +
                           std::string(to_string(kind)));
  }
  ++cursor_;
  return next;
}

void Journal::record(TurnRecord record) {
  if (replaying()) {
    throw ReplayDivergence("cannot append while " + std::to_string(records_.size() - cursor_) +
                           " stored records are unreplayed");
  }
  if (sink_) sink_(record);
  records_.push_back(std::move(record));
  cursor_ = records_.size();
}

void Journal::record_or_verify(const TurnRecord& expected) {
  auto stored = recall(expected.phase, expected.round, expected.writer, expected.kind,
                       expected.attempt);
  if (!stored) {
    record(expected);
  } else if (*stored != expected) {
    throw ReplayDivergence("stored " + std::string(to_string(expected.kind)) + " for " +
                           expected.writer + " in " + expected.phase + " round " +
                           std::to_string(expected.round) + " differs from the replayed state");
  }
}

void RunControl::checkpoint() const {
  if (cancelled && cancelled()) throw Interrupted();
}

void RunControl::report(const std::string& line) const {
  if (progress) progress(line);
}

}  // namespace writersroom
