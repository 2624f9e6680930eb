#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace writersroom {

enum class RecordKind { proposal, turn, summary, decision, contribution_raw, contribution_accepted };

std::string_view to_string(RecordKind kind);
std::optional<RecordKind> parse_record_kind(std::string_view text);

// One line of the session transcript.
struct TurnRecord {
  std::string phase;  // ideation | consensus | writing
  int round = 1;
  std::string writer;
  RecordKind kind = RecordKind::proposal;
  int attempt = 0;
  std::optional<bool> yielded;  // deliberation turns only
  std::string text;
  std::vector<std::string> flags;

  bool operator==(const TurnRecord&) const = default;
};

// Single-line JSON, no trailing newline.
std::string encode_record(const TurnRecord& record);
// Throws StorageError on malformed input.
TurnRecord decode_record(std::string_view line);

// The coordinator's view of the transcript. Records loaded from a previous run
// are handed back in order through recall(); once they run out, new records
// go through record() to the sink (the transcript file, for sessions).
class Journal {
 public:
  using Sink = std::function<void(const TurnRecord&)>;

  Journal() = default;
  explicit Journal(std::vector<TurnRecord> stored, Sink sink = {});

  // The next stored record if one remains. Throws ReplayDivergence when it is
  // not the record the engine expects at this point.
  std::optional<TurnRecord> recall(std::string_view phase, int round, std::string_view writer,
                                   RecordKind kind, int attempt = 0);

  // Appends a new record. The sink runs first; if it throws, nothing is added.
  void record(TurnRecord record);

  // Consumes the next stored record after checking it equals `expected`, or
  // records `expected` when replay is exhausted.
  void record_or_verify(const TurnRecord& expected);

  bool replaying() const { return cursor_ < records_.size(); }
  const std::vector<TurnRecord>& records() const { return records_; }

 private:
  std::vector<TurnRecord> records_;
  std::size_t cursor_ = 0;
  Sink sink_;
};

// Cancellation and progress reporting threaded through the phases.
struct RunControl {
  std::function<bool()> cancelled;
  std::function<void(const std::string&)> progress;

  // Throws Interrupted when cancellation was requested.
  void checkpoint() const;
  void report(const std::string& line) const;
};

}  // namespace writersroom
