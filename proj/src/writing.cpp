#include "writersroom/writing.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <map>
#include <optional>

#include <nlohmann/json.hpp>

#include "phase_support.hpp"
#include "writersroom/errors.hpp"
#include "writersroom/text.hpp"

namespace writersroom {

namespace {

constexpr const char* kPhase = "writing";
constexpr std::string_view kEndMarker = "END";

// Capitalizes a leading ASCII letter and terminates an open sentence so the
// exported paragraph splits back into the same sentences.
std::string close_sentence(std::string sentence) {
  if (!sentence.empty() && sentence.front() >= 'a' && sentence.front() <= 'z') {
    sentence.front() = static_cast<char>(std::toupper(static_cast<unsigned char>(sentence.front())));
  }
  if (!text::ends_sentence(sentence)) sentence += ".";
  return sentence;
}

const Contribution* previous_by(const StoryDraft& draft, std::string_view writer) {
  for (auto it = draft.contributions.rbegin(); it != draft.contributions.rend(); ++it) {
    if (it->writer == writer) return &*it;
  }
  return nullptr;
}

// Strips a trailing END word; true when it was there.
bool take_end_marker(std::string& raw) {
  auto trimmed = trim(raw);
  const auto last_space = trimmed.find_last_of(" \t\r\n");
  const auto word_start = last_space == std::string::npos ? 0 : last_space + 1;
  if (std::string_view(trimmed).substr(word_start) != kEndMarker) return false;
  raw = trim(std::string_view(trimmed).substr(0, word_start));
  return true;
}

struct Candidate {
  int attempt = 0;
  std::string raw;
  bool end_requested = false;
  std::optional<ContributionCheck> check;  // empty when raw had no sentence

  std::size_t blocking() const {
    return check ? check->blocking_count() : std::numeric_limits<std::size_t>::max();
  }
};

Candidate evaluate(const WritingTurn& turn, int attempt, std::string raw) {
  Candidate candidate;
  candidate.attempt = attempt;
  if (turn.room.writing_end_marker) candidate.end_requested = take_end_marker(raw);
  candidate.raw = std::move(raw);
  try {
    candidate.check = validate_contribution(candidate.raw, turn.draft, turn.room, turn.writer.name);
  } catch (const EmptyContribution&) {
    candidate.check.reset();
  }
  return candidate;
}

std::vector<std::string> describe(const Candidate& candidate, std::string_view writer) {
  if (!candidate.check) return {"It did not contain a sentence."};
  std::vector<std::string> problems;
  for (const auto& violation : candidate.check->violations) {
    switch (violation.kind) {
      case ViolationKind::duplication:
        problems.push_back("It reproduces material already in the story: \"" + violation.detail +
                           "\".");
        break;
      case ViolationKind::self_mention:
        problems.push_back("It includes you (" + std::string(writer) +
                           ") in the story. Do not include yourself in the story.");
        break;
      default: break;
    }
  }
  return problems;
}

std::string raw_for(const WritingTurn& turn, int attempt, const PromptBundle& bundle,
                    ChatProvider& provider, Journal& journal) {
  const int round = static_cast<int>(turn.index) + 1;
  return detail::recall_or_request(
      journal, provider, turn.writer, bundle, {kPhase, round, turn.writer.name, attempt},
      {kPhase, round, turn.writer.name, RecordKind::contribution_raw, attempt, std::nullopt, {}, {}});
}

Contribution accept(const WritingTurn& turn, const Candidate& chosen, bool exhausted) {
  Contribution contribution;
  contribution.index = turn.index;
  contribution.writer = turn.writer.name;
  contribution.sentence = chosen.check->sentence;
  if (chosen.check->has(ViolationKind::multi_sentence)) {
    contribution.flags.insert(ContributionFlag::truncated);
  }
  if (exhausted && chosen.check->has(ViolationKind::duplication)) {
    contribution.flags.insert(ContributionFlag::duplication_retry_exhausted);
  }
  if (exhausted && chosen.check->has(ViolationKind::self_mention)) {
    contribution.flags.insert(ContributionFlag::self_mention);
  }
  if (chosen.end_requested) contribution.flags.insert(ContributionFlag::end_requested);
  return contribution;
}

Contribution repair_from(const WritingTurn& turn, Candidate first, ChatProvider& provider,
                         Journal& journal) {
  std::vector<Candidate> candidates;
  candidates.push_back(std::move(first));
  for (int attempt = 1; attempt <= turn.room.repair_attempts; ++attempt) {
    const auto& rejected = candidates.back();
    const auto problems = describe(rejected, turn.writer.name);
    const auto bundle = render_repair(turn.bundle, rejected.raw, problems);
    candidates.push_back(evaluate(turn, attempt, raw_for(turn, attempt, bundle, provider, journal)));
    if (candidates.back().blocking() == 0) return accept(turn, candidates.back(), false);
  }
  // min_element keeps the earliest of equal candidates.
  const auto best = std::min_element(
      candidates.begin(), candidates.end(),
      [](const Candidate& a, const Candidate& b) { return a.blocking() < b.blocking(); });
  if (!best->check) {
    throw EmptyContribution(turn.writer.name + " produced no sentence for turn " +
                            std::to_string(turn.index + 1) + " after " +
                            std::to_string(candidates.size()) + " attempts");
  }
  return accept(turn, *best, true);
}

Contribution write_turn(const WritingTurn& turn, ChatProvider& provider, Journal& journal) {
  auto first = evaluate(turn, 0, raw_for(turn, 0, turn.bundle, provider, journal));
  if (first.blocking() == 0) return accept(turn, first, false);
  return repair_from(turn, std::move(first), provider, journal);
}

TurnRecord accepted_record(const Contribution& contribution) {
  TurnRecord record{kPhase,       static_cast<int>(contribution.index) + 1,
                    contribution.writer, RecordKind::contribution_accepted,
                    0,            std::nullopt,
                    contribution.sentence, {}};
  for (auto flag : contribution.flags) record.flags.emplace_back(to_string(flag));
  return record;
}

}  // namespace

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::multi_sentence: return "multi_sentence";
    case ViolationKind::duplication: return "duplication";
    case ViolationKind::self_mention: return "self_mention";
    case ViolationKind::monotony: return "monotony";
    case ViolationKind::empty: return "empty";
  }
  return "unknown";
}

bool Violation::blocking() const {
  return kind == ViolationKind::duplication || kind == ViolationKind::self_mention ||
         kind == ViolationKind::empty;
}

bool ContributionCheck::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

std::size_t ContributionCheck::blocking_count() const {
  return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                [](const Violation& v) { return v.blocking(); }));
}

ContributionCheck validate_contribution(std::string_view raw, const StoryDraft& draft,
                                        const RoomConfig& room, std::string_view writer) {
  const auto sentences = text::split_sentences(raw);
  if (sentences.empty()) throw EmptyContribution("response contains no sentence");

  ContributionCheck check;
  check.sentence = close_sentence(sentences.front());
  if (sentences.size() > 1) {
    check.violations.push_back(
        {ViolationKind::multi_sentence, std::to_string(sentences.size()) + " sentences"});
  }
  if (auto span = text::find_repeated_span(check.sentence, export_story(draft),
                                           static_cast<std::size_t>(room.duplication_ngram))) {
    check.violations.push_back({ViolationKind::duplication, *span});
  }
  if (text::mentions_name(check.sentence, writer)) {
    check.violations.push_back({ViolationKind::self_mention, std::string(writer)});
  }
  if (const auto* previous = previous_by(draft, writer)) {
    const auto before = static_cast<double>(text::word_count(previous->sentence));
    const auto now = static_cast<double>(text::word_count(check.sentence));
    const auto opening = text::opening_word(check.sentence);
    if (std::abs(now - before) <= 0.1 * before && !opening.empty() &&
        opening == text::opening_word(previous->sentence)) {
      check.violations.push_back({ViolationKind::monotony, opening});
    }
  }
  return check;
}

Contribution repair(const WritingTurn& turn, std::string_view first, ChatProvider& provider,
                    Journal& journal) {
  return repair_from(turn, evaluate(turn, 0, std::string(first)), provider, journal);
}

StoryDraft run_writing(const RoomConfig& room, const ConsensusOutcome& outcome,
                       ChatProvider& provider, Journal& journal, const RunControl& control) {
  StoryDraft draft;
  draft.writer_order = room.writer_names();
  std::map<std::string, bool> wants_end;
  const auto n = room.writers.size();

  for (std::size_t index = 0; index < static_cast<std::size_t>(room.writing_sentence_budget);
       ++index) {
    control.checkpoint();
    const auto& writer = room.writers[index % n];
    PhaseContext context;
    context.decisions = outcome.decisions;
    if (auto it = outcome.summaries.find(writer.name); it != outcome.summaries.end()) {
      context.own_summary = it->second;
    }
    context.story = draft.contributions;
    WritingTurn turn{room, writer, index, draft,
                     render_phase(PromptPhase::writing, writer, room, context)};

    auto contribution = write_turn(turn, provider, journal);
    journal.record_or_verify(accepted_record(contribution));
    control.report("writing: sentence " + std::to_string(index + 1) + " by " + writer.name);

    wants_end[writer.name] = contribution.flags.count(ContributionFlag::end_requested) > 0;
    draft.contributions.push_back(std::move(contribution));

    if (room.writing_end_marker && wants_end.size() == n &&
        std::all_of(wants_end.begin(), wants_end.end(), [](const auto& e) { return e.second; })) {
      break;
    }
  }
  return draft;
}

std::string export_story(const StoryDraft& draft) {
  std::string story;
  for (const auto& contribution : draft.contributions) {
    if (!story.empty()) story += " ";
    story += contribution.sentence;
  }
  return story;
}

std::vector<AttributionRow> attribution_report(const StoryDraft& draft) {
  std::vector<AttributionRow> rows;
  rows.reserve(draft.contributions.size());
  for (const auto& contribution : draft.contributions) {
    rows.push_back({contribution.index, contribution.writer, contribution.sentence});
  }
  return rows;
}

std::string encode_attribution(const std::vector<AttributionRow>& rows) {
  std::string out;
  for (const auto& row : rows) {
    nlohmann::ordered_json j;
    j["index"] = row.index;
    j["writer"] = row.writer;
    j["sentence"] = row.sentence;
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace writersroom
