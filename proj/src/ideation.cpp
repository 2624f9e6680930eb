#include "writersroom/ideation.hpp"

#include <algorithm>
#include <cctype>
#include <exception>
#include <future>
#include <optional>
#include <regex>

#include "phase_support.hpp"
#include "writersroom/errors.hpp"
#include "writersroom/prompts.hpp"

namespace writersroom {

namespace {

// Optional bullet, optional heading marks, optional bold, a label of up to
// four words, then a colon.
const std::regex& label_pattern() {
  static const std::regex pattern(
      R"(^\s*([-*>]\s+)?(?:#+\s*)?(?:\*\*|__)?([A-Za-z][A-Za-z'&/-]*(?: [A-Za-z'&/-]+){0,3})(?:\*\*|__)?\s*:(?:\*\*|__)?\s*(.*)$)");
  return pattern;
}

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string* canonical_field(NarrativeProposal& proposal, std::string_view label) {
  const auto key = lower(label);
  if (key == "genre") return &proposal.genre;
  if (key == "setting") return &proposal.setting;
  if (key == "characters" || key == "character") return &proposal.characters;
  if (key == "shape") return &proposal.shape;
  if (key == "plot") return &proposal.plot;
  if (key == "conflict") return &proposal.conflict;
  return nullptr;
}

void append_section(std::string& field, const std::string& body) {
  if (body.empty()) return;
  if (!field.empty()) field += "\n";
  field += body;
}

}  // namespace

NarrativeProposal parse_proposal(std::string_view author, std::string_view text) {
  NarrativeProposal proposal;
  proposal.author = std::string(author);
  proposal.raw = std::string(text);

  std::optional<std::string> label;
  std::vector<std::string> lines;
  auto close_section = [&] {
    if (!label) return;
    std::string body;
    for (const auto& line : lines) {
      if (!body.empty()) body += "\n";
      body += line;
    }
    body = trim(body);
    if (auto* field = canonical_field(proposal, *label)) {
      append_section(*field, body);
    } else {
      proposal.extras.emplace_back(*label, body);
    }
    lines.clear();
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::smatch match;
    // Bulleted lines only open canonical sections, so "- Alex: a developer"
    // stays inside Characters.
    NarrativeProposal probe;
    if (std::regex_match(line, match, label_pattern()) &&
        (!match[1].matched || canonical_field(probe, match[2].str()) != nullptr)) {
      close_section();
      label = trim(match[2].str());
      lines.push_back(match[3].str());
    } else if (label) {
      lines.push_back(line);
    }
    pos = end + 1;
  }
  close_section();
  return proposal;
}

std::string compose_proposal(const NarrativeProposal& proposal) {
  std::string out;
  auto add = [&](std::string_view label, const std::string& body) {
    if (!out.empty()) out += "\n";
    out += std::string(label) + ": " + body;
  };
  add("Genre", proposal.genre);
  add("Setting", proposal.setting);
  add("Characters", proposal.characters);
  add("Shape", proposal.shape);
  add("Plot", proposal.plot);
  add("Conflict", proposal.conflict);
  for (const auto& [label, body] : proposal.extras) add(label, body);
  return out;
}

std::map<std::string, NarrativeProposal> run_ideation(const RoomConfig& room,
                                                      ChatProvider& provider, Journal& journal,
                                                      const RunControl& control) {
  control.checkpoint();
  constexpr const char* kPhase = "ideation";
  std::map<std::string, NarrativeProposal> proposals;

  // Stored proposals form a prefix of the canonical order.
  std::size_t first_missing = 0;
  for (; first_missing < room.writers.size(); ++first_missing) {
    const auto& writer = room.writers[first_missing];
    auto stored = journal.recall(kPhase, 1, writer.name, RecordKind::proposal);
    if (!stored) break;
    proposals.emplace(writer.name, parse_proposal(writer.name, stored->text));
  }

  std::vector<std::future<std::string>> pending;
  for (std::size_t i = first_missing; i < room.writers.size(); ++i) {
    const auto& writer = room.writers[i];
    auto bundle = render_phase(PromptPhase::ideation, writer, room, {});
    auto request = detail::make_request(writer, bundle, {kPhase, 1, writer.name});
    pending.push_back(std::async(std::launch::async, [&provider, request = std::move(request)] {
      return provider.complete(request).text;
    }));
  }

  // Record answers in canonical order up to the first failure.
  std::exception_ptr failure;
  for (std::size_t k = 0; k < pending.size(); ++k) {
    const auto& writer = room.writers[first_missing + k];
    try {
      auto text = pending[k].get();
      if (!failure) {
        journal.record({kPhase, 1, writer.name, RecordKind::proposal, 0, std::nullopt, text, {}});
        proposals.emplace(writer.name, parse_proposal(writer.name, text));
        control.report("ideation: " + writer.name + " proposed");
      }
    } catch (...) {
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return proposals;
}

std::vector<NarrativeProposal> ordered_proposals(
    const RoomConfig& room, const std::map<std::string, NarrativeProposal>& proposals) {
  std::vector<NarrativeProposal> ordered;
  for (const auto& writer : room.writers) {
    if (auto it = proposals.find(writer.name); it != proposals.end()) ordered.push_back(it->second);
  }
  return ordered;
}

}  // namespace writersroom
