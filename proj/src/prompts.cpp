#include "writersroom/prompts.hpp"

#include "writersroom/errors.hpp"
#include "writersroom/templating.hpp"

namespace writersroom {

namespace {

// Phase templates end with a newline in the asset files.
std::string phase_text(std::string_view name, const TemplateValues& values) {
  return trim(render_template(template_asset(name), values));
}

}  // namespace

std::string_view to_string(ChatRole role) {
  switch (role) {
    case ChatRole::system: return "system";
    case ChatRole::user: return "user";
    case ChatRole::assistant: return "assistant";
  }
  return "unknown";
}

std::optional<ChatRole> parse_chat_role(std::string_view text) {
  if (text == "system") return ChatRole::system;
  if (text == "user") return ChatRole::user;
  if (text == "assistant") return ChatRole::assistant;
  return std::nullopt;
}

std::string_view to_string(PromptPhase phase) {
  switch (phase) {
    case PromptPhase::ideation: return "ideation";
    case PromptPhase::consensus: return "consensus";
    case PromptPhase::decision: return "decision";
    case PromptPhase::summary: return "summary";
    case PromptPhase::writing: return "writing";
  }
  return "unknown";
}

std::vector<ChatMessage> PromptBundle::messages() const {
  std::vector<ChatMessage> all;
  all.reserve(context_messages.size() + 1);
  all.push_back({ChatRole::system, system_text});
  all.insert(all.end(), context_messages.begin(), context_messages.end());
  return all;
}

std::string serial_list(std::span<const std::string> items) {
  switch (items.size()) {
    case 0: return {};
    case 1: return items[0];
    case 2: return items[0] + " and " + items[1];
    default: break;
  }
  std::string out;
  for (std::size_t i = 0; i + 1 < items.size(); ++i) out += items[i] + ", ";
  return out + "and " + items.back();
}

std::string render_base(const WriterProfile& writer, const RoomConfig& room) {
  if (room.find_writer(writer.name) == nullptr) {
    throw ConfigError("writer \"" + writer.name + "\" is not part of the room");
  }
  std::vector<std::string> others;
  for (const auto& other : room.writers) {
    if (other.name != writer.name) others.push_back(other.name);
  }
  return render_template(template_asset("base"),
                         {{"agent_name", writer.name},
                          {"other_agents", serial_list(others)},
                          {"topic_brief", room.topic_brief},
                          {"position_statement", writer.position_statement}});
}

std::string format_shapes(std::span<const StoryShape> shapes) {
  std::string out;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    if (i) out += "\n";
    out += std::to_string(i + 1) + ". " + shapes[i].title + ": " + shapes[i].description;
  }
  return out;
}

std::string format_proposals(std::span<const NarrativeProposal> proposals) {
  std::string out;
  for (const auto& proposal : proposals) {
    if (!out.empty()) out += "\n\n";
    out += "[" + proposal.author + "]\n" + trim(proposal.raw);
  }
  return out;
}

std::string format_transcript(std::span<const DeliberationTurn> transcript) {
  if (transcript.empty()) return "(No one has spoken yet.)";
  std::string out;
  for (const auto& turn : transcript) {
    if (!out.empty()) out += "\n\n";
    out += "Round " + std::to_string(turn.round) + ", " + turn.writer + ": " + trim(turn.text);
  }
  return out;
}

std::string format_story(std::span<const Contribution> story) {
  if (story.empty()) return "(The story has not started yet. Write its first sentence.)";
  std::string out;
  for (const auto& contribution : story) {
    if (!out.empty()) out += " ";
    out += contribution.sentence;
  }
  return out;
}

PromptBundle render_phase(PromptPhase phase, const WriterProfile& writer, const RoomConfig& room,
                          const PhaseContext& context) {
  PromptBundle bundle;
  bundle.phase = phase;
  bundle.system_text = render_base(writer, room);
  if (writer.persona_note && !trim(*writer.persona_note).empty()) {
    bundle.system_text += "\n" + trim(*writer.persona_note) + "\n";
  }

  std::string instruction;
  switch (phase) {
    case PromptPhase::ideation: {
      const auto shapes = room.prompt_shapes();
      instruction = phase_text("ideation", {{"shape_catalog", format_shapes(shapes)}});
      break;
    }
    case PromptPhase::consensus:
      instruction = phase_text("consensus", {{"proposals", format_proposals(context.proposals)},
                                             {"transcript", format_transcript(context.transcript)},
                                             {"agent_name", writer.name},
                                             {"round", std::to_string(context.round)}});
      break;
    case PromptPhase::decision:
      instruction =
          phase_text("decisions", {{"transcript", format_transcript(context.transcript)}});
      break;
    case PromptPhase::summary:
      instruction = phase_text("summary", {{"transcript", format_transcript(context.transcript)},
                                           {"decisions", trim(context.decisions)}});
      break;
    case PromptPhase::writing:
      instruction = phase_text("writing", {{"decisions", trim(context.decisions)},
                                           {"own_summary", trim(context.own_summary)},
                                           {"story_so_far", format_story(context.story)}});
      break;
    default:
      throw Error("no prompt for phase " + std::to_string(static_cast<int>(phase)));
  }
  bundle.context_messages.push_back({ChatRole::user, std::move(instruction)});
  return bundle;
}

PromptBundle render_repair(const PromptBundle& writing, std::string_view rejected,
                           std::span<const std::string> problems) {
  PromptBundle bundle = writing;
  if (!trim(rejected).empty()) {
    bundle.context_messages.push_back({ChatRole::assistant, trim(rejected)});
  }
  std::string listed;
  for (const auto& problem : problems) {
    if (!listed.empty()) listed += "\n";
    listed += "- " + problem;
  }
  bundle.context_messages.push_back({ChatRole::user, phase_text("repair", {{"violations", listed}})});
  return bundle;
}

}  // namespace writersroom
