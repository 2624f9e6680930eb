#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace writersroom {

enum class ChatRole { system, user, assistant };

std::string_view to_string(ChatRole role);
std::optional<ChatRole> parse_chat_role(std::string_view text);

struct ChatMessage {
  ChatRole role = ChatRole::user;
  std::string text;

  bool operator==(const ChatMessage&) const = default;
};

}  // namespace writersroom
