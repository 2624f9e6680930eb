#pragma once

#include <string>
#include <vector>

#include "writersroom/chat.hpp"
#include "writersroom/core.hpp"

namespace writersroom {

// Identifies one provider call. Scripted responses are looked up by key().
struct RequestTag {
  std::string phase;
  int round = 1;
  std::string writer;
  int attempt = 0;  // repair attempts in the writing phase

  // "phase/round/writer", with "/retryN" appended for repair attempts.
  std::string key() const;

  bool operator==(const RequestTag&) const = default;
};

struct ChatTurnRequest {
  ProviderBinding binding;
  std::vector<ChatMessage> messages;  // nonempty, first is the system message
  RequestTag tag;
};

struct ChatReply {
  std::string text;
  int attempts = 1;
};

// Implementations must accept concurrent calls.
class ChatProvider {
 public:
  virtual ~ChatProvider() = default;
  virtual ChatReply complete(const ChatTurnRequest& request) = 0;
};

// Throws Error when the request breaks the message invariants.
void check_request(const ChatTurnRequest& request);

// Dispatches on the binding's provider kind. Either target may be null, in
// which case requests of that kind fail with ConfigError.
class RoutingProvider : public ChatProvider {
 public:
  RoutingProvider(ChatProvider* http, ChatProvider* scripted) : http_(http), scripted_(scripted) {}
  ChatReply complete(const ChatTurnRequest& request) override;

 private:
  ChatProvider* http_;
  ChatProvider* scripted_;
};

}  // namespace writersroom
