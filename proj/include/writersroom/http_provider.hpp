#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "writersroom/provider.hpp"

namespace writersroom {

struct HttpOptions {
  std::chrono::milliseconds initial_backoff{500};
  double backoff_multiplier = 2.0;
  double jitter = 0.25;  // fraction of each delay, drawn uniformly in [-j, +j]
  std::uint64_t seed = 0;
};

// OpenAI-compatible chat-completions request body.
nlohmann::json build_chat_body(const ChatTurnRequest& request);

// Extracts choices[0].message.content. Throws ProtocolError on any other shape.
std::string parse_chat_body(std::string_view body);

struct Endpoint {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

// Throws ConfigError when the URL has no http or https scheme.
Endpoint split_endpoint(std::string_view url);

// One POST per attempt; connection failures, timeouts, 408, 429 and 5xx are
// retried up to binding.max_retries times with exponential backoff. The bearer
// token comes from the environment variable named by binding.api_key_env.
class HttpChatProvider : public ChatProvider {
 public:
  explicit HttpChatProvider(HttpOptions options = {}) : options_(options) {}
  ChatReply complete(const ChatTurnRequest& request) override;

 private:
  HttpOptions options_;
};

}  // namespace writersroom
