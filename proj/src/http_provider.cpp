#include "writersroom/http_provider.hpp"

#include <httplib.h>

#include <cmath>
#include <cstdlib>
#include <functional>
#include <random>
#include <thread>

#include "writersroom/errors.hpp"

namespace writersroom {

namespace {

bool is_transient(int status) { return status == 408 || status == 429 || status >= 500; }

std::pair<time_t, time_t> split_seconds(double seconds) {
  const auto whole = static_cast<time_t>(seconds);
  const auto micros = static_cast<time_t>(std::llround((seconds - whole) * 1e6));
  return {whole, micros};
}

}  // namespace

nlohmann::json build_chat_body(const ChatTurnRequest& request) {
  nlohmann::json messages = nlohmann::json::array();
  for (const auto& message : request.messages) {
    messages.push_back({{"role", std::string(to_string(message.role))}, {"content", message.text}});
  }
  return {{"model", request.binding.model_id},
          {"temperature", request.binding.temperature},
          {"messages", std::move(messages)}};
}

std::string parse_chat_body(std::string_view body) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error&) {
    throw ProtocolError("chat response is not JSON");
  }
  const auto pointer = nlohmann::json::json_pointer("/choices/0/message/content");
  if (!j.is_object() || !j.contains(pointer) || !j.at(pointer).is_string()) {
    throw ProtocolError("chat response has no choices[0].message.content string");
  }
  return j.at(pointer).get<std::string>();
}

Endpoint split_endpoint(std::string_view url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos) {
    throw ConfigError("endpoint \"" + std::string(url) + "\" has no scheme");
  }
  const auto scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") {
    throw ConfigError("endpoint scheme \"" + std::string(scheme) + "\" is not http or https");
  }
  const auto slash = url.find('/', scheme_end + 3);
  if (slash == std::string_view::npos) return {std::string(url), "/"};
  return {std::string(url.substr(0, slash)), std::string(url.substr(slash))};
}

ChatReply HttpChatProvider::complete(const ChatTurnRequest& request) {
  check_request(request);
  const auto& binding = request.binding;
  const auto endpoint = split_endpoint(binding.endpoint);
  const auto body = build_chat_body(request).dump();

  httplib::Headers headers;
  if (!binding.api_key_env.empty()) {
    if (const char* token = std::getenv(binding.api_key_env.c_str()); token && *token) {
      headers.emplace("Authorization", std::string("Bearer ") + token);
    }
  }

  // Jitter stream is per request so concurrent calls share no state.
  std::mt19937_64 rng(options_.seed ^ std::hash<std::string>{}(request.tag.key()));
  std::uniform_real_distribution<double> spread(-options_.jitter, options_.jitter);
  double delay_ms = static_cast<double>(options_.initial_backoff.count());

  const int max_attempts = binding.max_retries + 1;
  std::string last_failure;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    httplib::Client client(endpoint.origin);
    const auto [sec, usec] = split_seconds(binding.timeout_seconds);
    client.set_connection_timeout(sec, usec);
    client.set_read_timeout(sec, usec);
    client.set_write_timeout(sec, usec);

    auto result = client.Post(endpoint.path, headers, body, "application/json");
    if (result && result->status >= 200 && result->status < 300) {
      return {parse_chat_body(result->body), attempt};
    }
    if (result) {
      last_failure = "HTTP " + std::to_string(result->status);
      if (!is_transient(result->status)) {
        throw ProviderUnavailable(binding.endpoint + " rejected the request (" + last_failure + ")",
                                  attempt);
      }
    } else {
      last_failure = httplib::to_string(result.error());
    }

    if (attempt < max_attempts) {
      const auto wait = delay_ms * (1.0 + spread(rng));
      std::this_thread::sleep_for(std::chrono::duration<double, std::milli>(wait));
      delay_ms *= options_.backoff_multiplier;
    }
  }
  throw ProviderUnavailable(binding.endpoint + " unavailable after " +
                                std::to_string(max_attempts) + " attempts (" + last_failure + ")",
                            max_attempts);
}

}  // namespace writersroom
