#pragma once

#include <atomic>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

namespace writersroom::stub {

struct StubRequest {
  std::string path;
  std::string authorization;
  nlohmann::json body;
};

struct StubBehavior {
  // The first `fail_first` requests get `fail_status`; with `always_fail` every
  // request does.
  int fail_first = 0;
  bool always_fail = false;
  int fail_status = 503;
  // Builds the assistant text from the request body. Defaults to a fixed line.
  std::function<std::string(const nlohmann::json&)> reply;
  // When nonempty, sent verbatim instead of a chat-completions body.
  std::string raw_body;
};

// A local OpenAI-compatible chat endpoint bound to an ephemeral port.
class StubChatServer {
 public:
  explicit StubChatServer(StubBehavior behavior = {});
  ~StubChatServer();
  StubChatServer(const StubChatServer&) = delete;
  StubChatServer& operator=(const StubChatServer&) = delete;

  int port() const { return port_; }
  std::string url() const;  // http://127.0.0.1:<port>/v1/chat/completions

  std::vector<StubRequest> requests() const;
  int hits() const { return hits_.load(); }
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  StubBehavior behavior_;
  int port_ = 0;
  std::atomic<int> hits_{0};
  mutable std::mutex mutex_;
  std::vector<StubRequest> requests_;
  std::thread thread_;
};

}  // namespace writersroom::stub
