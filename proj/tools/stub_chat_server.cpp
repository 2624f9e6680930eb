#include "stub_chat_server.hpp"

#include <httplib.h>

namespace writersroom::stub {

struct StubChatServer::Impl {
  httplib::Server server;
};

StubChatServer::StubChatServer(StubBehavior behavior)
    : impl_(std::make_unique<Impl>()), behavior_(std::move(behavior)) {
  impl_->server.Post("/v1/chat/completions", [this](const httplib::Request& req,
                                                    httplib::Response& res) {
    const int n = ++hits_;
    StubRequest seen;
    seen.path = req.path;
    seen.authorization = req.get_header_value("Authorization");
    seen.body = nlohmann::json::parse(req.body, nullptr, false);
    {
      std::lock_guard lock(mutex_);
      requests_.push_back(seen);
    }
    if (behavior_.always_fail || n <= behavior_.fail_first) {
      res.status = behavior_.fail_status;
      res.set_content(R"({"error":"unavailable"})", "application/json");
      return;
    }
    if (!behavior_.raw_body.empty()) {
      res.set_content(behavior_.raw_body, "application/json");
      return;
    }
    const std::string text =
        behavior_.reply ? behavior_.reply(seen.body) : "The stub answered in one plain line.";
    nlohmann::json body = {
        {"id", "stub-" + std::to_string(n)},
        {"object", "chat.completion"},
        {"choices", {{{"index", 0},
                      {"message", {{"role", "assistant"}, {"content", text}}},
                      {"finish_reason", "stop"}}}}};
    res.set_content(body.dump(), "application/json");
  });
  port_ = impl_->server.bind_to_any_port("127.0.0.1");
  thread_ = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
}

StubChatServer::~StubChatServer() { stop(); }

std::string StubChatServer::url() const {
  return "http://127.0.0.1:" + std::to_string(port_) + "/v1/chat/completions";
}

std::vector<StubRequest> StubChatServer::requests() const {
  std::lock_guard lock(mutex_);
  return requests_;
}

void StubChatServer::stop() {
  impl_->server.stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace writersroom::stub
