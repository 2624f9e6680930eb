// Serves canned chat completions for manual runs against the http provider.
#include <csignal>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "stub_chat_server.hpp"

namespace {
volatile std::sig_atomic_t g_stop = 0;
extern "C" void on_signal(int) { g_stop = 1; }
}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local chat-completions stub"};
  writersroom::stub::StubBehavior behavior;
  app.add_option("--fail-first", behavior.fail_first, "Answer the first N requests with 503");
  app.add_flag("--always-fail", behavior.always_fail, "Answer every request with 503");
  CLI11_PARSE(app, argc, argv);

  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  writersroom::stub::StubChatServer server(behavior);
  std::cout << server.url() << std::endl;
  while (!g_stop) std::this_thread::sleep_for(std::chrono::milliseconds(100));
  return 0;
}
