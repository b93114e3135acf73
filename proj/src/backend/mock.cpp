#include "das/backend.hpp"

namespace das::llm {

void MockBackend::add_fixture(const ChatRequest& request, std::string text) {
  add_fixture_key(request_key(request), std::move(text));
}

void MockBackend::add_fixture_key(std::string key, std::string text) {
  std::lock_guard lock(mutex_);
  fixtures_[std::move(key)] = std::move(text);
}

void MockBackend::set_handler(Handler handler) {
  std::lock_guard lock(mutex_);
  handler_ = std::move(handler);
}

Completion MockBackend::complete(const ChatRequest& request) {
  Handler handler;
  {
    std::lock_guard lock(mutex_);
    log_.push_back(request);
    auto it = fixtures_.find(request_key(request));
    if (it != fixtures_.end()) return Completion{it->second, std::nullopt, id(), false};
    handler = handler_;
  }
  if (handler) return Completion{handler(request), std::nullopt, id(), false};
  throw MalformedResponse("mock backend has no fixture or handler for request");
}

std::vector<ChatRequest> MockBackend::requests() const {
  std::lock_guard lock(mutex_);
  return log_;
}

void MockBackend::clear_requests() {
  std::lock_guard lock(mutex_);
  log_.clear();
}

}  // namespace das::llm
