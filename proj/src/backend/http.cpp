// Remote chat-completions backend. POSTs the de-facto wire format to
// <base_url><completions_path> with bearer auth read from an environment
// variable, and enforces a bounded number of in-flight requests.

#include <condition_variable>
#include <cstdlib>
#include <iostream>

#include <httplib.h>
#include <json.hpp>

#include "das/backend.hpp"

namespace das::llm {

namespace {

using nlohmann::json;

// Runtime-sized counting semaphore for the in-flight limit.
class Semaphore {
 public:
  explicit Semaphore(int count) : count_(count) {}

  void acquire() {
    std::unique_lock lock(mutex_);
    cv_.wait(lock, [this] { return count_ > 0; });
    --count_;
  }

  void release() {
    {
      std::lock_guard lock(mutex_);
      ++count_;
    }
    cv_.notify_one();
  }

 private:
  std::mutex mutex_;
  std::condition_variable cv_;
  int count_;
};

struct SemaphoreGuard {
  explicit SemaphoreGuard(Semaphore& s) : sem(s) { sem.acquire(); }
  ~SemaphoreGuard() { sem.release(); }
  Semaphore& sem;
};

// Splits "https://host:1234/v1" into origin and path prefix.
std::pair<std::string, std::string> split_base_url(const std::string& base_url) {
  std::size_t scheme = base_url.find("://");
  std::size_t path = scheme == std::string::npos ? base_url.find('/')
                                                 : base_url.find('/', scheme + 3);
  if (path == std::string::npos) return {base_url, ""};
  std::string prefix = base_url.substr(path);
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  return {base_url.substr(0, path), prefix};
}

std::optional<std::chrono::milliseconds> parse_retry_after(const httplib::Response& res) {
  if (!res.has_header("Retry-After")) return std::nullopt;
  try {
    return std::chrono::milliseconds(1000 * std::stol(res.get_header_value("Retry-After")));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

struct HttpBackend::Impl {
  HttpBackendConfig config;
  std::string origin;
  std::string path_prefix;
  Semaphore in_flight;
  bool seed_notice_logged = false;
  std::mutex notice_mutex;

  explicit Impl(HttpBackendConfig cfg)
      : config(std::move(cfg)), in_flight(std::max(1, config.max_in_flight)) {
    std::tie(origin, path_prefix) = split_base_url(config.base_url);
  }
};

HttpBackend::HttpBackend(HttpBackendConfig config)
    : impl_(std::make_unique<Impl>(std::move(config))) {}

HttpBackend::~HttpBackend() = default;

std::string HttpBackend::id() const { return "http:" + impl_->config.base_url; }

Completion HttpBackend::complete(const ChatRequest& request) {
  const char* key = std::getenv(impl_->config.api_key_env.c_str());
  if (!key || !*key)
    throw AuthError("credential environment variable " + impl_->config.api_key_env + " is not set");

  json messages = json::array();
  for (const Message& m : request.messages)
    messages.push_back({{"role", std::string(role_name(m.role))}, {"content", m.content}});
  json body{{"model", request.params.model},
            {"messages", messages},
            {"temperature", request.params.temperature},
            {"max_tokens", request.params.max_output_tokens}};
  if (request.params.seed) {
    if (impl_->config.forwards_seed) {
      body["seed"] = *request.params.seed;
    } else {
      std::lock_guard lock(impl_->notice_mutex);
      if (!impl_->seed_notice_logged) {
        std::cerr << "note: backend does not support seeds; seed ignored\n";
        impl_->seed_notice_logged = true;
      }
    }
  }

  SemaphoreGuard guard(impl_->in_flight);

  httplib::Client client(impl_->origin);
  const auto timeout = impl_->config.timeout;
  client.set_connection_timeout(std::chrono::duration_cast<std::chrono::seconds>(timeout));
  client.set_read_timeout(std::chrono::duration_cast<std::chrono::seconds>(timeout));
  client.set_write_timeout(std::chrono::duration_cast<std::chrono::seconds>(timeout));
  httplib::Headers headers{{"Authorization", std::string("Bearer ") + key}};

  auto res = client.Post(impl_->path_prefix + impl_->config.completions_path, headers,
                         body.dump(), "application/json");
  if (!res) {
    switch (res.error()) {
      case httplib::Error::ConnectionTimeout:
      case httplib::Error::Read:
      case httplib::Error::Write:
        throw TimeoutError("request timed out: " + httplib::to_string(res.error()));
      default:
        throw BackendError("transport failure: " + httplib::to_string(res.error()));
    }
  }
  if (res->status == 401 || res->status == 403)
    throw AuthError("authentication rejected (HTTP " + std::to_string(res->status) + ")");
  if (res->status == 429)
    throw RateLimited("rate limited (HTTP 429)", parse_retry_after(*res));
  if (res->status == 408) throw TimeoutError("server reported timeout (HTTP 408)");
  if (res->status != 200)
    throw BackendError("unexpected HTTP status " + std::to_string(res->status));

  json parsed;
  try {
    parsed = json::parse(res->body);
  } catch (const json::parse_error& e) {
    throw MalformedResponse(std::string("response is not valid JSON: ") + e.what());
  }

  try {
    Completion completion;
    completion.text = parsed.at("choices").at(0).at("message").at("content").get<std::string>();
    if (parsed.contains("usage")) {
      TokenUsage usage;
      usage.prompt_tokens = parsed["usage"].value("prompt_tokens", 0L);
      usage.completion_tokens = parsed["usage"].value("completion_tokens", 0L);
      completion.usage = usage;
    }
    completion.backend_id = id();
    return completion;
  } catch (const json::exception& e) {
    throw MalformedResponse(std::string("response missing completion text: ") + e.what());
  }
}

}  // namespace das::llm
